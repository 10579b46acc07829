"""Configuration loader for YAML and JSON settings files."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

try:
    import yaml
    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False


DEFAULT_MANIFEST = Path(__file__).resolve().parent.parent / 'corpus' / 'data' / 'corpus.yaml'

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def load_config(config_path: Path) -> Dict[str, Any]:
    """Load configuration from a YAML or JSON file.
    
    Args:
        config_path: Path to configuration file (.yml, .yaml, or .json)
        
    Returns:
        Dictionary containing configuration data
        
    Raises:
        FileNotFoundError: If config file doesn't exist
        ValueError: If file format is not supported or invalid
    """
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")
    
    suffix = config_path.suffix.lower()
    
    if suffix in ('.yml', '.yaml'):
        if not YAML_AVAILABLE:
            raise ValueError(
                "YAML support not available. Install PyYAML: pip install pyyaml"
            )
        return _load_yaml(config_path)
    elif suffix == '.json':
        return _load_json(config_path)
    else:
        raise ValueError(
            f"Unsupported config file format: {suffix}. "
            "Supported formats: .yml, .yaml, .json"
        )


def _load_yaml(config_path: Path) -> Dict[str, Any]:
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ValueError(f"Failed to parse YAML config: {e}")
    if not isinstance(data, dict):
        raise ValueError("Config file must contain a dictionary/mapping")
    return data


def _load_json(config_path: Path) -> Dict[str, Any]:
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to parse JSON config: {e}")
    if not isinstance(data, dict):
        raise ValueError("Config file must contain a dictionary/object")
    return data


@dataclass(frozen=True)
class LoggingSettings:
    level: str = 'INFO'
    detailed: bool = False


@dataclass(frozen=True)
class CorpusSettings:
    manifest: Path = DEFAULT_MANIFEST


@dataclass(frozen=True)
class RandomSettings:
    """Seeded random quiver generation.
    
    Attributes:
        count: Number of random quivers in a corpus run
        seed: Base seed; quiver k uses a generator derived from (seed, k)
        max_vertices: Upper bound on vertices per quiver
        max_arrows: Upper bound on arrows per quiver
        relation_probability: Chance of turning a composable arrow pair into a relation
        max_dual_dim: Quivers whose dual extension is larger are re-drawn
        max_attempts: Re-draw limit per quiver
    """
    count: int = 10
    seed: int = 20240601
    max_vertices: int = 5
    max_arrows: int = 6
    relation_probability: float = 0.35
    max_dual_dim: int = 24
    max_attempts: int = 200


def _default_samples() -> Tuple[Dict[str, int], ...]:
    return ({'k1': 0, 'k2': 0, 'k3': 0}, {'k1': 1, 'k2': 2, 'k3': 3})


@dataclass(frozen=True)
class Settings:
    """All runtime settings."""
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    corpus: CorpusSettings = field(default_factory=CorpusSettings)
    random: RandomSettings = field(default_factory=RandomSettings)
    samples: Tuple[Dict[str, Any], ...] = field(default_factory=_default_samples)
    
    def with_seed(self, seed: Optional[int]) -> 'Settings':
        """Copy with ``random.seed`` replaced (None keeps the current seed)."""
        if seed is None:
            return self
        random = RandomSettings(**{**self.random.__dict__, 'seed': seed})
        return Settings(self.logging, self.corpus, random, self.samples)


def _section(data: Dict[str, Any], name: str, allowed: Dict[str, type]) -> Dict[str, Any]:
    section = data.get(name, {}) or {}
    if not isinstance(section, dict):
        raise ValueError(f"Config section '{name}' must be a mapping")
    result = {}
    for key, value in section.items():
        if key not in allowed:
            raise ValueError(f"Unknown config key '{name}.{key}'")
        expected = allowed[key]
        if expected is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if (isinstance(value, bool) and expected is not bool) or not isinstance(value, expected):
            raise ValueError(
                f"Config key '{name}.{key}' must be of type {expected.__name__}, got {type(value).__name__}"
            )
        result[key] = value
    return result


def settings_from_dict(data: Dict[str, Any], base_dir: Optional[Path] = None) -> Settings:
    """Validate a configuration mapping into Settings.
    
    Args:
        data: Parsed configuration
        base_dir: Directory relative manifest paths are resolved against
        
    Raises:
        ValueError: On unknown keys, wrong types or out-of-range values
    """
    for key in data:
        if key not in ('logging', 'corpus', 'random', 'samples'):
            raise ValueError(f"Unknown config key '{key}'")
    
    log = _section(data, 'logging', {'level': str, 'detailed': bool})
    if 'level' in log:
        log['level'] = log['level'].upper()
        if log['level'] not in LOG_LEVELS:
            raise ValueError(f"logging.level must be one of {LOG_LEVELS}, got '{log['level']}'")
    
    corpus = _section(data, 'corpus', {'manifest': str})
    if 'manifest' in corpus:
        manifest = Path(corpus['manifest'])
        if not manifest.is_absolute() and base_dir is not None:
            manifest = base_dir / manifest
        corpus['manifest'] = manifest
    
    rnd = _section(data, 'random', {
        'count': int, 'seed': int, 'max_vertices': int, 'max_arrows': int,
        'relation_probability': float, 'max_dual_dim': int, 'max_attempts': int,
    })
    random = RandomSettings(**rnd)
    if random.count < 0:
        raise ValueError("random.count cannot be negative")
    if random.max_vertices < 1:
        raise ValueError("random.max_vertices must be at least 1")
    if random.max_arrows < 0:
        raise ValueError("random.max_arrows cannot be negative")
    if not 0.0 <= random.relation_probability <= 1.0:
        raise ValueError("random.relation_probability must be between 0 and 1")
    if random.max_dual_dim < 1 or random.max_attempts < 1:
        raise ValueError("random.max_dual_dim and random.max_attempts must be positive")
    
    samples = data.get('samples')
    if samples is None:
        samples = _default_samples()
    else:
        if not isinstance(samples, list) or not all(isinstance(s, dict) for s in samples):
            raise ValueError("samples must be a list of parameter mappings")
        samples = tuple(dict(s) for s in samples)
    
    return Settings(LoggingSettings(**log), CorpusSettings(**corpus), random, samples)


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """Load Settings from a file, or the defaults when no path is given."""
    if config_path is None:
        return Settings()
    return settings_from_dict(load_config(config_path), base_dir=config_path.parent)
