"""Corpus manifest: which quiver files are verified in which modes."""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebra.dual_extension import DUAL, ONEPOINT, build_extension
from src.config.loader import Settings, load_config
from src.core.logging import get_logger
from src.corpus.random_quivers import generate_quivers
from src.engine.context import VerificationContext
from src.models.quiver import Quiver
from src.parsing.quiver_dsl import parse_quiver_file
from src.persistence.fixtures import MapFixture, load_fixture


logger = get_logger('corpus')

DATA_DIR = Path(__file__).resolve().parent / 'data'

MODES = (DUAL, ONEPOINT)


@dataclass(frozen=True)
class CorpusEntry:
    """One manifest entry.
    
    Attributes:
        name: Entry name, used as the instance prefix
        file: Quiver file
        modes: Extension kinds to verify
        fixtures: Map fixture files for this quiver
    """
    name: str
    file: Path
    modes: Tuple[str, ...] = (DUAL,)
    fixtures: Tuple[Path, ...] = ()
    
    def __post_init__(self):
        for mode in self.modes:
            if mode not in MODES:
                raise ValueError(f"Corpus entry {self.name}: unknown mode '{mode}', expected one of {MODES}")


def entries_from_dict(data: Dict[str, Any], base_dir: Path) -> List[CorpusEntry]:
    """Validate a parsed manifest.
    
    Raises:
        ValueError: On missing keys, duplicate names or unknown modes
    """
    raw = data.get('entries')
    if not isinstance(raw, list):
        raise ValueError("Corpus manifest must have an 'entries' list")
    entries = []
    seen = set()
    for item in raw:
        if not isinstance(item, dict) or 'name' not in item or 'file' not in item:
            raise ValueError(f"Corpus entry needs 'name' and 'file': {item}")
        name = str(item['name'])
        if name in seen:
            raise ValueError(f"Duplicate corpus entry '{name}'")
        seen.add(name)
        entries.append(CorpusEntry(
            name=name,
            file=base_dir / item['file'],
            modes=tuple(item.get('modes', [DUAL])),
            fixtures=tuple(base_dir / f for f in item.get('fixtures', [])),
        ))
    return entries


def load_manifest(path: Path) -> List[CorpusEntry]:
    """Read a corpus manifest (YAML or JSON)."""
    return entries_from_dict(load_config(path), path.parent)


def quiver_contexts(
    name: str,
    quiver: Quiver,
    modes: Sequence[str],
    fixtures: Sequence[MapFixture] = (),
    samples: Sequence[Mapping[str, Any]] = ()
) -> List[VerificationContext]:
    """One context per mode; one-point modes need at least two vertices and are dropped otherwise."""
    contexts = []
    for mode in modes:
        if mode == ONEPOINT and len(quiver.vertices) < 2:
            logger.debug(f"{name}: one vertex, no one-point extension")
            continue
        extension = build_extension(quiver, mode)
        attached = [f for f in fixtures if f.mode == mode]
        contexts.append(VerificationContext(f"{name}/{mode}", extension, attached, samples))
    return contexts


def entry_contexts(entry: CorpusEntry, samples: Sequence[Mapping[str, Any]] = ()) -> List[VerificationContext]:
    """Build the extensions of one manifest entry."""
    quiver = parse_quiver_file(entry.file)
    fixtures = [load_fixture(path) for path in entry.fixtures]
    return quiver_contexts(entry.name, quiver, entry.modes, fixtures, samples)


def corpus_contexts(
    settings: Settings,
    names: Optional[Sequence[str]] = None,
    include_random: bool = True
) -> List[VerificationContext]:
    """Contexts for the manifest entries followed by the seeded random quivers.
    
    Args:
        settings: Runtime settings (manifest path, random generation, samples)
        names: Restrict to these manifest entries
        include_random: Append the random quivers
        
    Raises:
        ValueError: If a requested entry is not in the manifest
    """
    entries = load_manifest(settings.corpus.manifest)
    if names:
        known = {e.name for e in entries}
        for name in names:
            if name not in known:
                raise ValueError(f"Unknown corpus entry '{name}', expected one of {sorted(known)}")
        entries = [e for e in entries if e.name in names]
    contexts = []
    for entry in entries:
        contexts.extend(entry_contexts(entry, settings.samples))
    if include_random:
        for name, quiver in generate_quivers(settings.random):
            contexts.extend(quiver_contexts(name, quiver, MODES))
    logger.info(f"Corpus: {len(contexts)} instances")
    return contexts
