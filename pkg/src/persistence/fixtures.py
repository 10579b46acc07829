"""Map fixtures: linear maps given by the images of basis labels.

    name: chain-relation-lie-derivation
    quiver: chain_relation.quiver
    mode: dual
    parameters: [k1, k2, k3]
    images:
      e1: {"1": k1, "α*.α": 1}
      α: {α: 1}
    variants:
      beta: {β: {β: 1}}
    samples:
      - {k1: 1, k2: 2, k3: 3}
    expected_central:
      e1: {"1": k1, "α*.α": 1}
    derivation: false

Coefficients are integers, ``"p/q"`` strings or parameter names. The label
``"1"`` stands for the unit. Labels without an image are sent to zero.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

from src.config.loader import load_config
from src.core.rational import to_scalar
from src.models.algebra import Element, FiniteDimAlgebra
from src.models.linear_map import LinearMap

Images = Dict[str, Dict[str, Any]]


@dataclass(frozen=True)
class MapFixture:
    """A parametrised family of linear maps on a named algebra.
    
    Attributes:
        name: Fixture name
        quiver: Quiver file the algebra is built from (relative to the fixture)
        mode: Extension kind the images refer to
        parameters: Free parameter names
        images: label -> {label: coefficient}
        variants: variant name -> replacement images for selected labels
        samples: Parameter assignments to instantiate
        expected_central: label -> expected image under the central part
        derivation: Whether the Lie variant is expected to be a derivation (None: unchecked)
    """
    name: str
    quiver: str
    mode: str
    parameters: Tuple[str, ...] = ()
    images: Images = field(default_factory=dict)
    variants: Dict[str, Images] = field(default_factory=dict)
    samples: Tuple[Dict[str, Any], ...] = ()
    expected_central: Images = field(default_factory=dict)
    derivation: Optional[bool] = None
    
    @property
    def variant_names(self) -> List[str]:
        return list(self.variants)
    
    def images_for(self, variant: Optional[str] = None) -> Images:
        """Base images with a variant's replacements applied."""
        images = {label: dict(image) for label, image in self.images.items()}
        if variant is not None:
            if variant not in self.variants:
                raise ValueError(
                    f"Fixture {self.name}: unknown variant '{variant}', expected one of {self.variant_names}"
                )
            images.update({label: dict(image) for label, image in self.variants[variant].items()})
        return images
    
    def instantiate(
        self,
        alg: FiniteDimAlgebra,
        variant: Optional[str] = None,
        sample: Optional[Mapping[str, Any]] = None
    ) -> LinearMap:
        """The concrete map for a variant and parameter sample."""
        images = self.images_for(variant)
        columns: List[Dict[int, Fraction]] = [{} for _ in range(alg.dim)]
        for label, image in images.items():
            column = alg.index_of(label)
            columns[column] = evaluate(alg, image, self.parameters, sample).support()
        return LinearMap(alg.dim, columns)
    
    def expected_image(self, alg: FiniteDimAlgebra, label: str, sample: Optional[Mapping[str, Any]] = None) -> Element:
        return evaluate(alg, self.expected_central[label], self.parameters, sample)


def _coefficient(value: Any, parameters: Tuple[str, ...], sample: Optional[Mapping[str, Any]]) -> Fraction:
    if isinstance(value, str) and value in parameters:
        if sample is None or value not in sample:
            raise ValueError(f"No value for parameter '{value}'")
        return to_scalar(sample[value])
    return to_scalar(value)


def evaluate(
    alg: FiniteDimAlgebra,
    image: Mapping[str, Any],
    parameters: Tuple[str, ...] = (),
    sample: Optional[Mapping[str, Any]] = None
) -> Element:
    """Element Σ coefficient·label; parameters are looked up in ``sample``."""
    return alg.element({label: _coefficient(v, parameters, sample) for label, v in image.items()})


def _images(data: Any, where: str) -> Images:
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"{where} must be a mapping of label -> image")
    result = {}
    for label, image in data.items():
        if not isinstance(image, dict):
            raise ValueError(f"{where}: image of '{label}' must be a mapping of label -> coefficient")
        result[str(label)] = {str(k): v for k, v in image.items()}
    return result


def fixture_from_dict(data: Dict[str, Any]) -> MapFixture:
    """Validate a parsed fixture mapping.
    
    Raises:
        ValueError: If required keys are missing or have the wrong shape
    """
    for key in ('name', 'quiver', 'images'):
        if key not in data:
            raise ValueError(f"Map fixture is missing '{key}'")
    variants = data.get('variants') or {}
    if not isinstance(variants, dict):
        raise ValueError("Map fixture 'variants' must be a mapping")
    samples = data.get('samples') or []
    if not isinstance(samples, list) or not all(isinstance(s, dict) for s in samples):
        raise ValueError("Map fixture 'samples' must be a list of mappings")
    parameters = data.get('parameters') or []
    if data.get('derivation') not in (None, True, False):
        raise ValueError("Map fixture 'derivation' must be true or false")
    return MapFixture(
        name=str(data['name']),
        quiver=str(data['quiver']),
        mode=str(data.get('mode', 'dual')),
        parameters=tuple(str(p) for p in parameters),
        images=_images(data['images'], 'images'),
        variants={str(k): _images(v, f"variant '{k}'") for k, v in variants.items()},
        samples=tuple(dict(s) for s in samples),
        expected_central=_images(data.get('expected_central'), 'expected_central'),
        derivation=data.get('derivation'),
    )


def load_fixture(path: Path) -> MapFixture:
    """Read a YAML or JSON map fixture."""
    return fixture_from_dict(load_config(path))


def is_fixture_file(path: Path) -> bool:
    """Fixture files are YAML, or JSON with an 'images' key."""
    return path.suffix.lower() in ('.yml', '.yaml') or (
        path.suffix.lower() == '.json' and 'images' in load_config(path)
    )
