"""`decompose`: split a Lie derivation as Θ = D + Δ."""

from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.algebra.spaces import decompose_standard
from src.cli.common import EXIT_FAILED, EXIT_OK, heading, load_algebra, print_json, settings_for
from src.core.errors import DecompositionError
from src.core.logging import get_logger
from src.models.algebra import Element
from src.persistence.fixtures import is_fixture_file, load_fixture
from src.persistence.json_dump import decomposition_to_dict, images_to_dict, load_map_file


logger = get_logger('cli.decompose')


def parse_params(items: Optional[List[str]]) -> Dict[str, Any]:
    """``k1=1 k2=1/2`` -> {'k1': '1', 'k2': '1/2'}."""
    params = {}
    for item in items or []:
        name, sep, value = item.partition('=')
        if not sep or not name:
            raise ValueError(f"Parameter must be NAME=VALUE, got '{item}'")
        params[name.strip()] = value.strip()
    return params


def run(args: Namespace) -> int:
    map_path: Path = args.map
    if not map_path.exists():
        raise FileNotFoundError(f"Map file not found: {map_path}")
    fixture = load_fixture(map_path) if is_fixture_file(map_path) else None
    file = args.file
    mode = args.mode
    if fixture is not None:
        file = file or map_path.parent / fixture.quiver
        mode = fixture.mode if mode is None else mode
    if file is None:
        raise ValueError("A quiver file is required unless the map is a fixture naming one")
    alg, _ = load_algebra(file, mode or 'dual')
    
    if fixture is not None:
        variant = args.variant or (fixture.variant_names[0] if fixture.variant_names else None)
        sample = parse_params(args.param) or (
            dict(fixture.samples[0]) if fixture.samples else dict(settings_for(args).samples[0])
        )
        theta = fixture.instantiate(alg, variant, sample)
        name = f"{fixture.name}:{variant}" if variant else fixture.name
    else:
        theta = load_map_file(alg, map_path)
        name = map_path.stem
    
    try:
        split = decompose_standard(alg, theta)
    except DecompositionError as e:
        logger.warning(f"{name}: {e}")
        if args.json:
            print_json({'map': name, 'status': 'fail', 'reason': str(e)})
        else:
            print(f"{name}: no standard decomposition ({e})")
        return EXIT_FAILED
    
    if args.json:
        data = {'map': name, 'status': 'pass'}
        data.update(decomposition_to_dict(alg, split))
        data['central_images'] = images_to_dict(alg, split.central_part)
        print_json(data)
        return EXIT_OK
    
    heading(f"Standard decomposition of {name}")
    print(f"Unique: {split.unique}")
    print(f"\n{'Basis':<15} {'D':<30} Δ")
    print("-" * 70)
    for label in alg.labels:
        d = alg.describe(Element.from_sparse(alg.dim, split.derivation_part.column(alg.index_of(label))))
        c = alg.describe(Element.from_sparse(alg.dim, split.central_part.column(alg.index_of(label))))
        print(f"{label:<15} {d:<30} {c}")
    return EXIT_OK
