"""`peirce`: Peirce decomposition report at a sum of vertex idempotents."""

from argparse import Namespace
from typing import Any, Dict, List, Optional

from src.algebra.peirce import (
    block_closure_witness, bimodule_annihilator, extract_block_data, find_standardizing_maps,
    g_defect, pairing_image, peirce_decompose, source_complement, vertex_sum,
    verify_der_block_conditions, verify_lie_block_conditions
)
from src.algebra.spaces import derivation_space, lie_derivation_space
from src.cli.common import EXIT_FAILED, EXIT_OK, heading, load_algebra, print_json
from src.core.errors import PeirceError
from src.models.algebra import Element
from src.models.linear_map import LinearMap, MapSpace
from src.models.peirce import BLOCKS, PeirceView
from src.models.report import ConditionReport
from src.persistence.json_dump import load_map_file, vector_to_dict

ANNIHILATORS = (('M', 'left'), ('M', 'right'), ('N', 'left'), ('N', 'right'))


def _fold(verdicts: Dict[str, bool], report: ConditionReport) -> None:
    for result in report.results:
        verdicts[result.name] = verdicts.get(result.name, True) and result.passed


def _block_verdicts(view: PeirceView, lie: MapSpace, der: MapSpace) -> Dict[str, bool]:
    """Per-condition verdicts over every Lie derivation and derivation basis element."""
    verdicts: Dict[str, bool] = {'block-closure': block_closure_witness(view) is None}
    lie_form, feasible = True, True
    for theta in lie.basis:
        try:
            data = extract_block_data(view, theta)
        except PeirceError:
            lie_form = False
            continue
        _fold(verdicts, verify_lie_block_conditions(view, data))
        _fold(verdicts, g_defect(view, data))
        feasible = feasible and find_standardizing_maps(view, data) is not None
    verdicts['lie-block-form'] = lie_form
    verdicts['standardizing-maps-exist'] = feasible
    der_verdicts: Dict[str, bool] = {}
    for theta in der.basis:
        try:
            _fold(der_verdicts, verify_der_block_conditions(view, extract_block_data(view, theta)))
        except PeirceError:
            der_verdicts['block-form'] = False
    verdicts.update({f'der:{name}': passed for name, passed in der_verdicts.items()})
    return dict(sorted(verdicts.items()))


def peirce_report(
    view: PeirceView,
    lie: Optional[MapSpace] = None,
    der: Optional[MapSpace] = None,
    theta: Optional[LinearMap] = None
) -> Dict[str, Any]:
    """Block dimensions and bases, pairings, annihilators and condition verdicts."""
    alg = view.algebra
    report: Dict[str, Any] = {
        'idempotent': list(view.support) if view.support is not None else vector_to_dict(alg, view.e.support()),
        'dims': view.dims,
        'bases': {block: view.basis_labels(block) for block in BLOCKS},
        'pairings': {side: pairing_image(view, side).dim for side in ('MN', 'NM')},
        'annihilators': {},
    }
    for module, side in ANNIHILATORS:
        space = bimodule_annihilator(view, module, side)
        report['annihilators'][f'{module}-{side}'] = {
            'faithful': space.is_zero(),
            'basis': [vector_to_dict(alg, v) for v in space.basis],
            'elements': [alg.describe(Element.from_sparse(alg.dim, v)) for v in space.basis],
        }
    if lie is not None and der is not None:
        report['conditions'] = _block_verdicts(view, lie, der)
    if theta is not None:
        report['map'] = _map_report(view, theta)
    return report


def _map_report(view: PeirceView, theta: LinearMap) -> Dict[str, Any]:
    alg = view.algebra
    try:
        data = extract_block_data(view, theta)
    except PeirceError as e:
        return {'block_form': False, 'reason': str(e)}
    lie = verify_lie_block_conditions(view, data)
    der = verify_der_block_conditions(view, data)
    return {
        'block_form': True,
        'm0': vector_to_dict(alg, data.m0.support()),
        'n0': vector_to_dict(alg, data.n0.support()),
        'lie_conditions': {r.name: r.passed for r in lie.results},
        'der_conditions': {r.name: r.passed for r in der.results},
        'g_map': {r.name: r.passed for r in g_defect(view, data).results},
        'standardizing_maps_exist': find_standardizing_maps(view, data) is not None,
    }


def _idempotent_view(alg, extension, vertices: Optional[List[str]]) -> PeirceView:
    if vertices:
        return peirce_decompose(alg, vertex_sum(alg, vertices))
    quiver = extension.source_quiver if extension is not None else alg.quiver
    return peirce_decompose(alg, source_complement(alg, quiver.sources()[0]))


def run(args: Namespace) -> int:
    alg, extension = load_algebra(args.file, args.mode)
    view = _idempotent_view(alg, extension, args.vertex)
    theta = load_map_file(alg, args.map) if args.map else None
    report = peirce_report(view, lie_derivation_space(alg), derivation_space(alg), theta)
    passed = all(report['conditions'].values())
    if args.json:
        print_json(report)
        return EXIT_OK if passed else EXIT_FAILED
    
    heading(f"Peirce decomposition of {args.file.stem} at {' + '.join(f'e{v}' for v in (view.support or ()))}")
    print(f"{'Block':<8} {'Dim':<5} Basis")
    print("-" * 60)
    for block in BLOCKS:
        print(f"{block:<8} {view.dim(block):<5} {', '.join(report['bases'][block])}")
    print(f"\nPairing images: M·N dim {report['pairings']['MN']}, N·M dim {report['pairings']['NM']}")
    print("\nAnnihilators:")
    for name, entry in report['annihilators'].items():
        print(f"  {name:<10} {'faithful' if entry['faithful'] else ', '.join(entry['elements'])}")
    print("\nConditions:")
    for name, ok in report['conditions'].items():
        print(f"  {name:<45} {'pass' if ok else 'FAIL'}")
    if 'map' in report:
        print(f"\nMap: {report['map']}")
    return EXIT_OK if passed else EXIT_FAILED
