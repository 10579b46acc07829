"""JSON serialisation of algebras, maps, spaces and reports.

Rationals are written as reduced ``"p/q"`` strings and every list follows
the canonical basis order, so identical inputs give byte-identical output.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.algebra.dual_extension import DualExtensionAlgebra
from src.algebra.spaces import StandardDecomposition
from src.core.linalg import SparseRow
from src.core.rational import format_scalar, to_scalar
from src.models.algebra import FiniteDimAlgebra
from src.models.linear_map import LinearMap, MapSpace, Subspace


def dumps(data: Any) -> str:
    """Deterministic JSON text (UTF-8 labels kept as-is)."""
    return json.dumps(data, ensure_ascii=False, indent=2)


def write_json(data: Any, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data) + '\n', encoding='utf-8')


def algebra_to_dict(alg: FiniteDimAlgebra) -> Dict[str, Any]:
    table = []
    for (i, j) in sorted(alg.table):
        row = alg.table[(i, j)]
        table.append([i, j, [[k, format_scalar(row[k])] for k in sorted(row)]])
    return {'basis': alg.labels, 'dim': alg.dim, 'table': table}


def extension_to_dict(dx: DualExtensionAlgebra) -> Dict[str, Any]:
    """Algebra dump plus the (q*, p) factorisation of each basis path."""
    data = algebra_to_dict(dx.algebra)
    data['kind'] = dx.kind
    data['shape'] = [[q_star.label, p.label] for q_star, p in dx.shape()]
    return data


def vector_to_dict(alg: FiniteDimAlgebra, vector: SparseRow) -> Dict[str, str]:
    """{basis label: "p/q"} in basis order."""
    return {alg.label(k): format_scalar(vector[k]) for k in sorted(vector)}


def subspace_to_dict(alg: FiniteDimAlgebra, space: Subspace) -> Dict[str, Any]:
    return {'dim': space.dim, 'vectors': [vector_to_dict(alg, v) for v in space.basis]}


def map_to_dict(alg: FiniteDimAlgebra, theta: LinearMap) -> Dict[str, Any]:
    """LinearMap file: columns are images of basis elements."""
    return {
        'basis': alg.labels,
        'matrix': [[format_scalar(c) for c in row] for row in theta.matrix()],
    }


def map_from_dict(alg: FiniteDimAlgebra, data: Dict[str, Any]) -> LinearMap:
    """Inverse of ``map_to_dict``.
    
    Raises:
        ValueError: If the basis differs from the algebra's or the matrix is malformed
    """
    if not isinstance(data, dict):
        raise ValueError("Map file must be a JSON object with a 'matrix' key")
    basis = data.get('basis')
    if basis is not None and list(basis) != alg.labels:
        raise ValueError(f"Map basis {basis} does not match the algebra basis {alg.labels}")
    matrix = data.get('matrix')
    if not isinstance(matrix, list) or len(matrix) != alg.dim:
        raise ValueError(f"Map matrix must have {alg.dim} rows")
    for i, row in enumerate(matrix):
        if not isinstance(row, list):
            raise ValueError(f"Map matrix row {i} must be a list, got {type(row).__name__}")
    return LinearMap.from_matrix([[to_scalar(c) for c in row] for row in matrix])


def load_map_file(alg: FiniteDimAlgebra, path: Path) -> LinearMap:
    if not path.exists():
        raise FileNotFoundError(f"Map file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to parse map file: {e}") from e
    return map_from_dict(alg, data)


def space_to_dict(alg: FiniteDimAlgebra, space: MapSpace) -> Dict[str, Any]:
    """MapSpace dump; matrices in pivot order."""
    return {
        'dim': space.dim,
        'maps': [map_to_dict(alg, m)['matrix'] for m in space.basis],
    }


def decomposition_to_dict(alg: FiniteDimAlgebra, decomposition: StandardDecomposition) -> Dict[str, Any]:
    return {
        'basis': alg.labels,
        'unique': decomposition.unique,
        'derivation_part': map_to_dict(alg, decomposition.derivation_part)['matrix'],
        'central_part': map_to_dict(alg, decomposition.central_part)['matrix'],
    }


def images_to_dict(alg: FiniteDimAlgebra, theta: LinearMap, labels: Optional[Sequence[str]] = None) -> Dict[str, Dict[str, str]]:
    """{label: image} for the given labels (all basis elements by default)."""
    labels = list(labels) if labels is not None else alg.labels
    return {label: vector_to_dict(alg, theta.column(alg.index_of(label))) for label in labels}
