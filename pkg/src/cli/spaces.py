"""`spaces`: derivations, Lie derivations, center and central-annihilating maps."""

from argparse import Namespace

from src.algebra.spaces import center, central_annihilating_maps, derivation_space, lie_derivation_space
from src.cli.common import EXIT_OK, heading, load_algebra, print_json
from src.models.algebra import Element
from src.persistence.json_dump import space_to_dict, subspace_to_dict


def run(args: Namespace) -> int:
    alg, _ = load_algebra(args.file, args.mode)
    der = derivation_space(alg)
    lie = lie_derivation_space(alg)
    z = center(alg)
    central = central_annihilating_maps(alg, z)
    dimensions = {
        'derivations': der.dim,
        'lie_derivations': lie.dim,
        'center': z.dim,
        'central_annihilating': central.dim,
    }
    if args.json:
        print_json({
            'basis': alg.labels,
            'dimensions': dimensions,
            'derivations': space_to_dict(alg, der),
            'lie_derivations': space_to_dict(alg, lie),
            'center': subspace_to_dict(alg, z),
            'central_annihilating': space_to_dict(alg, central),
        })
        return EXIT_OK
    
    heading(f"Spaces of {args.file.stem} ({args.mode}, dim {alg.dim})")
    for name, dim in dimensions.items():
        print(f"  {name:<22} {dim}")
    print("\nCenter basis:")
    for vector in z.basis:
        print(f"  {alg.describe(Element.from_sparse(alg.dim, vector))}")
    return EXIT_OK
