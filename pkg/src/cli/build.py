"""`build`: construct an algebra and dump its basis and structure constants."""

from argparse import Namespace

from src.cli.common import EXIT_OK, heading, load_algebra, print_json
from src.core.rational import pretty_scalar
from src.persistence.json_dump import algebra_to_dict, extension_to_dict


def run(args: Namespace) -> int:
    alg, extension = load_algebra(args.file, args.mode)
    if args.json:
        print_json(extension_to_dict(extension) if extension is not None else algebra_to_dict(alg))
        return EXIT_OK
    
    heading(f"{alg.name or args.file.stem} ({args.mode})")
    print(f"Dimension: {alg.dim}")
    print(f"Basis: {', '.join(alg.labels)}")
    if extension is not None:
        print("\nBasis shapes (q* · p):")
        for path, (q_star, p) in zip(alg.basis, extension.shape()):
            print(f"  {path.label:<20} = {q_star.label} · {p.label}")
    print("\nNonzero products:")
    print(f"  {'Left':<15} {'Right':<15} Product")
    print("  " + "-" * 50)
    for (i, j) in sorted(alg.table):
        product = ' + '.join(
            f"{pretty_scalar(c)}·{alg.label(k)}" if c != 1 else alg.label(k)
            for k, c in sorted(alg.table[(i, j)].items())
        )
        print(f"  {alg.label(i):<15} {alg.label(j):<15} {product}")
    return EXIT_OK
