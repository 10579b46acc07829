"""`verify` and `corpus`: run the check suite and report."""

from argparse import Namespace

from src.cli.common import EXIT_FAILED, EXIT_OK, PLAIN, heading, print_json, settings_for
from src.corpus.manifest import corpus_contexts, quiver_contexts
from src.engine.verifier import Verifier
from src.models.report import ReportBundle
from src.parsing.quiver_dsl import parse_quiver_file
from src.persistence.fixtures import load_fixture


def print_bundle(bundle: ReportBundle) -> None:
    """Human-readable report: one line per record, then the failures."""
    heading("Verification")
    print(f"{'Instance':<28} {'Check':<30} {'Verdict':<15} {'Time':>8}")
    print("-" * 84)
    for record in bundle.records:
        print(f"{record.instance:<28} {record.check_id:<30} {record.verdict:<15} {record.elapsed:>7.2f}s")
    failures = bundle.failures()
    if failures:
        heading("Failures")
        for record in failures:
            print(f"{record.instance} / {record.check_id} [{record.anchor}]: {record.message}")
            for witness in record.witnesses:
                print(f"    {witness}")
    counts = bundle.counts()
    print(f"\n{len(bundle)} checks: " + ', '.join(f"{n} {verdict}" for verdict, n in counts.items()))
    print(f"Total time: {bundle.total_elapsed():.2f}s")


def _finish(args: Namespace, bundle: ReportBundle) -> int:
    if args.json:
        print_json(bundle.to_dict())
    else:
        print_bundle(bundle)
    return EXIT_OK if bundle.passed else EXIT_FAILED


def run(args: Namespace) -> int:
    """Verify one quiver file in one extension mode."""
    if args.mode == PLAIN:
        raise ValueError("verify works on extensions; use --mode dual or --mode onepoint")
    settings = settings_for(args)
    quiver = parse_quiver_file(args.file)
    fixtures = [load_fixture(path) for path in (args.map or [])]
    contexts = quiver_contexts(args.file.stem, quiver, [args.mode], fixtures, settings.samples)
    if not contexts:
        raise ValueError(f"{args.file}: a one-point extension needs at least two vertices")
    return _finish(args, Verifier().verify_all(contexts))


def run_corpus(args: Namespace) -> int:
    """Verify every manifest entry, its fixtures and the seeded random quivers."""
    settings = settings_for(args)
    contexts = corpus_contexts(settings, names=args.entry, include_random=not args.no_random)
    return _finish(args, Verifier().verify_all(contexts))
