"""CLI entry point: build algebras, compute spaces, verify and decompose."""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from src.cli import build, decompose, peirce, spaces, verify
from src.cli.common import EXIT_INPUT_ERROR, MODES
from src.config.loader import LOG_LEVELS, load_settings
from src.core.logging import get_logger, setup_logging


logger = get_logger('cli')


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='derivatio',
        description="Derivatio - Lie derivations of dual extensions of path algebras"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help='Path to configuration file')
    common.add_argument('--log-level', choices=LOG_LEVELS, help='Logging level (default from config)')
    common.add_argument('--json', action='store_true', help='Write JSON to stdout')
    
    sub = parser.add_subparsers(dest='command', required=True)
    
    p = sub.add_parser('build', parents=[common], help='Build an algebra and dump its structure constants')
    p.add_argument('file', type=Path, help='Quiver file')
    p.add_argument('--mode', choices=MODES, default='dual')
    p.set_defaults(handler=build.run)
    
    p = sub.add_parser('spaces', parents=[common], help='Derivation, Lie derivation and center dimensions')
    p.add_argument('file', type=Path, help='Quiver file')
    p.add_argument('--mode', choices=MODES, default='dual')
    p.set_defaults(handler=spaces.run)
    
    p = sub.add_parser('verify', parents=[common], help='Run the check suite on one quiver')
    p.add_argument('file', type=Path, help='Quiver file')
    p.add_argument('--mode', choices=MODES, default='dual')
    p.add_argument('--map', type=Path, action='append', help='Map fixture to check (repeatable)')
    p.set_defaults(handler=verify.run)
    
    p = sub.add_parser('decompose', parents=[common], help='Standard decomposition of a Lie derivation')
    p.add_argument('file', type=Path, nargs='?', help='Quiver file (optional when the map is a fixture)')
    p.add_argument('--map', type=Path, required=True, help='Map file (JSON matrix or YAML fixture)')
    p.add_argument('--mode', choices=MODES, default=None)
    p.add_argument('--variant', help='Fixture variant (default: the first)')
    p.add_argument('--param', action='append', metavar='NAME=VALUE', help='Fixture parameter (repeatable)')
    p.set_defaults(handler=decompose.run)
    
    p = sub.add_parser('peirce', parents=[common], help='Peirce decomposition report')
    p.add_argument('file', type=Path, help='Quiver file')
    p.add_argument('--mode', choices=MODES, default='dual')
    p.add_argument('--vertex', action='append', help='Vertex of the idempotent (repeatable; default 1 - e_source)')
    p.add_argument('--map', type=Path, help='JSON map to analyse in block form')
    p.set_defaults(handler=peirce.run)
    
    p = sub.add_parser('corpus', parents=[common], help='Verify the bundled corpus and random quivers')
    p.add_argument('--seed', type=int, help='Seed for the random quivers')
    p.add_argument('--entry', action='append', help='Only this manifest entry (repeatable)')
    p.add_argument('--no-random', action='store_true', help='Skip the random quivers')
    p.set_defaults(handler=verify.run_corpus)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for CLI."""
    args = _parser().parse_args(argv)
    try:
        settings = load_settings(args.config)
        level = args.log_level or ('WARNING' if args.json else settings.logging.level)
        setup_logging(log_level=level, log_file=None, detailed=settings.logging.detailed)
        return args.handler(args)
    except (ValueError, FileNotFoundError) as e:
        logger.debug(f"{args.command} failed on input", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
