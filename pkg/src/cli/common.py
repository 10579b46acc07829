"""Helpers shared by the subcommands."""

from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from src.algebra.dual_extension import DualExtensionAlgebra, build_base_algebra, build_extension
from src.config.loader import Settings, load_settings
from src.models.algebra import FiniteDimAlgebra
from src.parsing.quiver_dsl import parse_quiver_file
from src.persistence.json_dump import dumps

PLAIN = 'plain'
MODES = (PLAIN, 'dual', 'onepoint')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2


def load_algebra(file: Path, mode: str) -> Tuple[FiniteDimAlgebra, Optional[DualExtensionAlgebra]]:
    """Parse a quiver file and build Λ (plain) or one of its extensions.
    
    Returns:
        The algebra and, for extension modes, the extension record
    """
    quiver = parse_quiver_file(file)
    if mode == PLAIN:
        alg = build_base_algebra(quiver)
        return alg, None
    extension = build_extension(quiver, mode)
    return extension.algebra, extension


def settings_for(args: Namespace) -> Settings:
    return load_settings(args.config).with_seed(getattr(args, 'seed', None))


def print_json(data: Dict[str, Any]) -> None:
    print(dumps(data))


def heading(title: str) -> None:
    print(f"\n=== {title} ===\n")
