"""Chip-firing games, configuration posets and move posets.

Thin re-export of the native extension module.
"""

from ._chipfire import (  # noqa: F401
    ChipFireError,
    FiringSystem,
    ParseError,
    Poset,
    available_sites,
    config_poset,
    counterexample,
    fire,
    format_config,
    invalid_extension_demo,
    join_irreducibles,
    labeled_run,
    move_poset,
    only_move_config,
    parse_config,
    replay,
    stabilize,
    verify_endgame,
    verify_join_theorem,
)

__all__ = [
    "ChipFireError",
    "FiringSystem",
    "ParseError",
    "Poset",
    "available_sites",
    "config_poset",
    "counterexample",
    "fire",
    "format_config",
    "invalid_extension_demo",
    "join_irreducibles",
    "labeled_run",
    "move_poset",
    "only_move_config",
    "parse_config",
    "replay",
    "stabilize",
    "verify_endgame",
    "verify_join_theorem",
]
