"""Subcommands of the command-line front end.

Each module exposes ``register(subparsers, parents)`` to declare its parser and
``execute(args, config) -> int`` to run it.
"""

from . import ask, confidence, mine, repl, stats

COMMANDS = {
    "ask": ask,
    "repl": repl,
    "confidence": confidence,
    "mine": mine,
    "stats": stats,
}
