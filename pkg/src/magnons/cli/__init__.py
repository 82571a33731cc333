"""Command-line surface over the library."""

from magnons.cli.commands import cmd_graph, cmd_rs, cmd_state, cmd_table, cmd_verify
from magnons.cli.config import OutputFormat, RunConfig, RunMode

__all__ = [
    "OutputFormat",
    "RunConfig",
    "RunMode",
    "cmd_graph",
    "cmd_rs",
    "cmd_state",
    "cmd_table",
    "cmd_verify",
]
