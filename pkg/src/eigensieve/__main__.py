"""Allow ``python -m eigensieve`` to reach the command line interface."""

from .cli import run

run()
