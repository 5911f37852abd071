"""Exact Koszul calculus for N-homogeneous algebras."""

import json

from ._koszul import __version__, commands, suites
from ._koszul import run as _run


class KoszulError(RuntimeError):
    def __init__(self, exit_code, report):
        super().__init__(report.get("payload", {}).get("error", {}).get("message", "command failed"))
        self.exit_code = exit_code
        self.report = report


def run(command, suite="", *, check=True, **options):
    """Run a command and return its report as a dict."""
    code, text = _run(command, suite, **options)
    report = json.loads(text)
    if check and code != 0:
        raise KoszulError(code, report)
    return report


def dims(algebra="truncated:3", **options):
    return run("dims", algebra=algebra, **options)


def verify(suite, algebra="truncated:3", **options):
    return run("verify", suite, algebra=algebra, **options)


__all__ = ["__version__", "commands", "suites", "run", "dims", "verify", "KoszulError"]
