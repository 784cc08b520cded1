"""Python access to the rigidlift reports.

Every function returns the same JSON document the command line prints,
parsed into a dict, minus the "schema" and "timings" fields.
"""

import json

from . import _core

Error = _core.Error


def info(graph):
    return json.loads(_core.info(str(graph)))


def info_text(text):
    return json.loads(_core.info_text(text))


def rigidity(morphism, witness=False, lift=False, max_classes=1_000_000):
    return json.loads(_core.rigidity(str(morphism), witness, lift, max_classes))


def selftest(fixtures):
    return json.loads(_core.selftest(str(fixtures)))


def run(*args):
    """Run the command line. Returns (exit code, parsed stdout, stderr)."""
    code, out, err = _core.run([str(a) for a in args])
    return code, json.loads(out) if out else None, err


__all__ = ["Error", "info", "info_text", "rigidity", "selftest", "run"]
