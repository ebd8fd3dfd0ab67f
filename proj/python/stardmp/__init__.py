"""Python access to the stardmp commands.

Element arguments are the JSON documents the command line tool reads, given
either as a dict or as text. Every call returns ``(exit_code, report)`` with
the report as a dict.
"""

import json as _json

from . import _core
from ._core import BudgetExceeded, DomainError

__all__ = ["BudgetExceeded", "DomainError", "classify", "decompose", "inverse", "order", "run", "verify"]

DEFAULT_BUDGET = _core.default_budget


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def _unpack(result):
    code, report = result
    return code, _json.loads(report)


def inverse(doc, kind, budget=DEFAULT_BUDGET):
    return _unpack(_core.inverse(_text(doc), kind, budget))


def classify(doc, budget=DEFAULT_BUDGET):
    return _unpack(_core.classify(_text(doc), budget))


def decompose(doc, which="pseudo-core", budget=DEFAULT_BUDGET):
    return _unpack(_core.decompose(_text(doc), which, budget))


def order(a, b, relation="pseudo-core", budget=DEFAULT_BUDGET):
    return _unpack(_core.order(_text(a), _text(b), relation, budget))


def verify(ids=(), universes=(), seed=20240611, samples=100, budget=DEFAULT_BUDGET):
    return _unpack(_core.verify(list(ids), list(universes), seed, samples, budget))


def run(*args):
    """Runs the command line tool in process; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
