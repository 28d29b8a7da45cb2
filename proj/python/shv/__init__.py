"""Exact computations in the super Heisenberg-Virasoro algebra.

Documents are the same JSON shapes the ``shv`` command line tool reads and
writes; pass them as dicts, lists or JSON text.
"""

import json
from typing import Any, NamedTuple, Optional

from . import _shv
from ._shv import DocumentError, FuelExhausted, UsageError

__all__ = [
    "DocumentError", "FuelExhausted", "UsageError", "Result",
    "bracket", "conformal_check", "conformal_classify", "conformal_products",
    "lie_of", "ns_check", "quotient", "normal_form", "act", "probe", "validate_module",
]

DEFAULT_FUEL = _shv.default_fuel


class Result(NamedTuple):
    doc: Any
    ok: bool
    diagnostics: list


def _text(doc):
    if doc is None or isinstance(doc, str):
        return doc
    return json.dumps(doc)


def _result(raw):
    text, ok, diagnostics = raw
    return Result(json.loads(text), ok, list(diagnostics))


def bracket(x, y, algebra="ramond") -> Result:
    return _result(_shv.bracket(_text(x), _text(y), algebra))


def conformal_check(ansatz=None) -> Result:
    return _result(_shv.conformal_check(_text(ansatz)))


def conformal_classify(degree: int, c_nonzero: bool = False) -> Result:
    return _result(_shv.conformal_classify(degree, c_nonzero))


def conformal_products() -> Result:
    return _result(_shv.conformal_products())


def lie_of(range: int = 8) -> Result:
    return _result(_shv.lie_of(range))


def ns_check(range: int = 8, corrupt: bool = False) -> Result:
    return _result(_shv.ns_check(range, corrupt))


def quotient(alpha: int, beta: int, z: int) -> Result:
    return _result(_shv.quotient(alpha, beta, z))


def normal_form(module, vector=None, word: str = "", base: str = "", strategy: str = "rightmost",
                fuel: int = DEFAULT_FUEL) -> Result:
    return _result(_shv.normal_form(_text(module), _text(vector), word, base, strategy, fuel))


def act(module, vector, word: str, coeff: str = "1", fuel: int = DEFAULT_FUEL) -> Result:
    return _result(_shv.act(_text(module), _text(vector), word, coeff, fuel))


def probe(module, vectors=None, random: int = 0, max_weight: int = 6, seed: Optional[int] = None,
          sample_bound: int = 4, fuel: int = DEFAULT_FUEL) -> Result:
    return _result(_shv.probe(_text(module), _text(vectors), random, max_weight, seed, sample_bound, fuel))


def validate_module(module, sample_bound: int = 4, fuel: int = DEFAULT_FUEL) -> Result:
    return _result(_shv.validate_module(_text(module), sample_bound, fuel))
