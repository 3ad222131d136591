"""Exact chamber decomposition and MMP walk for divisorial rings.

Ring data are plain dicts in the document format of the ``mmpw`` command
line tool. Rationals come back as :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    BudgetExceeded,
    Error,
    NonGenericSegment,
    NotFound,
    OutsideSupport,
    ParseError,
    ValidationError,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "NonGenericSegment",
    "NotFound",
    "OutsideSupport",
    "ParseError",
    "ValidationError",
    "chamber_decomposition",
    "check",
    "example",
    "example_names",
    "ip_value",
    "linearity_fan",
    "o_value",
    "random_instance",
    "support_cone",
    "validate",
    "veronese_degree",
    "walk",
]


def _text(datum):
    return datum if isinstance(datum, str) else json.dumps(datum)


def _coords(x):
    return [str(Fraction(c)) for c in x]


def example_names():
    return _core.example_names()


def example(name):
    return json.loads(_core.example(name))


def random_instance(seed, r=1, generators=4, valuations=2, bound=3):
    return json.loads(_core.random_instance(seed, r, generators, valuations, bound))


def validate(datum):
    return json.loads(_core.validate(_text(datum)))


def support_cone(datum):
    return json.loads(_core.support_cone(_text(datum)))


def o_value(datum, valuation, x):
    """Return (value, witness) of the LP relaxation at x."""
    doc = json.loads(_core.o_value(_text(datum), valuation, _coords(x)))
    return Fraction(doc["value"]), [Fraction(w) for w in doc["witness"]]


def ip_value(datum, valuation, x, k):
    """Integer optimum at k*x divided by k, or None when k*x has no representation."""
    value = _core.ip_value(_text(datum), valuation, _coords(x), k)
    return None if value is None else Fraction(value)


def linearity_fan(datum, valuation):
    return json.loads(_core.linearity_fan(_text(datum), valuation))


def chamber_decomposition(datum, refine=True):
    return json.loads(_core.chamber_decomposition(_text(datum), refine))


def walk(datum, h=None):
    return json.loads(_core.walk(_text(datum), None if h is None else _coords(h)))


def veronese_degree(degrees, max_m=6):
    return json.loads(_core.veronese_degree(list(degrees), max_m))


def check(datum, seed=1):
    return json.loads(_core.check(_text(datum), seed))
