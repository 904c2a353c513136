"""Exact localization computations on Grassmannians, flags and projective targets."""

from fractions import Fraction
import json

from ._resloc import (
    ResLocError,
    qh_relations,
    run_cli,
)
from . import _resloc

__all__ = [
    "ResLocError",
    "flag_pushforwards",
    "grassmann_integral",
    "invariants",
    "j_function",
    "mirror_corrections",
    "qh_relations",
    "run_cli",
    "schur_integral",
]


def grassmann_integral(n, tau):
    """Integral of a symmetric polynomial in q1, q2 over G(2, n), by residues."""
    return Fraction(_resloc.grassmann_integral(n, tau))


def schur_integral(m, n, tau):
    """Integral over G(m, n) read off from the Schur expansion."""
    return Fraction(_resloc.schur_integral(m, n, tau))


def flag_pushforwards(m, n):
    """Map from exponent tuples A to {h power: coefficient} for pi_*(z^A)."""
    return {
        tuple(a): {e: Fraction(v) for e, v in terms}
        for a, terms in _resloc.flag_pushforwards(m, n)
    }


def _index(key):
    return int(key) if "," not in key else tuple(int(x) for x in key.split(","))


def _coefficients(node):
    return {
        _index(d): {
            int(k): {_index(h): Fraction(v) for h, v in cls.items()} for k, cls in laurent.items()
        }
        for d, laurent in node.items()
    }


def j_function(n, order=5):
    """Coefficients of the J-function of P^n as {d: {t power: {H power: value}}}."""
    data = json.loads(_resloc.j_function_json(n, order))
    return _coefficients(data["coefficients"])


def mirror_corrections(n, l, order=5):
    """The q-series (a, b, c) of the mirror transform, lists indexed by degree."""
    a, b, c = _resloc.mirror_corrections(n, l, order)
    return [Fraction(x) for x in a], [Fraction(x) for x in b], [Fraction(x) for x in c]


def invariants(target, n=0, l=0, factors=(), order=5):
    """Two-point invariants as a list of dicts with keys d, a, b, value."""
    data = json.loads(_resloc.invariants_json(target, n, l, list(factors), order))
    return [dict(e, value=Fraction(e["value"])) for e in data["invariants"]]
