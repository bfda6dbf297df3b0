"""Exact reduction of zeta-value integrals to linear forms in 1, zeta(2), zeta(3), zeta(4)."""

from fractions import Fraction

from . import _core
from ._core import (
    DivergentForm,
    NoInteriorMaximum,
    NonCancellingDivergence,
    decay_certificate,
    harmonic,
    lcm_growth,
    mc_integral,
    quad_pieces,
    zeta_value,
)

__version__ = _core.__version__

FAMILIES = ("zeta2", "zeta3", "zeta4")


def _fractions(record):
    out = dict(record)
    out["rational"] = Fraction(record["rational"])
    out["zeta"] = {int(a): Fraction(q) for a, q in record["zeta"].items()}
    if "divergent_harmonic" in record:
        out["divergent_harmonic"] = Fraction(record["divergent_harmonic"])
        out["divergent_poly"] = [Fraction(c) for c in record["divergent_poly"]]
    return out


def compute_form(family, n):
    """Form of the family integral at index n, coefficients as Fractions."""
    return _fractions(_core.compute_form(family, n))


def monomial_form(r, s, t, k):
    rec = _fractions(_core.monomial_form(r, s, t, k))
    del rec["family"], rec["n"]
    return rec


def reduce_terms(terms):
    """terms: iterable of (a, j, c) meaning sum_{m>=1} c/(m+j)^a."""
    rec = _fractions(_core.reduce_terms([(a, j, str(Fraction(c))) for a, j, c in terms]))
    del rec["family"], rec["n"]
    return rec


def inner_profile(n):
    P, Q = _core.inner_profile(n)
    return [Fraction(c) for c in P], [Fraction(c) for c in Q]


def evaluate(family, n, digits=50):
    """Decimal string of the integral's value."""
    return _core.evaluate(family, n, digits)


def lcm_upto(n):
    return int(_core.lcm_upto(n))


def harmonic_fraction(j, a):
    return Fraction(harmonic(j, a))
