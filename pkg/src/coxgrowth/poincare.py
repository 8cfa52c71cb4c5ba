"""Poincaré series of Coxeter systems.

Finite types use the degree product, affine types Bott's product, and
arbitrary systems the alternating sum over spherical residues.  Triangle
groups also have closed forms, used as a cross-check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classification import (AffineType, FiniteType, finite_type_of,
                             spherical_residues)
from .coxeter import INF, CoxeterMatrix, components, induced
from .polyarith import IntPolynomial, RationalFunction, rf_normalize, rf_reverse

ONE = IntPolynomial.one()
ONE_MINUS_T = IntPolynomial((1, -1))


@dataclass(frozen=True)
class PoincareSeries:
    rf: RationalFunction
    formula: str

    @property
    def num(self) -> IntPolynomial:
        return self.rf.num

    @property
    def den(self) -> IntPolynomial:
        return self.rf.den

    def is_polynomial(self) -> bool:
        return self.rf.is_polynomial()

    def to_json(self) -> dict:
        return {**self.rf.to_json(), "formula": self.formula}


def _degree_poly(degs) -> IntPolynomial:
    p = ONE
    for d in degs:
        p = p * IntPolynomial.q_integer(d)
    return p


def spherical_poincare(t: FiniteType) -> PoincareSeries:
    """prod_d (t^d - 1)/(t - 1) over the degrees of ``t``."""
    p = _degree_poly(t.degrees())
    return PoincareSeries(RationalFunction(p, ONE), f"solomon:{t.name}")


def affine_poincare(t: AffineType) -> PoincareSeries:
    """Bott: p_X(t) / prod_d (1 - t^(d-1))."""
    x = t.spherical()
    num = _degree_poly(x.degrees())
    den = ONE
    for d in x.degrees():
        den = den * (ONE - IntPolynomial.monomial(d - 1))
    return PoincareSeries(rf_normalize(num, den), f"bott:{t.name}")


# -- alternating sum over spherical residues ---------------------------------

@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> IntPolynomial:
    """Psi_n: 1 - t for n = 1, the n-th cyclotomic polynomial otherwise."""
    if n == 1:
        return ONE_MINUS_T
    p = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))  # t^n - 1
    p = p.exact_div(IntPolynomial((-1, 1)))
    for e in range(2, n):
        if n % e == 0:
            p = p.exact_div(_cyclotomic(e))
    return p


def _divisors(d: int) -> list[int]:
    return [e for e in range(1, d + 1) if d % e == 0]


def _factor_profile(degs) -> Counter:
    """Exponents of Psi_e in prod_d (1 - t^d)."""
    c = Counter()
    for d in degs:
        c.update(_divisors(d))
    return c


def residue_degrees(m: CoxeterMatrix, subset) -> tuple[int, ...]:
    """Sorted multiset of degrees of the finite parabolic W_I."""
    degs = []
    for _, comp in components(induced(m, subset)):
        ft = finite_type_of(comp)
        if ft is None:
            raise ValueError(f"parabolic {tuple(subset)} is not finite")
        degs.extend(ft.degrees())
    return tuple(sorted(degs))


def steinberg_poincare(m: CoxeterMatrix) -> PoincareSeries:
    """Poincaré series from 1/p(1/t) = sum_{I in F} (-1)^|I| / p_I(t).

    Each term is (1-t)^|I| / prod_d (1 - t^d).  All terms are put over the
    least common multiple L of the denominators, which is a product of
    cyclotomic factors, so the sum is A/L with A a single integer polynomial.
    """
    # collect signed multiplicities per degree multiset
    terms: Counter = Counter()
    for sub in spherical_residues(m):
        terms[residue_degrees(m, sub)] += (-1) ** len(sub)
    terms = Counter({k: v for k, v in terms.items() if v})
    profiles = {degs: _factor_profile(degs) for degs in terms}
    lcm: Counter = Counter()
    for prof in profiles.values():
        for e, k in prof.items():
            lcm[e] = max(lcm[e], k)

    total = IntPolynomial()
    for degs, mult in terms.items():
        prof = profiles[degs]
        part = ONE_MINUS_T ** len(degs)
        for e, k in lcm.items():
            if k - prof[e]:
                part = part * _cyclotomic(e) ** (k - prof[e])
        total = total + part.scale(mult)
    if total.is_zero():
        raise ArithmeticError("alternating residue sum vanished")

    # cancel cyclotomic factors shared by A and L before the general gcd
    for e in sorted(lcm):
        psi = _cyclotomic(e)
        while lcm[e] and psi.divides(total):
            total = total.exact_div(psi)
            lcm[e] -= 1
    L = ONE
    for e, k in sorted(lcm.items()):
        if k:
            L = L * _cyclotomic(e) ** k
    # Q = total / L equals 1/p(1/t)
    p = rf_reverse(rf_normalize(L, total))
    return PoincareSeries(p, "steinberg")


# -- triangle groups ---------------------------------------------------------

def _is_hyperbolic_triangle(a, b, c) -> bool:
    s = sum(Fraction(0) if x == INF else Fraction(1, x) for x in (a, b, c))
    return s < 1


def triangle_poincare(a, b, c) -> PoincareSeries:
    """Closed form for the <a,b,c> triangle group, labels possibly infinite."""
    labels = (a, b, c)
    for x in labels:
        if not (x == INF or (isinstance(x, int) and x >= 2)):
            raise ValueError(f"bad triangle label {x!r}")
    if not _is_hyperbolic_triangle(a, b, c):
        raise ValueError("not a hyperbolic triangle group")
    fin = sorted(x for x in labels if x != INF)
    t = lambda k, c=1: IntPolynomial.monomial(k, c)  # noqa: E731
    num = IntPolynomial((1, 1))
    for x in fin:
        num = num * (ONE - t(x))
    den = ONE - t(1, 2)
    if len(fin) == 3:
        x, y, z = fin
        den = (den + t(x + 1) + t(y + 1) + t(z + 1) - t(x + y) - t(x + z) - t(y + z)
               + t(x + y + z, 2) - t(x + y + z + 1))
    elif len(fin) == 2:
        x, y = fin
        den = den + t(x + 1) + t(y + 1) - t(x + y)
    elif len(fin) == 1:
        den = den + t(fin[0] + 1)
    return PoincareSeries(rf_normalize(num, den), f"triangle:<{_fmt(a)},{_fmt(b)},{_fmt(c)}>")


def _fmt(x) -> str:
    return "inf" if x == INF else str(x)
