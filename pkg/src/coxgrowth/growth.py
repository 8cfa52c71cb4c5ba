"""Growth rates: the reciprocal of the radius of convergence of p(t).

The coefficients of a Poincaré series are nonnegative, so the dominant
singularity sits on the positive real axis (Pringsheim).  Numerator and
denominator are coprime, hence the radius is the smallest positive real root
of the denominator.  That root is isolated with Descartes' rule of signs and
refined by exact rational bisection.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .poincare import PoincareSeries
from .polyarith import IntPolynomial, poly_gcd, rf_series_coeffs

FINITE = "finite-group"
POLYNOMIAL = "polynomial-growth"
EXPONENTIAL = "exponential"


class GrowthError(RuntimeError):
    pass


@dataclass(frozen=True)
class GrowthRate:
    kind: str
    value: str
    error_bound: Fraction
    certified_digits: int
    root_interval: tuple[Fraction, Fraction] | None = None

    def decimal(self) -> Decimal:
        return Decimal(self.value)

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.value, "certified_digits": self.certified_digits}


def sign_variations(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _interval_transform(f: IntPolynomial, lo: Fraction, hi: Fraction) -> list[int]:
    """Coefficients of (q(1+x))^n f((a + b x) / (q (1 + x))) with lo=a/q, hi=b/q.

    Positive roots of the result correspond to roots of f in (lo, hi).
    """
    q = lo.denominator * hi.denominator // _gcd(lo.denominator, hi.denominator)
    a = int(lo * q)
    b = int(hi * q)
    n = f.degree
    # powers of q(1 + x)
    base = [q, q]
    pows = [[1]]
    for _ in range(n):
        prev = pows[-1]
        nxt = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            nxt[i] += c * base[0]
            nxt[i + 1] += c * base[1]
        pows.append(nxt)
    acc = [f.coeffs[n]]
    for i in range(n - 1, -1, -1):
        # acc *= (a + b x)
        new = [0] * (len(acc) + 1)
        for j, c in enumerate(acc):
            new[j] += c * a
            new[j + 1] += c * b
        ci = f.coeffs[i]
        if ci:
            for j, c in enumerate(pows[n - i]):
                new[j] += ci * c
        acc = new
    return acc


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


def roots_bound(f: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Descartes bound on the number of roots of f in the open interval (lo, hi).

    Zero means no root; one means exactly one (counted with multiplicity).
    """
    return sign_variations(_interval_transform(f, lo, hi))


def _sign(f: IntPolynomial, x: Fraction) -> int:
    return f.sign_at(x.numerator, x.denominator)


def squarefree(f: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(f, f.derivative())
    return f.exact_div(g) if g.degree > 0 else f


def isolate_smallest_root(f: IntPolynomial, lo=Fraction(0), hi=Fraction(1),
                          max_depth: int = 400):
    """Smallest root of squarefree f in (lo, hi].

    Returns ``(lo', hi')`` with exactly one root strictly inside, or
    ``(r, r)`` if the root r is a bisection point, or None.
    """
    def search(a: Fraction, b: Fraction, depth: int):
        v = roots_bound(f, a, b)
        if v == 0:
            return None
        if v == 1:
            return (a, b)
        if depth > max_depth:
            raise GrowthError("root isolation did not terminate")
        mid = (a + b) / 2
        left = search(a, mid, depth + 1)
        if left is not None:
            return left
        if _sign(f, mid) == 0:
            return (mid, mid)
        return search(mid, b, depth + 1)

    found = search(lo, hi, 0)
    if found is None and _sign(f, hi) == 0:
        return (hi, hi)
    return found


def _round_sig(x: Fraction, digits: int) -> tuple[str, Fraction]:
    """``digits`` significant digits of x > 0 and the unit in the last place."""
    with localcontext() as ctx:
        ctx.prec = digits + 20
        d = Decimal(x.numerator) / Decimal(x.denominator)
        exp = d.adjusted()
        quantum = Decimal(1).scaleb(exp - digits + 1)
        ctx.prec = digits + 5
        s = d.quantize(quantum)
        if s.adjusted() != exp:  # rounding carried into a new digit
            quantum = Decimal(1).scaleb(exp - digits + 2)
            s = d.quantize(quantum)
            exp += 1
    return str(s), Fraction(10) ** (exp - digits + 1)


def growth_rate(p: PoincareSeries, digits: int = 30, max_iterations: int = 10_000) -> GrowthRate:
    """Exponential growth rate of the series, to ``digits`` significant digits.

    ``max_iterations`` caps the number of bisection steps; exceeding it raises
    :class:`GrowthError`.
    """
    if digits < 10:
        raise ValueError("digits must be at least 10")
    rf = getattr(p, "rf", p)
    den = rf.den
    if den.degree <= 0:
        return GrowthRate(FINITE, "0", Fraction(0), digits)
    g = squarefree(den.primitive())
    iso = isolate_smallest_root(g)
    if iso is None:
        raise GrowthError("denominator has no root in (0, 1]")
    lo, hi = iso
    if lo == hi == 1:
        return GrowthRate(POLYNOMIAL, "1", Fraction(0), digits, (lo, hi))
    if lo == hi:
        # exact rational root
        omega = 1 / lo
        _check_no_smaller_root(den, lo)
        if omega.denominator == 1:
            value = str(omega.numerator)
        else:
            value, _ = _round_sig(omega, digits)
        return GrowthRate(EXPONENTIAL, value, Fraction(0), digits, (lo, hi))

    s_lo = _sign(g, lo)
    if lo == 0:
        s_lo = _sign(g, Fraction(0))
    steps = 0
    num = rf.num
    while True:
        # omega lies in [1/hi, 1/lo]
        width = 1 / lo - 1 / hi if lo > 0 else None
        if width is not None:
            _, ulp = _round_sig(1 / hi, digits)
            if width * 1000 <= ulp and roots_bound(num, lo, hi) == 0 and _sign(num, lo) != 0:
                break
        if steps >= max_iterations:
            raise GrowthError(f"refinement exceeded {max_iterations} bisection steps")
        mid = (lo + hi) / 2
        s = _sign(g, mid)
        steps += 1
        if s == 0:
            return growth_rate_exact(p, mid, digits)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    _check_no_smaller_root(den, lo)
    if _sign(den, lo) * _sign(den, hi) >= 0:
        raise GrowthError("denominator does not change sign on the isolating interval")
    mid = (lo + hi) / 2
    value, ulp = _round_sig(1 / mid, digits)
    err = ulp / 2 + (1 / lo - 1 / hi)
    return GrowthRate(EXPONENTIAL, value, err, digits, (lo, hi))


def growth_rate_exact(p, root: Fraction, digits: int) -> GrowthRate:
    den = getattr(p, "rf", p).den
    _check_no_smaller_root(den, root)
    omega = 1 / root
    value = str(omega.numerator) if omega.denominator == 1 else _round_sig(omega, digits)[0]
    return GrowthRate(EXPONENTIAL, value, Fraction(0), digits, (root, root))


def _check_no_smaller_root(den: IntPolynomial, r: Fraction):
    # subdivision removes spurious sign variations caused by complex roots
    if r > 0 and isolate_smallest_root(squarefree(den.primitive()), Fraction(0), r) not in (None, (r, r)):
        raise GrowthError("denominator has a positive root below the reported one")


def coefficients(p: PoincareSeries, count: int) -> list[int]:
    """The first ``count`` coefficients a_0, a_1, ... of the series."""
    return rf_series_coeffs(getattr(p, "rf", p), count)
