"""Exact univariate polynomials over Z and their quotients.

Coefficients are stored in ascending degree order; the zero polynomial has
no coefficients.  Everything here is immutable and pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "RationalFunction",
    "poly_gcd",
    "rf_normalize",
    "rf_add",
    "rf_mul",
    "rf_reverse",
    "rf_series_coeffs",
]

# A large prime for the modular coprimality shortcut in poly_gcd.
_PRIME = (1 << 61) - 1


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = _strip(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def q_integer(cls, d: int) -> "IntPolynomial":
        """The q-integer 1 + t + ... + t^(d-1)."""
        return cls((1,) * d)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def lowest_term(self) -> int:
        """Index of the lowest nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * x for x in self.coeffs))

    def divexact(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(x // c for x in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content
        if self.lc < 0:
            c = -c
        return self.divexact(c)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reversed(self, length: int | None = None) -> "IntPolynomial":
        """t^(length-1) * f(1/t); length defaults to deg + 1."""
        n = len(self.coeffs) if length is None else length
        if n < len(self.coeffs):
            raise ValueError("reversal length shorter than polynomial")
        padded = self.coeffs + (0,) * (n - len(self.coeffs))
        return IntPolynomial(padded[::-1])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, num: int, den: int = 1) -> int:
        """Sign of f(num/den) for den > 0, in integer arithmetic."""
        return _sign(_homogeneous_eval(self.coeffs, num, den))

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division with remainder; raises ValueError if it leaves Z[t]."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lc = other.lc
        if len(rem) <= db:
            return IntPolynomial(), self
        quo = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q, r = divmod(c, lc)
            if r:
                raise ValueError("quotient is not an integer polynomial")
            quo[k - db] = q
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] -= q * b
        return IntPolynomial(tuple(quo)), IntPolynomial(tuple(rem))

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def divides(self, other: "IntPolynomial") -> bool:
        """True if self | other in Z[t]."""
        try:
            _, r = other.divmod(self)
        except ValueError:
            return False
        return r.is_zero()

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPolynomial":
        return cls(tuple(int(x) for x in data))

    def format(self, var: str = "t") -> str:
        """Ascending-power text such as ``1+4t+8t^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"IntPolynomial({self.format()})"


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _homogeneous_eval(coeffs: Sequence[int], num: int, den: int) -> int:
    """den^n * f(num/den) where n = len(coeffs) - 1."""
    n = len(coeffs) - 1
    pows = [1] * (n + 1)
    for i in range(1, n + 1):
        pows[i] = pows[i - 1] * den
    acc = 0
    for i in range(n, -1, -1):
        acc = acc * num + coeffs[i] * pows[n - i]
    return acc


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    raise TypeError(f"cannot use {type(x).__name__} as IntPolynomial")


def _prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of a by b."""
    r = list(a.coeffs)
    db = b.degree
    lc = b.lc
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[k]
        r = [x * lc for x in r]
        for j, y in enumerate(b.coeffs):
            r[k - db + j] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return IntPolynomial(tuple(r))


def _degree_mod_p(a: IntPolynomial, b: IntPolynomial, p: int) -> int:
    """Degree of gcd(a mod p, b mod p) over GF(p)."""
    def red(f):
        c = [x % p for x in f.coeffs]
        while c and c[-1] == 0:
            c.pop()
        return c

    f, g = red(a), red(b)
    while g:
        inv = pow(g[-1], p - 2, p)
        dg = len(g) - 1
        while len(f) - 1 >= dg and f:
            q = f[-1] * inv % p
            shift = len(f) - 1 - dg
            for j, y in enumerate(g):
                f[shift + j] = (f[shift + j] - q * y) % p
            while f and f[-1] == 0:
                f.pop()
        f, g = g, f
    return len(f) - 1


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q (returned in Z[t], positive leading coefficient)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    if a.degree == 0 or b.degree == 0:
        return IntPolynomial.one()
    # Coprime modulo a prime not dividing either leading coefficient
    # implies coprime over Q.
    if a.lc % _PRIME and b.lc % _PRIME and _degree_mod_p(a, b, _PRIME) == 0:
        return IntPolynomial.one()
    f, g = a.primitive(), b.primitive()
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        r = _prem(f, g)
        f, g = g, (r.primitive() if r else r)
        if g and g.degree == 0:
            return IntPolynomial.one()
    return f.primitive()


@dataclass(frozen=True)
class RationalFunction:
    """num/den in canonical form; build through :func:`rf_normalize`."""

    num: IntPolynomial
    den: IntPolynomial

    @classmethod
    def from_polys(cls, num, den=None) -> "RationalFunction":
        num = _coerce(num) if not isinstance(num, (list, tuple)) else IntPolynomial(tuple(num))
        if den is None:
            den = IntPolynomial.one()
        elif isinstance(den, (list, tuple)):
            den = IntPolynomial(tuple(den))
        else:
            den = _coerce(den)
        return rf_normalize(num, den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole of rational function")
        return Fraction(self.num(x)) / d

    def __add__(self, other):
        return rf_add(self, other)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return rf_add(self, -other)

    def __mul__(self, other):
        return rf_mul(self, other)

    def reciprocal(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return rf_normalize(self.den, self.num)

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json()}

    def __repr__(self):
        return f"({self.num.format()})/({self.den.format()})"


def rf_normalize(num: IntPolynomial, den: IntPolynomial) -> RationalFunction:
    """Cancel common factors and fix the sign and content of ``num/den``."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return RationalFunction(IntPolynomial(), IntPolynomial.one())
    g = poly_gcd(num, den)
    if g.degree > 0:
        # g is primitive, so by Gauss's lemma both quotients stay in Z[t]
        num = num.exact_div(g)
        den = den.exact_div(g)
    c = gcd(num.content, den.content)
    if den[den.lowest_term()] < 0:
        c = -c
    return RationalFunction(num.divexact(c), den.divexact(c))


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if a.den == b.den:
        return rf_normalize(a.num + b.num, a.den)
    return rf_normalize(a.num * b.den + b.num * a.den, a.den * b.den)


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return rf_normalize(a.num * b.num, a.den * b.den)


def rf_reverse(f: RationalFunction) -> RationalFunction:
    """The rational function t -> f(1/t)."""
    if f.num.is_zero():
        raise ValueError("cannot reverse the zero function")
    n = max(len(f.num), len(f.den))
    return rf_normalize(f.num.reversed(n), f.den.reversed(n))


def rf_series_coeffs(f: RationalFunction, count: int) -> list:
    """First ``count`` Taylor coefficients of f at 0.

    Terms up to the numerator degree come from long division; later ones
    from the linear recurrence given by the denominator.  Coefficients are
    ints whenever the constant term of the denominator is a unit, otherwise
    Fractions.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    den = f.den.coeffs
    num = f.num.coeffs
    d0 = den[0] if den else 0
    if d0 == 0:
        raise ValueError("not a power series at 0")
    unit = d0 in (1, -1)
    D = len(den) - 1
    N = len(num) - 1
    out: list = []
    for k in range(count):
        acc = num[k] if k <= N else 0
        for r in range(1, min(k, D) + 1):
            dr = den[r]
            if dr:
                acc -= dr * out[k - r]
        if unit:
            out.append(acc * d0)  # 1/d0 == d0 for a unit
        else:
            out.append(Fraction(acc, d0))
    return out
