"""Exact integer polynomials in one variable.

Coefficients are arbitrary-precision Python integers stored in ascending
order (``coeffs[k]`` multiplies ``z**k``).  Characteristic polynomials of
signed digraphs are always monic, but the type supports general integer
polynomials so tests can build products like ``(z**2 - 1) * (z**2 + 1)**2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Iterable, Sequence


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Integer polynomial; index k of ``coeffs`` holds the coefficient of z^k.

    Trailing zero coefficients are stripped on construction, so ``coeffs``
    always has length ``degree + 1`` (the zero polynomial has ``coeffs == ()``
    and degree -1).
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_leading(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from leading-first coefficients (the CLI wire order)."""
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading_first(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))

    def trailing_zero_count(self) -> int:
        """Multiplicity of the root 0 (0 for the zero polynomial)."""
        k = 0
        for c in self.coeffs:
            if c != 0:
                break
            k += 1
        return k

    def evaluate(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def evaluate_exact(self, x):
        """Horner evaluation preserving the argument's exact type (int/Fraction)."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def reflected(self) -> "IntPolynomial":
        """Return (-1)^deg * p(-z); maps a monic polynomial to a monic one."""
        n = self.degree
        return IntPolynomial((-1) ** ((n - k) & 1) * c for k, c in enumerate(self.coeffs))

    def shift_down(self, k: int) -> "IntPolynomial":
        """Exact division by z^k; the k lowest coefficients must be zero."""
        if any(self.coeffs[:k]):
            raise ValueError("polynomial is not divisible by z^%d" % k)
        return IntPolynomial(self.coeffs[k:])

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "z" if k == 1 else f"z^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of dense ascending Fraction coefficient lists."""
    r = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        f = r[-1] / lead
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _to_fracs(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_fracs(cs: Sequence[Fraction]) -> IntPolynomial:
    out = []
    for c in cs:
        if c.denominator != 1:
            raise ValueError("expected integer coefficients, got %s" % (c,))
        out.append(c.numerator)
    return IntPolynomial(out)


def poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Exact division over the rationals; raises if results are not integral."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q, r = _frac_divmod(_to_fracs(a), _to_fracs(b))
    return _from_fracs(q), _from_fracs(r)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Monic gcd of two integer polynomials (Euclid over the rationals).

    Returns a primitive integer polynomial with positive leading coefficient;
    when both inputs are monic the gcd is monic.
    """
    fa, fb = _to_fracs(a), _to_fracs(b)
    while any(fb):
        _, r = _frac_divmod(fa, fb)
        fa, fb = fb, r
    if not any(fa):
        return IntPolynomial(())
    lead = fa[-1]
    monic = [c / lead for c in fa]
    mult = 1
    for c in monic:
        mult = _int_lcm(mult, c.denominator)
    ints = [c * mult for c in monic]
    g = 0
    for c in ints:
        g = _int_gcd(g, c.numerator)
    return _from_fracs([c / g for c in ints])


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: return [(f_i, i)] with p = lead * prod f_i^i.

    Each f_i is square-free and the f_i are pairwise coprime; factors of
    multiplicity i that are trivial (constant) are omitted.  Requires a
    nonzero input with degree >= 1.
    """
    if p.degree < 1:
        raise ValueError("square-free decomposition needs degree >= 1")
    u = poly_gcd(p, p.derivative())
    if u.degree == 0:
        return [(p, 1)]
    v, _ = poly_divmod(p, u)
    w, _ = poly_divmod(p.derivative(), u)
    out = []
    i = 1
    while v.degree > 0:
        y = w - v.derivative()
        h = poly_gcd(v, y)
        if h.degree > 0:
            out.append((h, i))
            v, _ = poly_divmod(v, h)
            w, _ = poly_divmod(y, h)
        else:
            w = y
        i += 1
    return out
