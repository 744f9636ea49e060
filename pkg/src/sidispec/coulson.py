"""Energy via Coulson-type integrals, plus the coefficient quasi-order.

The primary integrand is the log-magnitude form

    E = (1/pi) * PV int_{-inf}^{inf} x^{-2} log|x^n phi(i/x)| dx,

which avoids the principal-value subtlety of the log-derivative form.  The
infinite line is split at |x| = 1 and each tail is mapped by x -> 1/u; the
-n*log|u| part of each transformed tail integrates to n exactly, so only
smooth-or-log-singular pieces reach the quadrature.  Near x = 0 the
integrand is a 0/0 limit evaluated from the series of log|P| to avoid
catastrophic cancellation.  Each finite piece goes through adaptive
quadrature (QUADPACK via scipy), retrying with located singular points when
the first pass cannot reach its error budget.

The log-derivative form from the classical formula is kept as a cross-check
mode for polynomials with no imaginary-axis roots.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import integrate

from .charpoly import charpoly_exact
from .errors import MissingArc, NotInDelta1, OrderMismatch, QuadratureFailure
from .graphs import DEFAULT_CYCLE_BUDGET, Sidigraph, classify, delete_arc
from .polynomials import IntPolynomial, square_free_decomposition
from .spectra import energy_from_spectrum, roots


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature controls: absolute target, subdivision cap, and the
    half-line compactification (only the reciprocal map is implemented)."""

    abs_tol: float = 1e-6
    max_subdivisions: int = 200
    transform: str = "inverse"

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise ValueError("abs_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")
        if self.transform != "inverse":
            raise ValueError(f"unknown transform {self.transform!r}")


def _quad_piece(f, a: float, b: float, tol: float, spec: QuadratureSpec, points=None):
    """One finite panel; returns (value, error estimate)."""
    pts = [x for x in (points or []) if a < x < b]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = integrate.quad(
            f, a, b, epsabs=tol, epsrel=0.0, limit=spec.max_subdivisions,
            full_output=1,
        )
        val, err = res[0], res[1]
        if err > tol and pts:
            res2 = integrate.quad(
                f, a, b, epsabs=tol, epsrel=0.0,
                limit=max(spec.max_subdivisions, 50 * (len(pts) + 1)),
                points=pts, full_output=1,
            )
            if res2[1] < err:
                val, err = res2[0], res2[1]
    return val, err


def _integrate_pieces(pieces, spec: QuadratureSpec) -> float:
    """pieces: iterable of (f, a, b, points).  Enforces the total budget."""
    pieces = list(pieces)
    tol = spec.abs_tol * math.pi / (2 * max(len(pieces), 1))
    total = 0.0
    total_err = 0.0
    for f, a, b, points in pieces:
        val, err = _quad_piece(f, a, b, tol, spec, points)
        total += val
        total_err += err
    if total_err > spec.abs_tol * math.pi:
        raise QuadratureFailure(
            f"estimated error {total_err / math.pi:.3g} exceeds abs_tol {spec.abs_tol:g}"
        )
    return total


def _log_series(q: list[complex]) -> tuple[float, float, float]:
    """Real parts of the x^2..x^4 series coefficients of log(P(x)/P(0)),
    where q[k] = (k-th coefficient of P) / P(0) and Re of the x^1 term
    vanishes for the integrands used here."""
    q1, q2, q3, q4 = (q + [0j] * 4)[1:5]
    l2 = q2 - q1 * q1 / 2
    l3 = q3 - q1 * q2 + q1**3 / 3
    l4 = q4 - q1 * q3 - q2 * q2 / 2 + q1 * q1 * q2 - q1**4 / 4
    return l2.real, l3.real, l4.real


def _horner(coeffs, x):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


_TINY = 5e-324


def _central_integrand(cpoly: list[complex], cut: float = 1e-4):
    """x -> log|P(x)| / x^2 with a series fallback near the removable 0/0."""
    q = [c / cpoly[0] for c in cpoly]
    l2, l3, l4 = _log_series(q)

    def g(x: float) -> float:
        if abs(x) < cut:
            return l2 + l3 * x + l4 * x * x
        av = abs(_horner(cpoly, x))
        return math.log(av if av > 0 else _TINY) / (x * x)

    return g


def _log_abs_integrand(coeffs, at_imag: bool):
    """u -> log|p(iu)| (at_imag) or x -> log|p(x)| for real coefficient lists."""

    def f(u: float) -> float:
        av = abs(_horner(coeffs, 1j * u if at_imag else u))
        return math.log(av if av > 0 else _TINY)

    return f


def _imaginary_axis_crossings(q: IntPolynomial) -> list[float]:
    """Imaginary parts of (near) imaginary-axis roots of q; quadrature hints."""
    if q.degree < 1:
        return []
    r = np.roots([float(c) for c in q.leading_first()])
    out = []
    for z in r:
        if abs(z.real) <= 1e-6 * (1.0 + abs(z.imag)) and z.imag != 0.0:
            out.append(float(z.imag))
    return sorted(out)


def _coulson_square_free(q: IntPolynomial, spec: QuadratureSpec) -> float:
    """Log-magnitude integral for a monic square-free q with q(0) != 0."""
    n = q.degree
    # P(x) = x^n q(i/x) expanded: coefficient of x^m is q_{n-m} * i^{n-m}
    cpoly = [q.coeff(n - m) * 1j ** ((n - m) % 4) for m in range(n + 1)]
    crossings = _imaginary_axis_crossings(q)
    central_pts = sorted(1.0 / b for b in crossings if abs(b) > 1.0)
    tail_pts = [b for b in crossings if abs(b) <= 1.0]
    g = _central_integrand(cpoly)
    t = _log_abs_integrand(list(q.coeffs), at_imag=True)
    total = _integrate_pieces(
        [
            (g, -1.0, 0.0, central_pts),
            (g, 0.0, 1.0, central_pts),
            (t, -1.0, 0.0, tail_pts),
            (t, 0.0, 1.0, tail_pts),
        ],
        spec,
    )
    return (total + 2.0 * n) / math.pi


def energy_coulson_general(p: IntPolynomial, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Energy of a monic integer polynomial by the log-magnitude integral.

    Zero roots are removed exactly first (they contribute nothing and would
    make the tail integrand unbounded at the origin).  The integral is
    additive over exact square-free factors, so it is evaluated per factor
    and recombined with multiplicities; that keeps every log singularity
    the quadrature sees simple.  Agrees with the spectral energy within the
    combined tolerance.
    """
    if p.degree < 1 or not p.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    q = p.shift_down(p.trailing_zero_count())
    if q.degree == 0:
        return 0.0
    factors = square_free_decomposition(q)
    weight = sum(mult for _, mult in factors)
    part = QuadratureSpec(
        abs_tol=spec.abs_tol / weight,
        max_subdivisions=spec.max_subdivisions,
        transform=spec.transform,
    )
    return sum(mult * _coulson_square_free(f, part) for f, mult in factors)


def energy_coulson_logderiv(p: IntPolynomial, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Cross-check mode: the classical n - Re[ix phi'(ix)/phi(ix)] integrand.

    Only valid for polynomials with no roots on the imaginary axis (those
    make the integrand non-integrable); raises ValueError if any are found.
    """
    if p.degree < 1 or not p.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    q = p.shift_down(p.trailing_zero_count())
    n = q.degree
    if n == 0:
        return 0.0
    if _imaginary_axis_crossings(q):
        raise ValueError("log-derivative mode needs no imaginary-axis roots")
    qc = list(q.coeffs)
    dqc = list(q.derivative().coeffs)

    def f(x: float) -> float:
        w = 1j * x
        return n - (w * _horner(dqc, w) / _horner(qc, w)).real

    # tails via the reversed polynomial psi(t) = t^n q(1/t); the series
    # variable is u with t = -i*u, hence the (-i)^k factors
    rev = list(reversed(qc))
    drev = [k * c for k, c in enumerate(rev)][1:]
    qseries = [c * (-1j) ** (k % 4) / rev[0] for k, c in enumerate(rev[:5])]
    d2 = d3 = d4 = 0j
    if len(qseries) > 1:
        ds = [0j, qseries[1]]
        for k in range(2, 5):
            qk = qseries[k] if k < len(qseries) else 0j
            acc = k * qk
            for i in range(1, k):
                qi = qseries[i] if i < len(qseries) else 0j
                acc -= qi * ds[k - i]
            ds.append(acc)
        d2, d3, d4 = ds[2], ds[3], ds[4]

    def tail(u: float) -> float:
        if abs(u) < 1e-4:
            return (d2 + d3 * u + d4 * u * u).real
        w = -1j * u
        h = w * _horner(drev, w) / _horner(rev, w)
        return h.real / (u * u)

    total = _integrate_pieces(
        [
            (f, -1.0, 0.0, None),
            (f, 0.0, 1.0, None),
            (tail, -1.0, 0.0, None),
            (tail, 0.0, 1.0, None),
        ],
        spec,
    )
    return total / math.pi


def _delta_coefficients(c) -> list[int]:
    cs = [int(x) for x in c]
    if any(x < 0 for x in cs):
        raise ValueError("coefficients c_{2j} must be nonnegative")
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _unit_interval_roots(poly: IntPolynomial) -> list[float]:
    """Real roots of ``poly`` in (0, 1), located via its square-free part so
    repeated roots do not smear the breakpoint positions."""
    if poly.degree < 1:
        return []
    pts = []
    shifted = poly.shift_down(poly.trailing_zero_count())
    if shifted.degree < 1:
        return []
    for f, _ in square_free_decomposition(shifted):
        for z in np.roots([float(c) for c in f.leading_first()]):
            if abs(z.imag) <= 1e-9 * (1 + abs(z.real)) and 0.0 < z.real < 1.0:
                pts.append(float(z.real))
    return sorted(pts)


def _energy_even_form(cs: list[int], alternating: bool, spec: QuadratureSpec) -> float:
    """E = (2/pi) [ int_0^1 log|R(x)|/x^2 dx + 2J + int_0^1 log|T(u)| du ]
    for R(z) = 1 + sum (+-)^j c_{2j} z^{2j} and T(u) = u^{2J} R(1/u).

    In the alternating case R may have repeated real roots, where the
    expanded form loses all accuracy to cancellation, so log|R| is split
    over R's exact square-free factors (each normalized to value 1 at 0;
    R(0) = 1 makes the normalizing constants cancel exactly).  Factors of
    an even polynomial are even, so each piece keeps the removable 0/0 at
    the origin.
    """
    if not cs:
        return 0.0
    big_j = len(cs)
    rc = [0] * (2 * big_j + 1)
    rc[0] = 1
    for j, cj in enumerate(cs, start=1):
        rc[2 * j] = ((-1) ** j if alternating else 1) * cj
    poly = IntPolynomial(rc)
    factors = square_free_decomposition(poly) if alternating else [(poly, 1)]
    weight = sum(mult for _, mult in factors)
    part = QuadratureSpec(
        abs_tol=spec.abs_tol / weight,
        max_subdivisions=spec.max_subdivisions,
        transform=spec.transform,
    )
    energy = 0.0
    for f, mult in factors:
        f0 = f.coeff(0)
        norm = [c / f0 for c in f.coeffs]
        g = _central_integrand([complex(x) for x in norm], cut=1e-3)
        t = _log_abs_integrand(list(reversed(norm)), at_imag=False)
        central_pts = _unit_interval_roots(f)
        tail_pts = _unit_interval_roots(IntPolynomial(reversed(f.coeffs)))
        total = _integrate_pieces(
            [
                (g, 0.0, 1.0, central_pts),
                (t, 0.0, 1.0, tail_pts),
            ],
            part,
        )
        energy += mult * (total + f.degree)
    return (2.0 / math.pi) * energy


def energy_delta1(c, n: int, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Energy from the nonnegative coefficient vector of the alternating
    form; the integrand log[1 + sum c_{2j} z^{2j}] is strictly positive."""
    cs = _delta_coefficients(c)
    if 2 * len(cs) > n:
        raise ValueError(f"coefficient vector too long for order {n}")
    return _energy_even_form(cs, alternating=False, spec=spec)


def energy_delta2(c, n: int, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Energy from the nonnegative coefficient vector of the all-negative
    cycle form; the integrand log|1 + sum (-1)^j c_{2j} z^{2j}| may have
    interior integrable log singularities."""
    cs = _delta_coefficients(c)
    if 2 * len(cs) > n:
        raise ValueError(f"coefficient vector too long for order {n}")
    return _energy_even_form(cs, alternating=True, spec=spec)


class QuasiOrderRelation(Enum):
    PRECEDES_STRICTLY = "precedes_strictly"
    EQUAL = "equal"
    SUCCEEDS_STRICTLY = "succeeds_strictly"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class QuasiOrderResult:
    """Componentwise comparison of the even-coefficient vectors of two
    members of the alternating class; a strict relation implies a strict
    energy inequality."""

    relation: QuasiOrderRelation
    c1: tuple[int, ...]
    c2: tuple[int, ...]


def _c_vector_form1(s: Sidigraph) -> tuple[int, ...]:
    p = charpoly_exact(s)
    n = s.n
    out = []
    for j in range(1, n // 2 + 1):
        cj = (-1) ** j * p.coeff(n - 2 * j)
        assert cj >= 0, "alternating-class polynomial with negative c value"
        out.append(cj)
    return tuple(out)


def quasi_order_compare(
    s1: Sidigraph, s2: Sidigraph, budget: int = DEFAULT_CYCLE_BUDGET
) -> QuasiOrderResult:
    """Compare two members of the alternating class componentwise on their
    c_{2j} vectors.  Raises NotInDelta1 for inputs outside the class."""
    if s1.n != s2.n:
        raise OrderMismatch(f"orders differ: {s1.n} vs {s2.n}")
    for tag, s in (("first", s1), ("second", s2)):
        if not classify(s, budget=budget).in_delta1:
            raise NotInDelta1(f"{tag} input is not in the alternating class")
    c1 = _c_vector_form1(s1)
    c2 = _c_vector_form1(s2)
    le = all(a <= b for a, b in zip(c1, c2))
    ge = all(a >= b for a, b in zip(c1, c2))
    if le and ge:
        rel = QuasiOrderRelation.EQUAL
    elif le:
        rel = QuasiOrderRelation.PRECEDES_STRICTLY
    elif ge:
        rel = QuasiOrderRelation.SUCCEEDS_STRICTLY
    else:
        rel = QuasiOrderRelation.INCOMPARABLE
    return QuasiOrderResult(rel, c1, c2)


@dataclass(frozen=True)
class ArcDeletionReport:
    e_before: float
    e_after: float
    decreased: bool


def arc_deletion_energy_delta(
    s: Sidigraph, tail: int, head: int, budget: int = DEFAULT_CYCLE_BUDGET
) -> ArcDeletionReport:
    """Delete one arc of a symmetric pair from an alternating-class member
    and report the (theorem-guaranteed) energy decrease."""
    if not classify(s, budget=budget).in_delta1:
        raise NotInDelta1("input is not in the alternating class")
    if not (s.has_arc(tail, head) and s.has_arc(head, tail)):
        raise MissingArc(f"arcs ({tail},{head}) and ({head},{tail}) must both be present")
    e_before = energy_from_spectrum(roots(charpoly_exact(s)))
    e_after = energy_from_spectrum(roots(charpoly_exact(delete_arc(s, tail, head))))
    return ArcDeletionReport(e_before, e_after, e_after < e_before)
