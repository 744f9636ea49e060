"""Numeric spectra and energy on top of exact characteristic polynomials.

Roots are computed by an Ehrlich-Aberth simultaneous iteration.  Two exact
preprocessing steps keep multiple roots honest: zero roots are deflated by
trailing-coefficient count, and the remaining polynomial is split into
square-free factors (Yun's algorithm over the integers), so the iteration
only ever sees simple roots.  A companion-matrix eigenvalue mode is kept as
a structurally different cross-check.

Cospectrality, by contrast, is decided exactly on integer polynomials; the
numeric and exact regimes are deliberately separate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .charpoly import all_linear_subs, charpoly_exact
from .errors import ConvergenceFailure, OrderMismatch
from .graphs import Sidigraph, enumerate_cycles
from .polynomials import IntPolynomial, square_free_decomposition

DEFAULT_CLUSTER_TOL = 1e-8
DEFAULT_CLASS_TOL = 1e-6
DEFAULT_ENERGY_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """All complex roots of ``source_poly`` (with multiplicity), sorted by
    (real, imaginary) part, plus the clustering radius used to group them."""

    roots: tuple[complex, ...]
    cluster_tol: float
    source_poly: IntPolynomial

    @cached_property
    def clusters(self) -> tuple[tuple[complex, int], ...]:
        """(representative, multiplicity) pairs; roots inside one cluster
        were snapped to a common value during root finding."""
        out: list[tuple[complex, int]] = []
        for z in self.roots:
            if out and z == out[-1][0]:
                out[-1] = (z, out[-1][1] + 1)
            else:
                out.append((z, 1))
        return tuple(out)

    @cached_property
    def max_residual(self) -> float:
        """max |p(root)| / max |coefficient| over all roots."""
        scale = max(abs(c) for c in self.source_poly.coeffs)
        worst = 0.0
        for z in self.roots:
            worst = max(worst, abs(self.source_poly.evaluate(z)))
        return worst / scale


@dataclass(frozen=True)
class SpectrumClass:
    """Whether every eigenvalue is (close to) an integer, a real, or a
    Gaussian integer.  integral implies real and gaussian."""

    integral: bool
    real: bool
    gaussian: bool
    tol: float


def _aberth(coeffs: list[int], max_iter: int) -> np.ndarray:
    """Roots of a square-free polynomial with nonzero constant term."""
    m = len(coeffs) - 1
    if m == 1:
        return np.array([-coeffs[0] / coeffs[1]], dtype=complex)
    try:
        c = np.array([float(x) for x in coeffs], dtype=float)
    except OverflowError as exc:
        raise ConvergenceFailure(f"coefficients overflow double precision: {exc}")
    if not np.all(np.isfinite(c)):
        raise ConvergenceFailure("coefficients overflow double precision")
    c = c / c[-1]
    eps = np.finfo(float).eps

    radius = abs(c[0]) ** (1.0 / m)
    radius = min(max(radius, 1e-3), 1.0 + float(np.max(np.abs(c[:-1]))))
    angles = 2.0 * np.pi * (np.arange(m) + 0.25) / m + 0.42
    z = radius * np.exp(1j * angles)

    dcoef = c[1:] * np.arange(1, m + 1)
    stop_factor = (2 * m + 4) * eps
    for _ in range(max_iter):
        p = np.zeros_like(z)
        bound = np.zeros(m)
        az = np.abs(z)
        for k in range(m, -1, -1):
            p = p * z + c[k]
            bound = bound * az + abs(c[k])
        converged = np.abs(p) <= stop_factor * bound
        if converged.all():
            return z
        dp = np.zeros_like(z)
        for k in range(m - 1, -1, -1):
            dp = dp * z + dcoef[k]
        dp = np.where(dp == 0, eps, dp)
        newton = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = (1.0 / diff).sum(axis=1)
        denom = 1.0 - newton * s
        denom = np.where(np.abs(denom) < 1e-300, 1.0, denom)
        step = newton / denom
        step[converged] = 0.0
        z = z - step
    raise ConvergenceFailure(f"no convergence after {max_iter} iterations")


def _companion_roots(coeffs: list[int]) -> np.ndarray:
    m = len(coeffs) - 1
    lead = coeffs[-1]
    comp = np.zeros((m, m))
    comp[1:, :-1] = np.eye(m - 1)
    comp[:, -1] = [-c / lead for c in coeffs[:-1]]
    return np.linalg.eigvals(comp)


def roots(
    p: IntPolynomial,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_iter: int = 1000,
    method: str = "aberth",
) -> Spectrum:
    """All complex roots of ``p`` with multiplicity.

    Zero roots are deflated exactly before iteration, multiple roots are
    reduced to simple ones via exact square-free factorization, and the
    final list is grouped within ``cluster_tol`` (members of a group are
    snapped to the group mean; group means within 1e-12 of an axis are
    snapped onto it, so conjugate-forced zero parts come out exact).
    ``method`` selects the per-factor engine: "aberth" (default) or
    "companion" (cross-check mode).
    """
    if p.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    if method not in ("aberth", "companion"):
        raise ValueError(f"unknown method {method!r}")
    nzeros = p.trailing_zero_count()
    vals: list[complex] = [0j] * nzeros
    q = p.shift_down(nzeros)
    if q.degree >= 1:
        for factor, mult in square_free_decomposition(q):
            found = (
                _aberth(list(factor.coeffs), max_iter)
                if method == "aberth"
                else _companion_roots(list(factor.coeffs))
            )
            for z in found:
                vals.extend([complex(z)] * mult)

    # cluster within tolerance and snap members to the cluster mean
    vals.sort(key=lambda z: (z.real, z.imag))
    groups: list[list[complex]] = []
    for z in vals:
        for g in groups:
            if any(abs(z - w) <= cluster_tol for w in g):
                g.append(z)
                break
        else:
            groups.append([z])
    snapped: list[complex] = []
    for g in groups:
        mean = sum(g) / len(g)
        axis_tol = 1e-12 * (1.0 + abs(mean))
        re = 0.0 if abs(mean.real) <= axis_tol else mean.real
        im = 0.0 if abs(mean.imag) <= axis_tol else mean.imag
        snapped.extend([complex(re, im)] * len(g))
    snapped.sort(key=lambda z: (z.real, z.imag))
    return Spectrum(tuple(snapped), cluster_tol, p)


def energy_from_spectrum(sp: Spectrum) -> float:
    """Sum of |real part| over all roots with multiplicity (via clusters)."""
    return float(sum(m * abs(z.real) for z, m in sp.clusters))


def classify_spectrum(sp: Spectrum, tol: float = DEFAULT_CLASS_TOL) -> SpectrumClass:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    real = all(abs(z.imag) <= tol for z in sp.roots)
    integral = real and all(abs(z.real - round(z.real)) <= tol for z in sp.roots)
    gaussian = all(
        abs(z.real - round(z.real)) <= tol and abs(z.imag - round(z.imag)) <= tol
        for z in sp.roots
    )
    return SpectrumClass(integral=integral, real=real, gaussian=gaussian, tol=tol)


def graph_spectrum(s: Sidigraph, **kwargs) -> Spectrum:
    return roots(charpoly_exact(s), **kwargs)


def graph_energy(s: Sidigraph) -> float:
    return energy_from_spectrum(graph_spectrum(s))


def cospectral(s1: Sidigraph, s2: Sidigraph) -> bool:
    """Exact integer equality of the two characteristic polynomials."""
    if s1.n != s2.n:
        raise OrderMismatch(f"orders differ: {s1.n} vs {s2.n}")
    return charpoly_exact(s1) == charpoly_exact(s2)


def equienergetic(s1: Sidigraph, s2: Sidigraph, tol: float = DEFAULT_ENERGY_TOL) -> bool:
    """Noncospectral with energies equal within ``tol``."""
    if cospectral(s1, s2):
        return False
    return abs(graph_energy(s1) - graph_energy(s2)) <= tol


@dataclass(frozen=True)
class QuasiCospectralMatch:
    """A pair of signings of two digraphs with exactly equal characteristic
    polynomials.

    strict: the underlying digraphs themselves are NOT cospectral.
    strong: the underlying digraphs are cospectral and both returned
    signings are non-cycle-balanced.
    """

    signing1: Sidigraph
    signing2: Sidigraph
    charpoly: IntPolynomial
    strict: bool
    strong: bool


def _signing_tables(d: Sidigraph):
    """Precompute mask-evaluation tables for all signings of a digraph.

    Returns (arc pairs, cycle arc-masks, sub records) where each sub record
    is (order, base contribution for even negatives, arc mask).  A signing
    is a bitmask over d.arcs; bit i set means arc i is negative.
    """
    index = {(t, h): i for i, (t, h, _) in enumerate(d.arcs)}
    cycles = enumerate_cycles(d)
    cycle_masks = []
    for c in cycles:
        m = 0
        for u, v in c.arc_pairs():
            m |= 1 << index[(u, v)]
        cycle_masks.append(m)
    subs = []
    for l in all_linear_subs(d):
        m = 0
        for c in l.cycles:
            for u, v in c.arc_pairs():
                m |= 1 << index[(u, v)]
        base = -1 if l.components % 2 else 1
        subs.append((l.order, base, m))
    return cycle_masks, subs


def _charpoly_of_mask(n: int, subs, mask: int) -> tuple[int, ...]:
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for order, base, arcmask in subs:
        if (mask & arcmask).bit_count() % 2:
            coeffs[n - order] -= base
        else:
            coeffs[n - order] += base
    return tuple(coeffs)


def _mask_balanced(cycle_masks, mask: int) -> bool:
    return all((mask & cm).bit_count() % 2 == 0 for cm in cycle_masks)


def _apply_mask(d: Sidigraph, mask: int) -> Sidigraph:
    return Sidigraph(
        d.n,
        (
            (t, h, -1 if mask >> i & 1 else 1)
            for i, (t, h, _) in enumerate(d.arcs)
        ),
    )


def quasi_cospectral_search(
    d1: Sidigraph,
    d2: Sidigraph,
    budget: int = 1 << 21,
    seed: int = 0,
) -> QuasiCospectralMatch | None:
    """Search the signings of two all-positive digraphs for an exactly
    cospectral pair.

    Exhaustive over all 2^m1 + 2^m2 signings when that fits ``budget``
    (then an absent result is a proof); otherwise uniform random signings
    are sampled within the budget and absence is not conclusive.  When the
    underlying digraphs are cospectral, a pair with both signings
    non-cycle-balanced is preferred so strong witnesses are surfaced.
    """
    if not (d1.is_all_positive() and d2.is_all_positive()):
        raise ValueError("inputs must be all-positive digraphs")
    underlying_cospectral = d1.n == d2.n and charpoly_exact(d1) == charpoly_exact(d2)

    cyc1, subs1 = _signing_tables(d1)
    cyc2, subs2 = _signing_tables(d2)
    m1, m2 = d1.arc_count, d2.arc_count

    exhaustive = (1 << m1) + (1 << m2) <= budget
    if exhaustive:
        masks1 = range(1 << m1)
        masks2 = range(1 << m2)
    else:
        rng = random.Random(seed)
        half = max(budget // 2, 1)
        masks1 = [0] + [rng.getrandbits(m1) for _ in range(half)]
        masks2 = [0] + [rng.getrandbits(m2) for _ in range(half)]

    table: dict[tuple[int, ...], list[int | None]] = {}
    for mask in masks1:
        key = _charpoly_of_mask(d1.n, subs1, mask)
        slot = table.setdefault(key, [None, None])
        if slot[0] is None:
            slot[0] = mask
        if slot[1] is None and not _mask_balanced(cyc1, mask):
            slot[1] = mask

    first_pair: tuple[int, int] | None = None
    strong_pair: tuple[int, int] | None = None
    for mask in masks2:
        key = _charpoly_of_mask(d2.n, subs2, mask)
        slot = table.get(key)
        if slot is None:
            continue
        if first_pair is None and slot[0] is not None:
            first_pair = (slot[0], mask)
        if (
            underlying_cospectral
            and slot[1] is not None
            and not _mask_balanced(cyc2, mask)
        ):
            strong_pair = (slot[1], mask)
            break
        if first_pair is not None and not underlying_cospectral:
            break

    pair = strong_pair or first_pair
    if pair is None:
        return None
    s1 = _apply_mask(d1, pair[0])
    s2 = _apply_mask(d2, pair[1])
    shared = charpoly_exact(s1)
    strong = (
        underlying_cospectral
        and not _mask_balanced(cyc1, pair[0])
        and not _mask_balanced(cyc2, pair[1])
    )
    return QuasiCospectralMatch(
        signing1=s1,
        signing2=s2,
        charpoly=shared,
        strict=not underlying_cospectral,
        strong=strong,
    )
