"""Explicit sidigraph constructions: signed cycles, the equienergetic
chord-cycle families, Cartesian products and power families, sign
assignment into the two bipartite cycle-sign classes, and exhaustive /
randomized search for graphs realizing a target characteristic polynomial.

Fixture graphs for the cospectral 4-vertex families ship as data files in
the CLI text format and are validated against their recorded polynomials
and structural flags at load time.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .charpoly import all_linear_subs, charpoly_exact
from .errors import (
    FixtureValidationFailure,
    InvalidFamilySpec,
    OrderMismatch,
    SearchBudgetExceeded,
    SizeOverflow,
)
from .graphs import (
    DEFAULT_CYCLE_BUDGET,
    Sidigraph,
    classify,
    enumerate_cycles,
    is_bipartite,
    is_strongly_connected,
    is_symmetric,
)
from .polynomials import IntPolynomial

FAMILY_KINDS = ("theorem41_even", "theorem41_odd", "power_family")
DEFAULT_PRODUCT_BOUND = 4096
FIXTURE_ENV_VAR = "SIDISPEC_FIXTURES"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of a named construction family.

    theorem41_even: n even >= 4, chord parameter j odd with 3 <= j <= n-1.
    theorem41_odd:  n odd >= 5, j odd with 3 <= j <= n-2.
    power_family:   k iterated-product copies (uses ``k``, ignores ``j``).
    """

    kind: str
    n: int
    j: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise InvalidFamilySpec(f"unknown family kind {self.kind!r}")
        if self.kind == "theorem41_even":
            if self.n < 4 or self.n % 2:
                raise InvalidFamilySpec("even family needs even n >= 4")
            if self.j is None or self.j % 2 == 0 or not 3 <= self.j <= self.n - 1:
                raise InvalidFamilySpec("even family needs odd j with 3 <= j <= n-1")
        elif self.kind == "theorem41_odd":
            if self.n < 5 or self.n % 2 == 0:
                raise InvalidFamilySpec("odd family needs odd n >= 5")
            if self.j is None or self.j % 2 == 0 or not 3 <= self.j <= self.n - 2:
                raise InvalidFamilySpec("odd family needs odd j with 3 <= j <= n-2")
        else:
            if self.k is None or self.k < 1:
                raise InvalidFamilySpec("power family needs a copy count k >= 1")


def signed_cycle(n: int, sign: int) -> Sidigraph:
    """Directed n-cycle; one negative arc when sign is -1, none otherwise.

    Its characteristic polynomial is z^n - sign.
    """
    if n < 2:
        raise ValueError("a cycle needs length >= 2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    arcs = [(i, (i + 1) % n, 1) for i in range(n)]
    if sign == -1:
        arcs[0] = (0, 1, -1)
    return Sidigraph(n, arcs)


def _family_arcs_even(n: int, j: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0), (j - 1, 0)]


def _family_arcs_odd(n: int, j: int) -> list[tuple[int, int]]:
    return (
        [(i, i + 1) for i in range(n - 2)]
        + [(n - 2, 0), (j - 1, 0), (1, n - 1), (n - 1, 0)]
    )


def family_theorem41(spec: FamilySpec) -> tuple[Sidigraph, Sidigraph]:
    """The equienergetic noncospectral pair for the given order.

    Even case: an n-cycle with a chord closing an odd cycle of length j;
    the two members differ only in which arc is negative.  Odd case: an
    (n-1)-cycle with the chord plus a 3-cycle detour through the last
    vertex.  Both members are strongly connected and non-cycle-balanced.
    """
    if spec.kind == "theorem41_even":
        pairs = _family_arcs_even(spec.n, spec.j)
    elif spec.kind == "theorem41_odd":
        pairs = _family_arcs_odd(spec.n, spec.j)
    else:
        raise InvalidFamilySpec("family_theorem41 needs an even or odd family spec")
    neg1 = (0, 1)
    neg2 = (spec.j - 1, spec.j)
    first = Sidigraph(spec.n, ((t, h, -1 if (t, h) == neg1 else 1) for t, h in pairs))
    second = Sidigraph(spec.n, ((t, h, -1 if (t, h) == neg2 else 1) for t, h in pairs))
    return first, second


def theorem41_polynomials(spec: FamilySpec) -> tuple[IntPolynomial, IntPolynomial]:
    """The pair's exact characteristic polynomials in closed form."""
    n, j = spec.n, spec.j
    if spec.kind == "theorem41_even":
        terms = [(n, 1), (n - j, 1), (0, 1)], [(n, 1), (n - j, -1), (0, 1)]
    elif spec.kind == "theorem41_odd":
        terms = (
            [(n, 1), (n - 3, 1), (n - j, 1), (1, 1)],
            [(n, 1), (n - 3, -1), (n - j, -1), (1, 1)],
        )
    else:
        raise InvalidFamilySpec("no closed-form polynomials for this family kind")
    out = []
    for spec_terms in terms:
        coeffs = [0] * (n + 1)
        for k, c in spec_terms:
            coeffs[k] += c
        out.append(IntPolynomial(coeffs))
    return out[0], out[1]


def cartesian_product(
    s1: Sidigraph, s2: Sidigraph, max_order: int = DEFAULT_PRODUCT_BOUND
) -> Sidigraph:
    """Product on vertex pairs (i, j) -> i * n2 + j whose adjacency matrix
    is the Kronecker sum A1 (x) I + I (x) A2; signs come from the factor
    supplying the moving coordinate."""
    n1, n2 = s1.n, s2.n
    if n1 * n2 > max_order:
        raise SizeOverflow(f"product order {n1 * n2} exceeds the bound {max_order}")
    arcs = []
    for t, h, sign in s1.arcs:
        for w in range(n2):
            arcs.append((t * n2 + w, h * n2 + w, sign))
    for t, h, sign in s2.arcs:
        for u in range(n1):
            arcs.append((u * n2 + t, u * n2 + h, sign))
    return Sidigraph(n1 * n2, arcs)


def power_family(
    s1: Sidigraph,
    s2: Sidigraph,
    count: int,
    max_order: int = DEFAULT_PRODUCT_BOUND,
) -> list[Sidigraph]:
    """The iterated products with k copies of s1 and count-k of s2, k=1..count.

    When s1 and s2 are cospectral every output shares one exact
    characteristic polynomial.
    """
    if s1.n != s2.n:
        raise OrderMismatch(f"orders differ: {s1.n} vs {s2.n}")
    if count < 1:
        raise ValueError("count must be >= 1")
    if s1.n**count > max_order:
        raise SizeOverflow(
            f"power-family order {s1.n**count} exceeds the bound {max_order}"
        )
    out = []
    for k in range(1, count + 1):
        factors = [s1] * k + [s2] * (count - k)
        acc = factors[0]
        for f in factors[1:]:
            acc = cartesian_product(acc, f, max_order=max_order)
        out.append(acc)
    return out


def _solve_gf2(rows: list[int], rhs: list[int]) -> int | None:
    """One solution bitmask of a GF(2) linear system, or None.

    Rows are variable bitmasks.  Free variables are set to 0, so the
    result is deterministic.
    """
    basis: dict[int, tuple[int, int]] = {}
    for mask, b in zip(rows, rhs):
        while mask:
            pivot = mask.bit_length() - 1
            if pivot in basis:
                pmask, pb = basis[pivot]
                mask ^= pmask
                b ^= pb
            else:
                basis[pivot] = (mask, b)
                break
        else:
            if b:
                return None
    x = 0
    for pivot in sorted(basis):
        mask, b = basis[pivot]
        val = b ^ ((mask ^ (1 << pivot)) & x).bit_count() % 2
        x |= val << pivot
    return x


def assign_signs_for_class(
    d: Sidigraph, target: str, budget: int = DEFAULT_CYCLE_BUDGET
) -> Sidigraph | None:
    """Sign the arcs of an all-positive bipartite digraph so that every
    cycle meets the target class constraint.

    delta1: cycles of length divisible by 4 negative, the rest positive.
    delta2: every cycle negative.  Solved as one GF(2) parity equation per
    enumerated simple cycle with one unknown per arc; every cycle is
    constrained directly rather than relying on a cycle basis.  Returns
    None when the system is inconsistent.
    """
    if target not in ("delta1", "delta2"):
        raise ValueError(f"target must be 'delta1' or 'delta2', got {target!r}")
    if not d.is_all_positive():
        raise ValueError("expected an all-positive digraph")
    if not is_bipartite(d):
        raise ValueError("expected a bipartite digraph")
    index = {(t, h): i for i, (t, h, _) in enumerate(d.arcs)}
    rows = []
    rhs = []
    for c in enumerate_cycles(d, budget=budget):
        mask = 0
        for pair in c.arc_pairs():
            mask |= 1 << index[pair]
        rows.append(mask)
        if target == "delta2":
            rhs.append(1)
        else:
            rhs.append(1 if c.length % 4 == 0 else 0)
    solution = _solve_gf2(rows, rhs)
    if solution is None:
        return None
    return Sidigraph(
        d.n,
        (
            (t, h, -1 if solution >> i & 1 else 1)
            for i, (t, h, _) in enumerate(d.arcs)
        ),
    )


def _subset_matches(
    n: int,
    pairs: list[tuple[int, int]],
    chosen: list[int],
    target_coeffs: tuple[int, ...],
    non_cycle_balanced: bool | None,
) -> list[Sidigraph]:
    """All signings of one underlying arc set matching the target polynomial."""
    d = Sidigraph(n, ((pairs[i][0], pairs[i][1], 1) for i in chosen))
    cycles = enumerate_cycles(d)
    if non_cycle_balanced is True and not cycles:
        return []
    index = {(t, h): i for i, (t, h, _) in enumerate(d.arcs)}
    subs = all_linear_subs(d)
    orders_needed = [j for j in range(1, n + 1) if target_coeffs[n - j] != 0]
    count_by_order: dict[int, int] = {}
    for l in subs:
        count_by_order[l.order] = count_by_order.get(l.order, 0) + 1
    if any(abs(target_coeffs[n - j]) > count_by_order.get(j, 0) for j in orders_needed):
        return []

    k = d.arc_count
    sub_records = []
    for l in subs:
        m = 0
        for c in l.cycles:
            for pair in c.arc_pairs():
                m |= 1 << index[pair]
        sub_records.append((l.order, -1 if l.components % 2 else 1, m))
    cycle_masks = []
    for c in cycles:
        m = 0
        for pair in c.arc_pairs():
            m |= 1 << index[pair]
        cycle_masks.append(m)

    matches: list[int] = []
    if k >= 8:
        masks = np.arange(1 << k, dtype=np.uint64)
        b = np.zeros((n + 1, len(masks)), dtype=np.int32)
        b[n] = 1
        for order, base, arcmask in sub_records:
            parity = np.bitwise_count(masks & np.uint64(arcmask)).astype(np.int32) & 1
            b[n - order] += base * (1 - 2 * parity)
        ok = np.ones(len(masks), dtype=bool)
        for j in range(0, n + 1):
            ok &= b[j] == target_coeffs[j]
        if non_cycle_balanced is not None:
            balanced = np.ones(len(masks), dtype=bool)
            for cm in cycle_masks:
                balanced &= (np.bitwise_count(masks & np.uint64(cm)) & 1) == 0
            ok &= balanced == (not non_cycle_balanced)
        matches = [int(m) for m in masks[ok]]
    else:
        from .spectra import _charpoly_of_mask, _mask_balanced

        for mask in range(1 << k):
            if _charpoly_of_mask(n, sub_records, mask) != target_coeffs:
                continue
            if non_cycle_balanced is not None:
                if _mask_balanced(cycle_masks, mask) == non_cycle_balanced:
                    continue
            matches.append(mask)

    out = []
    for mask in matches:
        out.append(
            Sidigraph(
                n,
                (
                    (t, h, -1 if mask >> i & 1 else 1)
                    for i, (t, h, _) in enumerate(d.arcs)
                ),
            )
        )
    return out


def search_by_charpoly(
    n: int,
    target: IntPolynomial,
    strongly_connected: bool | None = None,
    non_cycle_balanced: bool | None = None,
    bipartite: bool | None = None,
    max_arcs: int | None = None,
    budget: int = 2_000_000,
    seed: int = 0,
) -> list[Sidigraph]:
    """Sidigraphs of order n whose characteristic polynomial equals target.

    Exhaustive over all 3^(n(n-1)) absence/sign assignments when n <= 5 and
    that count fits ``budget`` (then the result is complete); otherwise
    uniform random assignments are drawn, and SearchBudgetExceeded is
    raised if the budget runs out with no match found (absence is then not
    a proof).  Results come back in canonical arc-tuple order.
    """
    if target.degree != n or not target.is_monic:
        raise ValueError("target must be a monic polynomial of degree n")
    pairs = [(t, h) for t in range(n) for h in range(n) if t != h]
    m = len(pairs)
    target_coeffs = tuple(target.coeff(k) for k in range(n + 1))

    def digraph_ok(chosen: list[int]) -> bool:
        if max_arcs is not None and len(chosen) > max_arcs:
            return False
        d = Sidigraph(n, ((pairs[i][0], pairs[i][1], 1) for i in chosen))
        if strongly_connected is not None and is_strongly_connected(d) != strongly_connected:
            return False
        if bipartite is not None and is_bipartite(d) != bipartite:
            return False
        return True

    results: list[Sidigraph] = []
    if n <= 5 and 3**m <= budget:
        for subset in range(1 << m):
            chosen = [i for i in range(m) if subset >> i & 1]
            if max_arcs is not None and len(chosen) > max_arcs:
                continue
            if not digraph_ok(chosen):
                continue
            results.extend(
                _subset_matches(n, pairs, chosen, target_coeffs, non_cycle_balanced)
            )
        results.sort(key=lambda s: s.arcs)
        return results

    rng = random.Random(seed)
    seen: set[tuple] = set()
    for _ in range(budget):
        arcs = []
        for t, h in pairs:
            state = rng.randrange(3)
            if state:
                arcs.append((t, h, 1 if state == 1 else -1))
        s = Sidigraph(n, arcs)
        if s.arcs in seen:
            continue
        if max_arcs is not None and s.arc_count > max_arcs:
            continue
        if charpoly_exact(s) != target:
            continue
        if strongly_connected is not None and is_strongly_connected(s) != strongly_connected:
            continue
        if bipartite is not None and is_bipartite(s) != bipartite:
            continue
        if non_cycle_balanced is not None:
            if classify(s).is_cycle_balanced != (not non_cycle_balanced):
                continue
        seen.add(s.arcs)
        results.append(s)
    if not results:
        raise SearchBudgetExceeded(
            f"no match within {budget} random assignments (not a proof of absence)"
        )
    results.sort(key=lambda s: s.arcs)
    return results


# name -> (characteristic polynomial leading-first, cycle balanced flag)
_FIXTURE_EXPECTATIONS: dict[str, tuple[tuple[int, ...], bool]] = {
    "thm211_s1": ((1, 0, -3, 2, 0), False),
    "thm211_s2": ((1, 0, -3, 2, 0), False),
    "thm212_s1": ((1, 0, -3, 0, 2), False),
    "thm212_s2": ((1, 0, -3, 0, 2), False),
    "thm212_s3": ((1, 0, -3, 0, 2), False),
    "thm213_s1": ((1, 0, 0, 0, -1), True),
    "thm213_s2": ((1, 0, 0, 0, -1), False),
    "thm213_s3": ((1, 0, 0, 0, -1), False),
}


def fixture_directory() -> Path:
    override = os.environ.get(FIXTURE_ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("sidispec") / "fixtures"))


def builtin_fixtures() -> dict[str, Sidigraph]:
    """The named 4-vertex cospectral fixture graphs, validated on load.

    Fidelity contract: each fixture must reproduce its recorded polynomial
    exactly and carry the recorded flags (strongly connected, non-symmetric,
    cycle balance as listed); any mismatch raises FixtureValidationFailure.
    """
    from .fileformat import parse_sidigraph

    base = fixture_directory()
    out: dict[str, Sidigraph] = {}
    for name, (lead_coeffs, balanced) in _FIXTURE_EXPECTATIONS.items():
        path = base / f"{name}.sidigraph"
        try:
            s = parse_sidigraph(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise FixtureValidationFailure(f"{name}: cannot read {path}: {exc}")
        except Exception as exc:
            raise FixtureValidationFailure(f"{name}: cannot parse {path}: {exc}")
        expected = IntPolynomial.from_leading(lead_coeffs)
        actual = charpoly_exact(s)
        if actual != expected:
            raise FixtureValidationFailure(
                f"{name}: characteristic polynomial {actual} != recorded {expected}"
            )
        if not is_strongly_connected(s):
            raise FixtureValidationFailure(f"{name}: not strongly connected")
        if is_symmetric(s):
            raise FixtureValidationFailure(f"{name}: unexpectedly symmetric")
        if classify(s).is_cycle_balanced != balanced:
            raise FixtureValidationFailure(
                f"{name}: cycle balance flag differs from the recorded {balanced}"
            )
        out[name] = s
    return out
