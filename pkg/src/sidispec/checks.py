"""Named verification suites behind the ``check`` CLI command.

Each suite returns a list of CheckRow(name, passed, detail); the CLI
renders them and exits nonzero when any row fails.  These are lighter
versions of the full acceptance tests, sized for interactive use.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from . import constructions, coulson, generate, spectra
from .charpoly import charpoly_exact, charpoly_minors, charpoly_via_theorem, verify_delta_form
from .fileformat import format_float
from .graphs import Sidigraph, adjacency_matrix, classify, is_strongly_connected
from .polynomials import IntPolynomial

SUITES = ("oracle", "delta-forms", "coulson", "theorem41", "products", "paper-values")


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    detail: str = ""


def _row(name: str, passed: bool, detail: str = "") -> CheckRow:
    return CheckRow(name, bool(passed), detail)


def _suite_oracle(seed: int) -> list[CheckRow]:
    rows = []
    for n in (1, 2, 3):
        total = 0
        ok = True
        for s in generate.all_sidigraphs(n):
            total += 1
            if not (charpoly_exact(s) == charpoly_minors(s) == charpoly_via_theorem(s)):
                ok = False
                break
        rows.append(_row(f"three-method agreement, exhaustive n={n}", ok, f"count {total}"))
    rng = random.Random(seed)
    for n in (4, 5, 6):
        ok = all(
            charpoly_exact(s) == charpoly_minors(s) == charpoly_via_theorem(s)
            for s in (generate.random_sidigraph(rng, n, 0.2 + 0.4 * rng.random()) for _ in range(60))
        )
        rows.append(_row(f"three-method agreement, random n={n}", ok, "60 samples"))
    return rows


def _suite_delta_forms(seed: int) -> list[CheckRow]:
    rng = random.Random(seed)
    rows = []
    for target, form_attr in (("delta1", "form1_holds"), ("delta2", "form2_holds")):
        checked = 0
        ok = True
        while checked < 40:
            n = rng.randrange(4, 11)
            s = generate.random_delta_member(rng, n, target)
            rep = verify_delta_form(s)
            if not (getattr(rep, form_attr) and rep.c_values_match_census):
                ok = False
                break
            checked += 1
        rows.append(_row(f"{target}: coefficient form and census match", ok, f"{checked} members"))
    return rows


def _coulson_poly_set() -> list[tuple[str, IntPolynomial]]:
    out = [
        ("z^2 - 1", IntPolynomial.from_leading([1, 0, -1])),
        ("z^2 + 1", IntPolynomial.from_leading([1, 0, 1])),
        ("z^4 + 1", IntPolynomial.from_leading([1, 0, 0, 0, 1])),
        ("z^4 - z^2 + 1", IntPolynomial.from_leading([1, 0, -1, 0, 1])),
    ]
    for n in range(4, 11):
        for kind in ("theorem41_even", "theorem41_odd"):
            parity = 0 if kind == "theorem41_even" else 1
            if n % 2 != parity:
                continue
            top = n - 1 if kind == "theorem41_even" else n - 2
            for j in range(3, top + 1, 2):
                spec = constructions.FamilySpec(kind, n, j)
                p1, p2 = constructions.theorem41_polynomials(spec)
                out.append((f"{kind} n={n} j={j} (+)", p1))
                out.append((f"{kind} n={n} j={j} (-)", p2))
    return out


def _suite_coulson(seed: int, tol: float) -> list[CheckRow]:
    rows = []
    for name, p in _coulson_poly_set():
        ec = coulson.energy_coulson_general(p)
        es = spectra.energy_from_spectrum(spectra.roots(p))
        rows.append(
            _row(
                f"coulson vs spectral: {name}",
                abs(ec - es) <= tol,
                f"|{format_float(ec)} - {format_float(es)}| = {abs(ec - es):.2e}",
            )
        )
    expected = {
        "z^4 + 1": 2 * math.sqrt(2),
        "z^4 - z^2 + 1": 2 * math.sqrt(3),
    }
    for name, value in expected.items():
        p = dict(_coulson_poly_set())[name]
        ec = coulson.energy_coulson_general(p)
        rows.append(_row(f"closed form: {name}", abs(ec - value) <= tol, format_float(ec)))
    return rows


def _suite_theorem41(seed: int) -> list[CheckRow]:
    rows = []
    for n in range(4, 13):
        kind = "theorem41_even" if n % 2 == 0 else "theorem41_odd"
        top = n - 1 if n % 2 == 0 else n - 2
        for j in range(3, top + 1, 2):
            spec = constructions.FamilySpec(kind, n, j)
            s1, s2 = constructions.family_theorem41(spec)
            p1, p2 = constructions.theorem41_polynomials(spec)
            exact = charpoly_exact(s1) == p1 and charpoly_exact(s2) == p2
            e1 = spectra.graph_energy(s1)
            e2 = spectra.graph_energy(s2)
            good = (
                exact
                and not spectra.cospectral(s1, s2)
                and abs(e1 - e2) <= 1e-9
                and is_strongly_connected(s1)
                and is_strongly_connected(s2)
                and not classify(s1).is_cycle_balanced
                and not classify(s2).is_cycle_balanced
            )
            rows.append(
                _row(
                    f"pair n={n} j={j}",
                    good,
                    f"E = {format_float(e1)}, |dE| = {abs(e1 - e2):.1e}",
                )
            )
    return rows


def _suite_products(seed: int) -> list[CheckRow]:
    rng = random.Random(seed)
    ok_conn = True
    ok_kron = True
    trials = 0
    while trials < 30:
        n1 = rng.randrange(2, 7)
        n2 = rng.randrange(2, 7)
        if n1 * n2 > 36:
            continue
        trials += 1
        a = generate.random_strongly_connected_digraph(rng, n1)
        b = generate.random_strongly_connected_digraph(rng, n2)
        prod = constructions.cartesian_product(a, b)
        if not is_strongly_connected(prod):
            ok_conn = False
        kron = np.kron(adjacency_matrix(a), np.eye(n2, dtype=np.int64)) + np.kron(
            np.eye(n1, dtype=np.int64), adjacency_matrix(b)
        )
        if not np.array_equal(adjacency_matrix(prod), kron):
            ok_kron = False
    rows = [
        _row("product of strongly connected inputs is strongly connected", ok_conn, "30 pairs"),
        _row("adjacency equals the Kronecker sum of the factors", ok_kron, "30 pairs"),
    ]
    fx = constructions.builtin_fixtures()
    fam = constructions.power_family(fx["thm211_s1"], fx["thm211_s2"], 2)
    polys = {charpoly_exact(s).coeffs for s in fam}
    rows.append(_row("order-16 power family pairwise cospectral", len(polys) == 1, f"{len(fam)} members"))
    return rows


def _suite_paper_values(seed: int, tol_energy: float) -> list[CheckRow]:
    rows = []
    energy_cases = [
        ("energy(z^6 + 2z^4 + 1) ~ 2.4916", [1, 0, 2, 0, 0, 0, 1], 2.4916, 5e-4),
        ("energy(z^6 + z^4 + 1) ~ 2.9104", [1, 0, 1, 0, 0, 0, 1], 2.9104, 5e-4),
        ("energy(z^6 + z^4 - z^2 - 1) = 2", [1, 0, 1, 0, -1, 0, -1], 2.0, 1e-9),
    ]
    for name, coeffs, value, tol in energy_cases:
        e = spectra.energy_from_spectrum(spectra.roots(IntPolynomial.from_leading(coeffs)))
        rows.append(_row(name, abs(e - value) <= tol, format_float(e)))
    for lead in ([1] + [0] * 5 + [3] + [0] * 5 + [1] + [0] * 5, [1] + [0] * 5 + [1] + [0] * 5 + [1] + [0] * 5):
        p = IntPolynomial.from_leading(lead)
        sp = spectra.roots(p)
        rows.append(
            _row(
                f"degree-17 root residual: {p}",
                sp.max_residual <= 1e-10,
                f"max residual {sp.max_residual:.2e}",
            )
        )
    fx = constructions.builtin_fixtures()
    expectations = [
        ("thm211_s1", [-2, 0, 1, 1], (True, True, True)),
        ("thm212_s1", [-math.sqrt(2), -1, 1, math.sqrt(2)], (False, True, False)),
        ("thm213_s1", None, (False, False, True)),
    ]
    for name, expected_roots, (integral, real, gaussian) in expectations:
        sp = spectra.graph_spectrum(fx[name])
        cls = spectra.classify_spectrum(sp)
        ok = (cls.integral, cls.real, cls.gaussian) == (integral, real, gaussian)
        if expected_roots is not None:
            got = sorted(z.real for z in sp.roots)
            ok = ok and all(abs(a - b) <= 1e-8 for a, b in zip(got, expected_roots))
        rows.append(_row(f"fixture spectrum: {name}", ok, f"class {cls.integral}/{cls.real}/{cls.gaussian}"))
    return rows


def run_suite(
    name: str, seed: int = 20240801, tol_energy: float = 1e-4, tol_quad: float = 1e-6
) -> list[CheckRow]:
    if name == "oracle":
        return _suite_oracle(seed)
    if name == "delta-forms":
        return _suite_delta_forms(seed)
    if name == "coulson":
        return _suite_coulson(seed, tol_energy)
    if name == "theorem41":
        return _suite_theorem41(seed)
    if name == "products":
        return _suite_products(seed)
    if name == "paper-values":
        return _suite_paper_values(seed, tol_energy)
    raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)})")
