"""Seeded random sidigraph generators for property tests and check suites.

Everything takes an explicit ``random.Random`` so callers control
determinism.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from .constructions import assign_signs_for_class
from .graphs import Sidigraph, enumerate_cycles, is_strongly_connected


def all_sidigraphs(n: int) -> Iterator[Sidigraph]:
    """Every sidigraph on n vertices: 3^(n(n-1)) absence/sign assignments."""
    pairs = [(t, h) for t in range(n) for h in range(n) if t != h]
    for states in product((0, 1, -1), repeat=len(pairs)):
        arcs = [
            (t, h, state)
            for (t, h), state in zip(pairs, states)
            if state
        ]
        yield Sidigraph(n, arcs)


def random_sidigraph(
    rng: random.Random, n: int, arc_prob: float = 0.4, neg_prob: float = 0.5
) -> Sidigraph:
    arcs = []
    for t in range(n):
        for h in range(n):
            if t != h and rng.random() < arc_prob:
                arcs.append((t, h, -1 if rng.random() < neg_prob else 1))
    return Sidigraph(n, arcs)


def random_digraph(rng: random.Random, n: int, arc_prob: float = 0.4) -> Sidigraph:
    """All-positive random digraph."""
    return random_sidigraph(rng, n, arc_prob=arc_prob, neg_prob=0.0)


def random_strongly_connected_digraph(
    rng: random.Random, n: int, extra_prob: float = 0.15, bipartite: bool = False
) -> Sidigraph:
    """A random full cycle (guaranteeing strong connectivity) plus extras.

    With ``bipartite`` set, n must be even: the cycle alternates between the
    halves of a random balanced bipartition and extras stay across it.
    """
    if bipartite:
        if n % 2:
            raise ValueError("bipartite strongly connected generator needs even n")
        side0 = rng.sample(range(n), n // 2)
        side1 = [v for v in range(n) if v not in side0]
        rng.shuffle(side1)
        order = [v for pair in zip(side0, side1) for v in pair]
    else:
        order = list(range(n))
        rng.shuffle(order)
    arcs = {
        (order[i], order[(i + 1) % n]): 1 for i in range(n)
    }
    color = {}
    if bipartite:
        for i, v in enumerate(order):
            color[v] = i % 2
    for t in range(n):
        for h in range(n):
            if t == h or (t, h) in arcs:
                continue
            if bipartite and color[t] == color[h]:
                continue
            if rng.random() < extra_prob:
                arcs[(t, h)] = 1
    return Sidigraph(n, ((t, h, s) for (t, h), s in arcs.items()))


def random_bipartite_digraph(
    rng: random.Random,
    n: int,
    arc_prob: float = 0.5,
    ensure_digon: bool = False,
) -> Sidigraph:
    """All-positive digraph with arcs only across a random bipartition."""
    if n < 2:
        return Sidigraph(n)
    color = [rng.randrange(2) for _ in range(n)]
    color[0], color[1] = 0, 1  # keep both sides nonempty
    arcs = {}
    for t in range(n):
        for h in range(n):
            if t != h and color[t] != color[h] and rng.random() < arc_prob:
                arcs[(t, h)] = 1
    if ensure_digon:
        side0 = [v for v in range(n) if color[v] == 0]
        side1 = [v for v in range(n) if color[v] == 1]
        u, v = rng.choice(side0), rng.choice(side1)
        arcs[(u, v)] = 1
        arcs[(v, u)] = 1
    return Sidigraph(n, ((t, h, s) for (t, h), s in arcs.items()))


def random_delta_member(
    rng: random.Random,
    n: int,
    target: str,
    arc_prob: float = 0.5,
    attempts: int = 300,
    require_cycle: bool = True,
    require_digon: bool = False,
) -> Sidigraph:
    """A random member of the requested cycle-sign class, found by signing
    random bipartite digraphs; raises RuntimeError when attempts run out."""
    for _ in range(attempts):
        d = random_bipartite_digraph(rng, n, arc_prob, ensure_digon=require_digon)
        signed = assign_signs_for_class(d, target)
        if signed is None:
            continue
        if require_cycle and not enumerate_cycles(signed):
            continue
        return signed
    raise RuntimeError(f"no {target} member found in {attempts} attempts")


def random_delta1_superset_pair(
    rng: random.Random, n: int, arc_prob: float = 0.4, attempts: int = 300
) -> tuple[Sidigraph, Sidigraph]:
    """Two alternating-class members whose underlying digraphs are nested
    (the second adds a reversal digon plus possibly more arcs), so their
    coefficient vectors compare componentwise."""
    for _ in range(attempts):
        d1 = random_bipartite_digraph(rng, n, arc_prob)
        if not d1.arcs:
            continue
        t, h, _ = rng.choice(d1.arcs)
        extra = dict.fromkeys(((a[0], a[1]) for a in d1.arcs), 1)
        extra[(h, t)] = 1
        d2 = Sidigraph(n, ((a, b, 1) for a, b in extra))
        s1 = assign_signs_for_class(d1, "delta1")
        s2 = assign_signs_for_class(d2, "delta1")
        if s1 is None or s2 is None:
            continue
        return s1, s2
    raise RuntimeError(f"no nested pair found in {attempts} attempts")
