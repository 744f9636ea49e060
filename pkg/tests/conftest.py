import pytest

from sidispec.constructions import builtin_fixtures
from sidispec.graphs import Sidigraph


def digon(sign01: int = 1, sign10: int = 1) -> Sidigraph:
    return Sidigraph(2, [(0, 1, sign01), (1, 0, sign10)])


def directed_cycle(n: int, negative_arcs: tuple[tuple[int, int], ...] = ()) -> Sidigraph:
    arcs = []
    for i in range(n):
        pair = (i, (i + 1) % n)
        arcs.append((*pair, -1 if pair in negative_arcs else 1))
    return Sidigraph(n, arcs)


def assert_multiset_close(actual, expected, tol=1e-8):
    """Greedy nearest matching of two complex multisets within tol."""
    assert len(actual) == len(expected)
    remaining = list(expected)
    for z in actual:
        best = min(range(len(remaining)), key=lambda i: abs(remaining[i] - z))
        assert abs(remaining[best] - z) <= tol, (
            f"{z} has no partner within {tol}; closest {remaining[best]}"
        )
        remaining.pop(best)


@pytest.fixture(scope="session")
def fixtures():
    return builtin_fixtures()
