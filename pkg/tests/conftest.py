"""Shared fixtures and definition-level brute-force oracles.

The oracles here work on raw row tuples and never touch the package's
search machinery, so they can arbitrate when implementation and spec-level
expectations disagree.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import pytest

from teachdim import ConceptClass, Graph


def make_class(rows, labels=None, point_labels=None) -> ConceptClass:
    return ConceptClass.from_rows(rows, labels=labels, point_labels=point_labels)


@pytest.fixture
def point_functions() -> ConceptClass:
    """Three point functions plus the all-zero concept over three points."""
    return make_class(["100", "010", "001", "000"])


def random_class(rng: random.Random, max_concepts=10, max_points=8) -> ConceptClass:
    width = rng.randint(1, max_points)
    n = rng.randint(1, min(max_concepts, 2**width))
    masks = rng.sample(range(2**width), n)
    rows = [tuple((m >> i) & 1 for i in range(width)) for m in masks]
    return ConceptClass.from_rows(rows, labels=[f"c{i}" for i in range(n)])


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


# -- brute-force oracles -------------------------------------------------------


def bf_is_teaching_set(rows, ci, points) -> bool:
    return all(
        any(rows[o][x] != rows[ci][x] for x in points)
        for o in range(len(rows))
        if o != ci
    )


def bf_min_ts(rows, ci) -> tuple[int, tuple[int, ...]]:
    width = len(rows[ci])
    for size in range(width + 1):
        for points in itertools.combinations(range(width), size):
            if bf_is_teaching_set(rows, ci, points):
                return size, points
    raise AssertionError("distinct rows are always separable")


def bf_rtd(rows) -> int:
    """RTD straight from the definition: best over orderings via memoized recursion."""
    rows = tuple(tuple(r) for r in rows)

    @lru_cache(maxsize=None)
    def best(members: tuple[tuple[int, ...], ...]) -> int:
        if not members:
            return 0
        out = None
        for i in range(len(members)):
            ts, _ = bf_min_ts(members, i)
            rest = members[:i] + members[i + 1 :]
            v = max(ts, best(rest))
            out = v if out is None else min(out, v)
        return out

    return best(rows)


def bf_min_domset(g: Graph) -> tuple[int, tuple[int, ...]]:
    def dominated(u, T):
        return any(v == u or (min(u, v), max(u, v)) in g.edges for v in T)

    for size in range(g.n + 1):
        for T in itertools.combinations(range(g.n), size):
            if all(dominated(u, T) for u in range(g.n)):
                return size, T
    raise AssertionError("V always dominates")
