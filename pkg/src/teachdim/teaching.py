"""Exact algorithms for teaching sets, TD, TD_min and the recursive teaching dimension.

The workhorse view: a point set S is a teaching set for concept c exactly
when S hits, for every competing concept c', the set of points where c and
c' differ.  All searches therefore precompute per-pair difference masks
(ints, bit i = point i) and look for small hitting sets.

Search order is pinned for reproducibility: candidate sets are enumerated
by size first and lexicographically within one size, so every reported
witness is the lexicographically smallest among the minimum-size ones.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from .errors import CapacityError, InvalidArgumentError
from .model import Concept, ConceptClass, TeachingPlan

DEFAULT_SUBSET_ORACLE_CAP = 15

# Width limit for the subset oracle's precomputed agreement tables; wider
# domains fall back to plain per-subset enumeration.
_ORACLE_TABLE_MAX_WIDTH = 12


@dataclass(frozen=True)
class TsResult:
    """Minimum teaching-set size together with one witness achieving it."""

    size: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class RtdResult:
    """RTD value together with a teaching plan of exactly that width."""

    value: int
    plan: TeachingPlan


def _lex_min_hitting_set(diffs: list[int], budget: int) -> tuple[int, ...] | None:
    """Smallest, then lexicographically least, set of bit positions hitting every mask.

    Returns None when no hitting set of size <= budget exists.  All masks
    must be nonzero (equal rows never reach this point).
    """
    if not diffs:
        return ()
    if budget < 0:
        return None
    union = 0
    for d in diffs:
        union |= d
    # Points outside the union can never help, and no minimum-size hitting
    # set uses them, so restricting the universe preserves the lex order.
    points = [i for i in range(union.bit_length()) if union >> i & 1]
    diffs = sorted(diffs, key=int.bit_count)
    # Pairwise-disjoint masks each need their own point: a cheap lower bound.
    packed = 0
    lb = 0
    for d in diffs:
        if d & packed == 0:
            lb += 1
            packed |= d
    if lb > budget:
        return None
    top = min(budget, len(points))
    for size in range(lb, top + 1):
        for combo in itertools.combinations(points, size):
            m = 0
            for i in combo:
                m |= 1 << i
            if all(d & m for d in diffs):
                return combo
    return None


def _pair_masks(klass: ConceptClass) -> list[int]:
    return [klass.row_mask(i) for i in range(len(klass.concepts))]


def _min_ts(masks: list[int], members: list[int], ci: int, budget: int) -> tuple[int, ...] | None:
    diffs = [masks[j] ^ masks[ci] for j in members if j != ci]
    return _lex_min_hitting_set(diffs, budget)


def min_teaching_set(c: Concept, klass: ConceptClass) -> TsResult:
    """Smallest teaching set of `c` with respect to `klass`.

    Enumerates candidate sets by size then lexicographically, so the witness
    is deterministic.  `c` must be a member of the class.
    """
    ci = klass.member_index(c)
    masks = _pair_masks(klass)
    witness = _min_ts(masks, list(range(len(masks))), ci, klass.width)
    assert witness is not None  # the full domain always separates distinct rows
    return TsResult(len(witness), witness)


def _ts_sizes(klass: ConceptClass) -> list[int]:
    masks = _pair_masks(klass)
    members = list(range(len(masks)))
    out = []
    for ci in members:
        w = _min_ts(masks, members, ci, klass.width)
        assert w is not None
        out.append(len(w))
    return out


def teaching_dim(klass: ConceptClass) -> tuple[int, str]:
    """Maximum TS over the class and the first concept attaining it."""
    if not klass.concepts:
        raise InvalidArgumentError("teaching dimension of an empty class is undefined")
    sizes = _ts_sizes(klass)
    best = max(sizes)
    return best, klass.concepts[sizes.index(best)].label


def td_min(klass: ConceptClass) -> tuple[int, str]:
    """Minimum TS over the class and the first concept attaining it."""
    if not klass.concepts:
        raise InvalidArgumentError("TD_min of an empty class is undefined")
    sizes = _ts_sizes(klass)
    best = min(sizes)
    return best, klass.concepts[sizes.index(best)].label


def rtd_decision(
    klass: ConceptClass, k: int, *, rng: random.Random | None = None
) -> tuple[bool, TeachingPlan | None]:
    """Decide RTD(klass) <= k by repeatedly stripping an easy-to-teach concept.

    Each round scans the remaining concepts in class order and removes the
    first one that has a teaching set of size <= k against the remaining
    class, recording (concept, witness).  Returns (True, plan) if the class
    empties and (False, None) on the first round where nothing qualifies.
    The outcome does not depend on the strip order; `rng`, when given,
    shuffles the scan order of every round so tests can assert exactly that.
    """
    if k < 0:
        raise InvalidArgumentError("k must be non-negative")
    masks = _pair_masks(klass)
    return _strip_decision(klass, masks, k, rng)


def _strip_decision(
    klass: ConceptClass, masks: list[int], k: int, rng: random.Random | None
) -> tuple[bool, TeachingPlan | None]:
    remaining = list(range(len(masks)))
    steps: list[tuple[str, tuple[int, ...]]] = []
    while remaining:
        order = remaining if rng is None else rng.sample(remaining, len(remaining))
        hit = None
        for ci in order:
            witness = _min_ts(masks, remaining, ci, k)
            if witness is not None:
                hit = (ci, witness)
                break
        if hit is None:
            return False, None
        ci, witness = hit
        steps.append((klass.concepts[ci].label, witness))
        remaining.remove(ci)
    return True, TeachingPlan(tuple(steps))


def rtd(klass: ConceptClass) -> RtdResult:
    """Exact RTD: the smallest k accepted by the decision procedure.

    Probes k = 0, 1, ... and never beyond ceil(log2 |C|).  That budget
    always admits a plan: following the minority value of any splitting
    point isolates some concept after at most that many points.
    """
    m = len(klass.concepts)
    if m == 0:
        return RtdResult(0, TeachingPlan(()))
    masks = _pair_masks(klass)
    cap = (m - 1).bit_length()  # == ceil(log2(m)) for m >= 1
    for k in range(cap + 1):
        ok, plan = _strip_decision(klass, masks, k, None)
        if ok:
            assert plan is not None
            return RtdResult(k, plan)
    raise AssertionError("unreachable: RTD exceeded its ceil(log2 |C|) bound")


def rtd_oracle_subsets(klass: ConceptClass, *, cap: int = DEFAULT_SUBSET_ORACLE_CAP) -> int:
    """RTD via full subset enumeration: max over subclasses of their TD_min.

    Deliberately independent of the stripping procedure so the two can be
    checked against each other.  The 2^|C| enumeration is refused above
    `cap` concepts.
    """
    m = len(klass.concepts)
    if m > cap:
        raise CapacityError(
            f"subset oracle over {m} concepts exceeds the cap of {cap} "
            f"(2^{m} subclasses); raise the cap explicitly to force it"
        )
    if m == 0:
        return 0
    if klass.width <= _ORACLE_TABLE_MAX_WIDTH:
        return _oracle_with_tables(klass)
    return _oracle_plain(klass)


def _oracle_with_tables(klass: ConceptClass) -> int:
    """Subset oracle backed by per-concept agreement tables.

    agree[c][S] holds the bitmask of concepts whose rows coincide with
    concept c on the point set S; S teaches c within subclass M exactly when
    agree[c][S] & M keeps only c itself.
    """
    m = len(klass.concepts)
    width = klass.width
    full = (1 << m) - 1
    rows = [c.values for c in klass.concepts]
    n_sets = 1 << width
    by_size = sorted(range(n_sets), key=int.bit_count)
    sizes = [s.bit_count() for s in by_size]
    agree: list[list[int]] = []
    for c in range(m):
        single = []
        for x in range(width):
            mask = 0
            for o in range(m):
                if rows[o][x] == rows[c][x]:
                    mask |= 1 << o
            single.append(mask)
        table = [0] * n_sets
        table[0] = full
        for s in range(1, n_sets):
            low = s & -s
            table[s] = table[s ^ low] & single[low.bit_length() - 1]
        agree.append(table)
    best = 0
    for sub in range(1, 1 << m):
        sub_min = None
        c_bits = sub
        while c_bits:
            c = (c_bits & -c_bits).bit_length() - 1
            c_bits &= c_bits - 1
            own = 1 << c
            tab = agree[c]
            for pos, s in enumerate(by_size):
                if sub_min is not None and sizes[pos] >= sub_min:
                    break
                if tab[s] & sub == own:
                    sub_min = sizes[pos]
                    break
            if sub_min == 0:
                break
        assert sub_min is not None  # S = X always works within distinct rows
        best = max(best, sub_min)
    return best


def _oracle_plain(klass: ConceptClass) -> int:
    """Fallback subset oracle: literal definition, no precomputed tables."""
    rows = [c.values for c in klass.concepts]
    m = len(rows)
    width = klass.width

    def td_min_of(members: tuple[int, ...]) -> int:
        for size in range(width + 1):
            for c in members:
                for S in itertools.combinations(range(width), size):
                    if all(
                        any(rows[o][x] != rows[c][x] for x in S)
                        for o in members
                        if o != c
                    ):
                        return size
        raise AssertionError("distinct rows are separable by the full domain")

    best = 0
    for r in range(1, m + 1):
        for members in itertools.combinations(range(m), r):
            best = max(best, td_min_of(members))
    return best
