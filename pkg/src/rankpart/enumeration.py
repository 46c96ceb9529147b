"""Exhaustive generation of statement heads: the first C columns of a candidate partition.

A head fixes, for each rank c <= C (C = 5 throughout), an unordered set of
t+1 distinct non-negative integers summing to S(c), with the C sets pairwise
disjoint.  Ordered variants (which set gets which entry) multiply each head
by ((t+1)!)^C, but only the unordered content matters downstream: the greedy
extension depends on the used-element pool alone, so heads with equal element
unions share their entire tail.  That union is therefore the deduplication
key.

For m=5 the search is tiny: columns 1 and 2 are forced to {0,1,2} and
{3,4,5}, column 3 has two choices, column 4 six, and 36 heads survive in
total.  Heads are numbered 1..36 in lexicographic order of their columns,
which lays them out as six groups of six sharing (column 3, column 4).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_NODE_BUDGET, ModulusConfig
from .errors import InvariantError, ResourceError
from .partition import standard_column, sum_schedule


@dataclass(frozen=True)
class Head:
    """First C columns of a candidate statement, each stored sorted ascending."""

    cfg: ModulusConfig
    columns: tuple[tuple[int, ...], ...]
    choice_id: int | None = None

    @property
    def union_key(self) -> tuple[int, ...]:
        """Sorted union of all head elements; equal keys mean equal greedy tails."""
        return tuple(sorted(x for col in self.columns for x in col))

    def validate(self) -> None:
        width = self.cfg.set_count
        seen: set[int] = set()
        for idx, col in enumerate(self.columns, start=1):
            if len(col) != width:
                raise InvariantError(f"column {idx} has {len(col)} entries, expected {width}")
            want = sum_schedule(self.cfg, idx)
            if sum(col) != want:
                raise InvariantError(f"column {idx} sums to {sum(col)}, schedule wants {want}")
            for x in col:
                if x < 0:
                    raise InvariantError(f"column {idx} holds negative element {x}")
                if x in seen:
                    raise InvariantError(f"element {x} appears more than once (column {idx})")
                seen.add(x)


class _Budget:
    """Search-node counter; raises once the configured cap is exceeded."""

    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise ResourceError(f"enumeration exceeded node budget of {self.limit}")


def _decompose(
    total: int,
    size: int,
    min_value: int,
    excluded: frozenset[int],
    budget: _Budget | None,
) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(lo: int, rem: int, k: int) -> None:
        if budget is not None:
            budget.spend()
        if k == 0:
            if rem == 0:
                out.append(tuple(prefix))
            return
        v = lo
        # v + (v+1) + ... + (v+k-1) is the least the remaining k slots can sum to
        while v * k + k * (k - 1) // 2 <= rem:
            if v not in excluded:
                prefix.append(v)
                rec(v + 1, rem - v, k - 1)
                prefix.pop()
            v += 1

    rec(min_value, total, size)
    return out


def sum_decompositions(
    total: int,
    size: int,
    min_value: int = 0,
    excluded: frozenset[int] | set[int] = frozenset(),
) -> list[tuple[int, ...]]:
    """All ways to write total as `size` distinct integers >= min_value.

    Parameters
    ----------
    total, size, min_value : int
        Target sum, number of parts, and lower bound for every part.
    excluded : set of int
        Values that must not appear as parts.

    Returns
    -------
    list of strictly increasing tuples, sorted lexicographically; empty when
    no decomposition exists.
    """
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    return _decompose(total, size, min_value, frozenset(excluded), None)


def fifth_column_candidates(cfg: ModulusConfig) -> list[tuple[int, ...]]:
    """Candidate fifth columns for m=5 heads under the rowwise screen.

    Of the 30 ways to write S(5) = 43 as three distinct parts >= 8, keep the
    25 whose spread (largest minus smallest part) is at most 14.  That is the
    coarse screen obtained when candidates are tabulated row by row against
    the third column alone; assembling full heads is stricter and realizes
    only 23 of the 25.  The census reports both numbers.
    """
    if cfg.m != 5:
        raise ValueError("fifth-column candidate table is specific to m=5")
    pool = sum_decompositions(sum_schedule(cfg, 5), 3, 8)
    return [d for d in pool if d[-1] - d[0] <= 14]


def enumerate_heads_general(
    cfg: ModulusConfig,
    column_count: int = 5,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Head]:
    """Every head of `column_count` pairwise-disjoint sum-conforming columns.

    The search walks columns left to right, enumerating the decompositions of
    S(c) that avoid all elements already placed.  No per-column lower bounds
    are hard-coded; they emerge from the exclusions and the sum pruning.
    Results come out in lexicographic column order and are numbered from 1.

    Raises ResourceError when the search visits more nodes than node_budget.
    """
    if column_count < 1:
        raise ValueError(f"column count must be >= 1, got {column_count}")
    budget = _Budget(node_budget)
    heads: list[Head] = []
    cols: list[tuple[int, ...]] = []
    used: set[int] = set()

    def rec(c: int) -> None:
        if c > column_count:
            heads.append(Head(cfg, tuple(cols), choice_id=len(heads) + 1))
            return
        for d in _decompose(sum_schedule(cfg, c), cfg.set_count, 0, frozenset(used), budget):
            cols.append(d)
            used.update(d)
            rec(c + 1)
            used.difference_update(d)
            cols.pop()

    rec(1)
    return heads


def enumerate_heads(cfg: ModulusConfig) -> list[Head]:
    """The 36 five-column heads for m=5, numbered 1..36 in table order."""
    if cfg.m != 5:
        raise ValueError("the fixed head table is specific to m=5; use enumerate_heads_general")
    return enumerate_heads_general(cfg, column_count=5)


def count_statements(heads: list[Head]) -> int:
    """Number of ordered variants across all heads: |heads| * ((t+1)!)^C."""
    if not heads:
        return 0
    head = heads[0]
    return len(heads) * math.factorial(head.cfg.set_count) ** len(head.columns)


@dataclass(frozen=True)
class DedupGroup:
    """Heads sharing one union key; the lowest-numbered member represents all."""

    representative: Head
    member_ids: tuple[int, ...]
    is_standard: bool


def dedup_heads(heads: list[Head]) -> list[DedupGroup]:
    """Group heads by union key and mark the group containing the standard head.

    Heads with equal keys feed the greedy extension the same used-element
    pool, hence produce identical tails; the representative is the
    lowest-numbered head of each group.  Groups are ordered by representative
    number.
    """
    groups: dict[tuple[int, ...], list[Head]] = {}
    for pos, head in enumerate(heads, start=1):
        if head.choice_id is None:
            head = Head(head.cfg, head.columns, choice_id=pos)
        groups.setdefault(head.union_key, []).append(head)
    if not heads:
        return []
    cfg = heads[0].cfg
    column_count = len(heads[0].columns)
    std_key = tuple(
        sorted(x for n in range(1, column_count + 1) for x in standard_column(cfg, n))
    )
    out = []
    for key, members in groups.items():
        members.sort(key=lambda h: h.choice_id)
        out.append(
            DedupGroup(
                representative=members[0],
                member_ids=tuple(h.choice_id for h in members),
                is_standard=key == std_key,
            )
        )
    out.sort(key=lambda g: g.representative.choice_id)
    return out


def partition_numbering(groups: list[DedupGroup]) -> dict[int, int]:
    """Map non-standard representative head ids to partition numbers 1..N.

    Numbering follows ascending head id, which reproduces the published
    m=5 table order (head 8 becomes partition 7, head 17 partition 13).
    """
    reps = sorted(g.representative.choice_id for g in groups if not g.is_standard)
    return {head_id: number for number, head_id in enumerate(reps, start=1)}
