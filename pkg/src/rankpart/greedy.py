"""Column-extension algorithm: smallest unused integers plus a forced last entry.

Given a sum-conforming prefix, rank n is filled by placing the t smallest
integers not yet used anywhere into sets 1..t in increasing order and solving
for the last set's entry from the schedule: last = S(n) - (sum of the t
picks).  The step either succeeds or fails loudly; there is no repair logic.
A forced entry that is negative or already in use means the prefix simply
does not extend at that rank.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

from .config import ModulusConfig
from .errors import CollisionError, InvariantError, NegativeError
from .partition import Column, Partition, sum_schedule


class PartitionBuilder:
    """Mutable extension state; single-owner, mutated linearly.

    Tracks the used-element set and a low-water cursor below which every
    integer is known to be used, so each step scans only a short window.
    """

    def __init__(self, cfg: ModulusConfig, columns: Iterable[Sequence[int]] = ()):
        self.cfg = cfg
        self.columns: list[Column] = [tuple(col) for col in columns]
        self._used: set[int] = set()
        for idx, col in enumerate(self.columns, start=1):
            if len(col) != cfg.set_count:
                raise InvariantError(f"column {idx} has {len(col)} entries, expected {cfg.set_count}")
            want = sum_schedule(cfg, idx)
            if sum(col) != want:
                raise InvariantError(f"column {idx} sums to {sum(col)}, schedule wants {want}")
            for x in col:
                if x < 0:
                    raise InvariantError(f"column {idx} holds negative element {x}")
                if x in self._used:
                    raise InvariantError(f"element {x} appears more than once (column {idx})")
                self._used.add(x)
        self._cursor = 0
        self._advance_cursor()

    def _advance_cursor(self) -> None:
        while self._cursor in self._used:
            self._cursor += 1

    @property
    def next_rank(self) -> int:
        return len(self.columns) + 1

    def extend_one(self) -> Column:
        """Fill the next rank; returns the new column."""
        t = self.cfg.t
        picks: list[int] = []
        v = self._cursor
        while len(picks) < t:
            if v not in self._used:
                picks.append(v)
            v += 1
        rank = self.next_rank
        last = sum_schedule(self.cfg, rank) - sum(picks)
        if last < 0:
            raise NegativeError(rank, last)
        if last in self._used or last in picks:
            raise CollisionError(rank, last)
        col = (*picks, last)
        self.columns.append(col)
        self._used.update(col)
        self._advance_cursor()
        return col

    def extend_to(self, horizon: int) -> None:
        while len(self.columns) < horizon:
            self.extend_one()

    def to_partition(self) -> Partition:
        return Partition(self.cfg, tuple(self.columns))


def greedy_extend(cfg: ModulusConfig, columns: Iterable[Sequence[int]], horizon: int) -> Partition:
    """Extend a sum-conforming prefix to the given horizon.

    Parameters
    ----------
    cfg : ModulusConfig
        Modulus parameter.
    columns : iterable of columns
        The prefix; each column must sum to the schedule and all elements
        must be pairwise distinct.  May be empty, in which case the whole
        partition is generated greedily from rank 1.
    horizon : int
        Total number of columns in the result.

    Raises
    ------
    CollisionError, NegativeError
        When some rank admits no valid forced entry; the failing rank is
        attached to the exception.
    InvariantError
        When the prefix itself is malformed.
    """
    builder = PartitionBuilder(cfg, columns)
    builder.extend_to(horizon)
    return builder.to_partition()


def complete_head(
    cfg: ModulusConfig, columns: Iterable[Sequence[int | None]]
) -> tuple[Column, ...]:
    """Fill the single missing entry of a prefix so its column meets the schedule.

    Exactly one entry of one column must be None.  Returns the completed
    columns; raises CollisionError if the forced value is already present,
    NegativeError if it is negative.
    """
    cols = [list(col) for col in columns]
    blanks = [
        (ci, ei) for ci, col in enumerate(cols) for ei, x in enumerate(col) if x is None
    ]
    if len(blanks) != 1:
        raise InvariantError(f"expected exactly one missing entry, found {len(blanks)}")
    ci, ei = blanks[0]
    rank = ci + 1
    known = [x for x in cols[ci] if x is not None]
    value = sum_schedule(cfg, rank) - sum(known)
    if value < 0:
        raise NegativeError(rank, value)
    present = {x for col in cols for x in col if x is not None}
    if value in present:
        raise CollisionError(rank, value)
    cols[ci][ei] = value
    return tuple(tuple(col) for col in cols)
