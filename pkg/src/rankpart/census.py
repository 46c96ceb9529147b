"""Full enumeration census for one modulus: counts, dedup groups, classes.

The census enumerates every five-column head, groups heads by union key,
extends one representative per group to the horizon, and classifies the
extensions.  Some representatives for m >= 7 hit a forced collision while
extending; they are reported as non-extendable and left out of the
classification.

Because nothing says whether the class tally should count the class of the
standard partition's own head group, both protocols are available:
"exclude-standard" drops the standard group before classifying (for m=5 this
leaves the familiar 20 representatives), "include-standard" keeps it.  The
two tallies agree for every modulus tried so far, since some non-standard
representative is always equivalent to the standard partition and absorbs it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_HORIZON, DEFAULT_NODE_BUDGET, ModulusConfig
from .enumeration import (
    DedupGroup,
    Head,
    count_statements,
    dedup_heads,
    enumerate_heads_general,
    fifth_column_candidates,
    partition_numbering,
    sum_decompositions,
)
from .equivalence import classify, equivalent_up_to
from .errors import CollisionError, NegativeError
from .greedy import greedy_extend
from .partition import Partition, standard_partition, sum_schedule

PROTOCOLS = ("exclude-standard", "include-standard")


@dataclass(frozen=True)
class CensusReport:
    m: int
    horizon: int
    protocol: str
    heads: int
    statements: int
    dedup_groups: int
    group_members: tuple[tuple[int, ...], ...]
    representatives: int
    non_extendable: tuple[int, ...]
    classes: int
    class_members: tuple[tuple[int, ...], ...]
    standard_equivalent: tuple[int, ...]
    decompositions: tuple[int, int, int] | None
    partition_numbers: tuple[tuple[int, int], ...] | None

    def to_dict(self) -> dict:
        """JSON-friendly view with deterministic key order left to the encoder."""
        out = {
            "m": self.m,
            "horizon": self.horizon,
            "protocol": self.protocol,
            "heads": self.heads,
            "statements": self.statements,
            "dedup_groups": self.dedup_groups,
            "group_members": [list(g) for g in self.group_members],
            "dedup": self.representatives,
            "non_extendable": list(self.non_extendable),
            "classes": self.classes,
            "class_members": [list(c) for c in self.class_members],
            "standard_equivalent": list(self.standard_equivalent),
        }
        if self.decompositions is not None:
            r3, r4, r5 = self.decompositions
            out["decompositions"] = {"rank3": r3, "rank4": r4, "rank5": r5}
        if self.partition_numbers is not None:
            out["partition_numbers"] = {str(h): n for h, n in self.partition_numbers}
        return out


@dataclass(frozen=True)
class _SharedState:
    cfg: ModulusConfig
    horizon: int
    heads: list[Head]
    groups: list[DedupGroup]
    extensions: dict[int, Partition | None]
    standard_equivalent: tuple[int, ...]


def _decomposition_counts(cfg: ModulusConfig) -> tuple[int, int, int]:
    # m=5 only: choices for columns 3 and 4, plus the rowwise rank-5 pool
    first_two = set(range(6))
    col3_choices = sum_decompositions(sum_schedule(cfg, 3), 3, 0, first_two)
    col4_sets = {
        d
        for c3 in col3_choices
        for d in sum_decompositions(sum_schedule(cfg, 4), 3, 0, first_two | set(c3))
    }
    return len(col3_choices), len(col4_sets), len(fifth_column_candidates(cfg))


def _build_state(cfg: ModulusConfig, horizon: int, node_budget: int) -> _SharedState:
    heads = enumerate_heads_general(cfg, column_count=5, node_budget=node_budget)
    groups = dedup_heads(heads)
    extensions: dict[int, Partition | None] = {}
    for group in groups:
        rep = group.representative
        try:
            extensions[rep.choice_id] = greedy_extend(cfg, rep.columns, horizon)
        except (CollisionError, NegativeError):
            extensions[rep.choice_id] = None
    std = standard_partition(cfg, horizon)
    std_equivalent: list[int] = []
    for group in groups:
        ext = extensions[group.representative.choice_id]
        if ext is not None and equivalent_up_to(ext, std, horizon) is not None:
            std_equivalent.extend(group.member_ids)
    return _SharedState(cfg, horizon, heads, groups, extensions, tuple(sorted(std_equivalent)))


def _project(state: _SharedState, protocol: str) -> CensusReport:
    if protocol not in PROTOCOLS:
        raise ValueError(f"unknown protocol {protocol!r}, expected one of {PROTOCOLS}")
    selected = [
        g for g in state.groups if protocol == "include-standard" or not g.is_standard
    ]
    alive: list[tuple[int, Partition]] = []
    dead: list[int] = []
    for group in selected:
        rep_id = group.representative.choice_id
        ext = state.extensions[rep_id]
        if ext is None:
            dead.append(rep_id)
        else:
            alive.append((rep_id, ext))
    class_indices = classify([ext for _, ext in alive], state.horizon)
    class_members = tuple(
        tuple(alive[i][0] for i in members) for members in class_indices
    )
    m5 = state.cfg.m == 5
    return CensusReport(
        m=state.cfg.m,
        horizon=state.horizon,
        protocol=protocol,
        heads=len(state.heads),
        statements=count_statements(state.heads),
        dedup_groups=len(state.groups),
        group_members=tuple(g.member_ids for g in state.groups),
        representatives=len(selected),
        non_extendable=tuple(dead),
        classes=len(class_indices),
        class_members=class_members,
        standard_equivalent=state.standard_equivalent,
        decompositions=_decomposition_counts(state.cfg) if m5 else None,
        partition_numbers=tuple(sorted(partition_numbering(state.groups).items())) if m5 else None,
    )


def run_census(
    m: int,
    horizon: int = DEFAULT_HORIZON,
    protocol: str = "exclude-standard",
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CensusReport:
    """Census for one modulus under one dedup protocol."""
    state = _build_state(ModulusConfig(m), horizon, node_budget)
    return _project(state, protocol)


def run_census_both(
    m: int,
    horizon: int = DEFAULT_HORIZON,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[CensusReport, CensusReport]:
    """Census under both protocols, sharing the enumeration and extensions."""
    state = _build_state(ModulusConfig(m), horizon, node_budget)
    return _project(state, "exclude-standard"), _project(state, "include-standard")
