"""Shared fixtures: the m=5 head catalogue and its greedy extensions.

Everything here is deterministic and cheap enough to build once per
session; the expensive deep extensions (horizon 4096) are shared across
test modules so the suite stays fast.
"""
from __future__ import annotations

import pytest

import rankpart as rp

DEEP = 4096


@pytest.fixture(scope="session")
def m5() -> rp.ModulusConfig:
    return rp.ModulusConfig(5)


@pytest.fixture(scope="session")
def m7() -> rp.ModulusConfig:
    return rp.ModulusConfig(7)


@pytest.fixture(scope="session")
def heads36(m5) -> list[rp.Head]:
    return rp.enumerate_heads(m5)


@pytest.fixture(scope="session")
def groups36(heads36) -> list[rp.DedupGroup]:
    return rp.dedup_heads(heads36)


@pytest.fixture(scope="session")
def rep_ids(groups36) -> list[int]:
    return [g.representative.choice_id for g in groups36 if not g.is_standard]


@pytest.fixture(scope="session")
def numbering(groups36) -> dict[int, int]:
    return rp.partition_numbering(groups36)


@pytest.fixture(scope="session")
def std_deep(m5) -> rp.Partition:
    return rp.standard_partition(m5, DEEP)


@pytest.fixture(scope="session")
def ext_deep(m5, heads36) -> dict[int, rp.Partition]:
    # every m=5 head extends without collision, so no guard needed
    return {h.choice_id: rp.greedy_extend(m5, h.columns, DEEP) for h in heads36}
