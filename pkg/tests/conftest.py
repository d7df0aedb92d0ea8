from __future__ import annotations

import functools

import pytest

from tomseq.enumeration import class_table, family_group
from tomseq.marks import marks_table


@functools.lru_cache(maxsize=None)
def table(family: str, n: int):
    return class_table(family_group(family, n))


@functools.lru_cache(maxsize=None)
def marks(family: str, n: int):
    return marks_table(table(family, n), f"{family}{n}")


@pytest.fixture(scope="session")
def tables():
    return table


@pytest.fixture(scope="session")
def tom():
    return marks
