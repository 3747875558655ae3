"""Integer partitions and compositions.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  Compositions are tuples of positive
integers in any order.  Everything here is exact and hashable so results
can be cached freely.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

Partition = tuple[int, ...]
Composition = tuple[int, ...]


class _UndefinedType:
    """Singleton marker for not-properly-defined partitions and graphs.

    Recurrence terms built from it must contribute zero instead of raising,
    so it is an in-band value rather than an exception.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Undefined"


UNDEFINED = _UndefinedType()


def check_composition(parts: Iterable[int]) -> Composition:
    kappa = tuple(int(p) for p in parts)
    if any(p < 1 for p in kappa):
        raise ValueError(f"composition parts must be positive: {kappa}")
    return kappa


def check_partition(parts: Iterable[int]) -> Partition:
    lam = check_composition(parts)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def sort_to_partition(kappa: Iterable[int]) -> Partition:
    """Rearrange a composition into a weakly decreasing partition."""
    return tuple(sorted(check_composition(kappa), reverse=True))


def strip_trailing_ones(lam: Iterable[int], t: int):
    """Drop ``t`` trailing parts equal to 1, or UNDEFINED if there are fewer."""
    lam = check_partition(lam)
    if t < 0:
        raise ValueError("number of parts to strip must be nonnegative")
    ones = 0
    for p in reversed(lam):
        if p != 1:
            break
        ones += 1
    if t > ones:
        return UNDEFINED
    return lam[: len(lam) - t] if t else lam


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, largest part first (reverse lexicographic).

    This fixed order indexes the Kostka system and all report output.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    mx = n if max_part is None else min(max_part, n)
    out = []
    for first in range(mx, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)
