"""Semistandard tableau counting and monomial/Schur basis conversion.

The Kostka numbers computed here back the "oracle" route for Schur
coefficients.  They come from direct backtracking over tableau fillings,
with no reference to rim hooks, so the two coefficient routes stay
independent.
"""

from __future__ import annotations

from functools import lru_cache

from .coeffvec import MONOMIAL, SCHUR, CoefficientVector
from .partitions import Partition, check_partition, partitions_of


def kostka_number(shape, weight) -> int:
    """Count SSYT of ``shape`` using entry i exactly ``weight[i-1]`` times.

    Rows weakly increase left to right and columns strictly increase top to
    bottom.  Both arguments must be partitions of the same size.
    """
    shape = check_partition(shape)
    weight = check_partition(weight)
    if sum(shape) != sum(weight):
        raise ValueError("shape and weight must have equal size")
    return _kostka(shape, weight)


def _dominates(lam: Partition, mu: Partition) -> bool:
    # partial sums of lam weakly exceed those of mu (equal total size)
    total_l = total_m = 0
    for j in range(len(mu)):
        total_l += lam[j] if j < len(lam) else 0
        total_m += mu[j]
        if total_l < total_m:
            return False
    return True


@lru_cache(maxsize=None)
def _kostka(shape: Partition, weight: Partition) -> int:
    if not shape:
        return 1
    if not _dominates(shape, weight):
        return 0
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    remaining = list(weight)
    grid = [[0] * width for width in shape]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = grid[r][c - 1] if c else 1
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for entry in range(lo, len(remaining) + 1):
            if not remaining[entry - 1]:
                continue
            remaining[entry - 1] -= 1
            grid[r][c] = entry
            total += fill(idx + 1)
            remaining[entry - 1] += 1
        grid[r][c] = 0
        return total

    return fill(0)


@lru_cache(maxsize=None)
def kostka_matrix(degree: int) -> dict[tuple[Partition, Partition], int]:
    """All nonzero Kostka numbers of one degree, keyed by (shape, weight).

    Built lazily on first basis conversion at that degree and kept for the
    life of the process (conversions dominate the oracle's cost).
    """
    order = partitions_of(degree)
    out = {}
    for lam in order:
        for mu in order:
            k = _kostka(lam, mu)
            if k:
                out[lam, mu] = k
    return out


def monomial_to_schur(vec: CoefficientVector) -> CoefficientVector:
    """Invert the unitriangular Kostka system by back-substitution.

    The diagonal is 1, so the result is produced without division and is
    exact for any integer input.
    """
    if vec.basis != MONOMIAL:
        raise ValueError("expected a monomial-basis vector")
    n = vec.degree()
    if n is None:
        return CoefficientVector(SCHUR, {})
    order = partitions_of(n)
    kostka = kostka_matrix(n)
    w: dict[Partition, int] = {}
    for j, mu in enumerate(order):
        val = vec[mu]
        for lam in order[:j]:
            c = w.get(lam)
            if c:
                val -= c * kostka.get((lam, mu), 0)
        if val:
            w[mu] = val
    return CoefficientVector(SCHUR, w)


def schur_to_monomial(vec: CoefficientVector) -> CoefficientVector:
    """Expand a Schur-basis vector over monomials via the Kostka matrix."""
    if vec.basis != SCHUR:
        raise ValueError("expected a schur-basis vector")
    n = vec.degree()
    if n is None:
        return CoefficientVector(MONOMIAL, {})
    kostka = kostka_matrix(n)
    out: dict[Partition, int] = {}
    for lam, c in vec.coeffs.items():
        for mu in partitions_of(n):
            k = kostka.get((lam, mu), 0)
            if k:
                out[mu] = out.get(mu, 0) + c * k
    return CoefficientVector(MONOMIAL, out)
