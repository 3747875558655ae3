"""Schur coefficients of chromatic symmetric functions, by three routes.

``tabloid``  sums tabloid signs directly, with memoization on
             (subdiagram, remaining-vertex-set) states;
``grouped``  pairs plain tabloids with semi-ordered stable partition counts;
``oracle``   expands over stable partitions in the monomial basis and
             inverts the Kostka system.

All three must agree on every input; the test suite enforces this.
"""

from __future__ import annotations

from .coeffvec import MONOMIAL, SCHUR, CoefficientVector
from .graphs import (
    PENDANT_LAST,
    LabeledGraph,
    count_semi_ordered_stable_partitions,
    generalized_net,
    max_clique,
)
from .partitions import UNDEFINED, check_partition, partitions_of, sort_to_partition
from .tableaux import monomial_to_schur
from .tabloids import bottom_hook_choices, srh_tabloids

TABLOID = "tabloid"
GROUPED = "grouped"
ORACLE = "oracle"
METHODS = (TABLOID, GROUPED, ORACLE)

# write-once caches; entries are published atomically under the GIL
_counters: dict = {}
_coeff_cache: dict = {}
_so_cache: dict = {}
_oracle_cache: dict = {}


def clear_caches() -> None:
    _counters.clear()
    _coeff_cache.clear()
    _so_cache.clear()
    _oracle_cache.clear()


class _TabloidCounter:
    """Signed count of SRH G-tabloids over one graph.

    Implements the direct sign sum: every tabloid contributes its sign, but
    states reached through different hook prefixes are shared via a memo on
    (subdiagram, remaining-vertex bitmask), and whole subtrees are cut when
    more clique vertices remain than first-column cells (a hook is a stable
    set, so it holds at most one vertex of any clique).
    """

    def __init__(self, graph: LabeledGraph):
        self.n = graph.n
        self.adj_masks = [0] * (graph.n + 1)
        for v in graph.vertices:
            m = 0
            for u in graph.neighbors(v):
                m |= 1 << (u - 1)
            self.adj_masks[v] = m
        cm = 0
        for v in max_clique(graph):
            cm |= 1 << (v - 1)
        self.clique_mask = cm
        self.memo: dict = {}

    def signed_sum(self, shape) -> int:
        return self._count(shape, (1 << self.n) - 1)

    def _count(self, shape, rem: int) -> int:
        if not shape:
            return 1
        key = (shape, rem)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        total = 0
        if (self.clique_mask & rem).bit_count() <= len(shape):
            for cells, nsteps, reduced in bottom_hook_choices(shape):
                sub = 0
                for group in self._stable_masks(rem, len(cells)):
                    sub += self._count(reduced, rem ^ group)
                total += -sub if nsteps & 1 else sub
        self.memo[key] = total
        return total

    def _stable_masks(self, avail: int, size: int):
        # stable subsets of the available set with exactly `size` bits
        if size == 0:
            yield 0
            return
        if avail.bit_count() < size:
            return
        v_bit = avail & -avail
        v = v_bit.bit_length()
        rest = avail ^ v_bit
        for tail in self._stable_masks(rest & ~self.adj_masks[v], size - 1):
            yield v_bit | tail
        yield from self._stable_masks(rest, size)


def _counter_for(graph: LabeledGraph) -> _TabloidCounter:
    key = graph.key()
    ctr = _counters.get(key)
    if ctr is None:
        ctr = _TabloidCounter(graph)
        _counters[key] = ctr
    return ctr


def _so_count(graph: LabeledGraph, mu) -> int:
    key = (graph.key(), mu)
    val = _so_cache.get(key)
    if val is None:
        val = count_semi_ordered_stable_partitions(graph, mu)
        _so_cache[key] = val
    return val


def chromatic_monomial_expansion(graph: LabeledGraph) -> CoefficientVector:
    """Monomial expansion of the chromatic symmetric function.

    The m_mu coefficient equals the semi-ordered stable partition count of
    type mu: each unordered stable partition contributes the full product of
    size-multiplicity factorials, which is the augmented-monomial expansion.
    """
    coeffs = {}
    for mu in partitions_of(graph.n):
        c = _so_count(graph, mu)
        if c:
            coeffs[mu] = c
    return CoefficientVector(MONOMIAL, coeffs)


def _oracle_expansion(graph: LabeledGraph) -> CoefficientVector:
    key = graph.key()
    vec = _oracle_cache.get(key)
    if vec is None:
        vec = monomial_to_schur(chromatic_monomial_expansion(graph))
        _oracle_cache[key] = vec
    return vec


def schur_coefficient(graph: LabeledGraph, lam, method: str = TABLOID) -> int:
    """The coefficient of the Schur function at ``lam`` in the chromatic
    symmetric function of ``graph``."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    lam = check_partition(lam)
    if sum(lam) != graph.n:
        raise ValueError("partition size must equal the vertex count")
    key = (graph.key(), lam, method)
    cached = _coeff_cache.get(key)
    if cached is not None:
        return cached
    if method == TABLOID:
        val = _counter_for(graph).signed_sum(lam)
    elif method == GROUPED:
        val = 0
        for t in srh_tabloids(lam):
            val += t.sign * _so_count(graph, sort_to_partition(t.content))
    else:
        val = _oracle_expansion(graph)[lam]
    _coeff_cache[key] = val
    return val


def schur_expansion(graph: LabeledGraph, method: str = TABLOID) -> CoefficientVector:
    """Full Schur expansion over all partitions of the vertex count."""
    if method == ORACLE:
        return _oracle_expansion(graph)
    coeffs = {}
    for lam in partitions_of(graph.n):
        c = schur_coefficient(graph, lam, method)
        if c:
            coeffs[lam] = c
    return CoefficientVector(SCHUR, coeffs)


def xi(lam, graph) -> int:
    """Schur coefficient extended by zero to malformed (partition, graph)
    pairs, so recurrence terms built from stripped partitions and shrunken
    graphs vanish instead of raising."""
    if lam is UNDEFINED or graph is UNDEFINED:
        return 0
    lam = check_partition(lam)
    if sum(lam) != graph.n:
        return 0
    return schur_coefficient(graph, lam, TABLOID)


def f_coefficient(c: int, d: int) -> int:
    """Schur coefficient at shape (2^c, 1^d) of the net with c+d body
    vertices and c pendants; zero for negative arguments.

    Always computed by the tabloid route on a pendant-last labeling.  The
    c = d = 0 case is the empty diagram on the empty graph, whose single
    empty tabloid gives 1.
    """
    if c < 0 or d < 0:
        return 0
    net = generalized_net(c + d, c, PENDANT_LAST)
    return xi((2,) * c + (1,) * d, net)


def is_schur_positive(graph: LabeledGraph):
    """Whether every Schur coefficient is nonnegative.

    On failure also returns the witness partition carrying a negative
    coefficient, taking the least such in the canonical partition order.
    """
    expansion = schur_expansion(graph, TABLOID)
    witness = None
    for lam in reversed(partitions_of(graph.n)):
        if expansion[lam] < 0:
            witness = lam
            break
    return witness is None, witness
