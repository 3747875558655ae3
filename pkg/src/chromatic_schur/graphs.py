"""Labeled graphs for the verifier.

Covers the complete-graph families with appended pendants and paths, role
bookkeeping, claw detection, and exact stable-partition counting.  Graphs
are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from math import factorial

from .partitions import UNDEFINED, check_partition

PENDANT = "pendant"
ANCHOR = "anchor"
BUOY = "buoy"
SPECIAL_PENDANT = "special_pendant"
SPECIAL_ANCHOR = "special_anchor"
LEG = "leg"
ISOLATED = "isolated"

ROLE_TAGS = frozenset({PENDANT, ANCHOR, BUOY, SPECIAL_PENDANT, SPECIAL_ANCHOR, LEG, ISOLATED})
BODY_ROLES = frozenset({ANCHOR, BUOY, SPECIAL_ANCHOR})
PENDANT_ROLES = frozenset({PENDANT, SPECIAL_PENDANT})

PENDANT_FIRST = "pendant_first"
PENDANT_LAST = "pendant_last"
NET_LABELINGS = (PENDANT_FIRST, PENDANT_LAST)


class LabeledGraph:
    """Immutable undirected graph on vertices labeled 1..n, no self-loops."""

    __slots__ = ("n", "edges", "roles", "_adj")

    def __init__(self, n: int, edges=(), roles=None):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        adj = [set() for _ in range(n + 1)]
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            normalized.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)
        self.edges = frozenset(normalized)
        if roles is not None:
            roles = {int(v): str(tag) for v, tag in dict(roles).items()}
            for v, tag in roles.items():
                if not 1 <= v <= n:
                    raise ValueError(f"role for unknown vertex {v}")
                if tag not in ROLE_TAGS:
                    raise ValueError(f"unknown role tag {tag!r}")
        self.roles = roles
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge_count(self) -> int:
        return len(self.edges)

    def key(self):
        """Cache key: vertex count plus the sorted edge list under the given labels."""
        return (self.n, tuple(sorted(self.edges)))

    def role_of(self, v: int) -> str | None:
        return self.roles.get(v) if self.roles else None

    def labels_with_role(self, *tags: str) -> tuple[int, ...]:
        if not self.roles:
            return ()
        return tuple(sorted(v for v, tag in self.roles.items() if tag in tags))

    def body_vertices(self) -> tuple[int, ...]:
        return self.labels_with_role(*BODY_ROLES)

    def relabel(self, perm: dict[int, int]) -> "LabeledGraph":
        """Apply a permutation of the labels 1..n."""
        if sorted(perm) != list(self.vertices) or sorted(perm.values()) != list(self.vertices):
            raise ValueError("perm must be a permutation of the vertex labels")
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        roles = {perm[v]: tag for v, tag in self.roles.items()} if self.roles else None
        return LabeledGraph(self.n, edges, roles)

    def to_json_dict(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}
        if self.roles:
            out["roles"] = {str(v): self.roles[v] for v in sorted(self.roles)}
        return out

    @classmethod
    def from_json_dict(cls, payload: dict) -> "LabeledGraph":
        roles = payload.get("roles")
        if roles is not None:
            roles = {int(v): tag for v, tag in roles.items()}
        return cls(payload["n"], [tuple(e) for e in payload["edges"]], roles)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.roles == other.roles

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={sorted(self.edges)})"


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, itertools.combinations(range(1, n + 1), 2))


def path_graph(k: int) -> LabeledGraph:
    return LabeledGraph(k, [(i, i + 1) for i in range(1, k)])


def star_graph(leaf_count: int) -> LabeledGraph:
    """K_{1,m} with leaves 1..m and the center labeled last."""
    center = leaf_count + 1
    return LabeledGraph(center, [(leaf, center) for leaf in range(1, center)])


def generalized_net(n: int, m: int, labeling: str = PENDANT_FIRST):
    """Complete graph on ``n`` body vertices with ``m`` degree-one pendants
    attached to distinct body vertices; UNDEFINED when m exceeds n.

    pendant_first: pendants 1..m, anchors m+1..2m (anchor m+i holds pendant i),
    buoys 2m+1..n+m.  pendant_last: buoys 1..n-m, anchors n-m+1..n (anchor i
    holds pendant i+m), pendants n+1..n+m.  The n = m = 0 case is the empty
    graph, which the recurrences shrink down to.
    """
    if labeling not in NET_LABELINGS:
        raise ValueError(f"unknown net labeling {labeling!r}")
    n, m = int(n), int(m)
    if n < 0 or m < 0 or m > n:
        return UNDEFINED
    if labeling == PENDANT_FIRST:
        pendants = range(1, m + 1)
        anchors = range(m + 1, 2 * m + 1)
        buoys = range(2 * m + 1, n + m + 1)
        body = range(m + 1, n + m + 1)
    else:
        buoys = range(1, n - m + 1)
        anchors = range(n - m + 1, n + 1)
        pendants = range(n + 1, n + m + 1)
        body = range(1, n + 1)
    edges = list(itertools.combinations(body, 2))
    edges += [(p, a) for p, a in zip(pendants, anchors)]
    roles = {v: PENDANT for v in pendants}
    roles.update((v, ANCHOR) for v in anchors)
    roles.update((v, BUOY) for v in buoys)
    return LabeledGraph(n + m, edges, roles)


def generalized_spider(n: int, legs):
    """Complete graph on ``n`` body vertices with disjoint paths of the given
    lengths attached to distinct body vertices; UNDEFINED when there are more
    legs than body vertices.

    Labels run pendant-first: leg vertices first (each leg labeled from its
    far end inward, longest leg first, so the far end of a lone length-2 leg
    gets the minimum label), then the anchors in leg order, then the buoys.
    For the one-long-leg family (2,1,...,1) the far end of the long leg is the
    special pendant and its anchor the special anchor.
    """
    legs = check_partition(legs)
    n = int(n)
    if n < 0 or len(legs) > n:
        return UNDEFINED
    special = bool(legs) and legs[0] == 2 and all(p == 1 for p in legs[1:])
    pend_total = sum(legs)
    edges = []
    roles = {}
    leg_labels = []
    label = 1
    for idx, length in enumerate(legs):
        labels = list(range(label, label + length))  # far end first
        label += length
        leg_labels.append(labels)
        edges += [(labels[i], labels[i + 1]) for i in range(length - 1)]
        if length == 1:
            roles[labels[0]] = PENDANT
        elif special and idx == 0:
            roles[labels[0]] = SPECIAL_PENDANT
            roles[labels[1]] = PENDANT
        else:
            roles.update((v, LEG) for v in labels)
    anchors = range(pend_total + 1, pend_total + len(legs) + 1)
    for idx, (labels, a) in enumerate(zip(leg_labels, anchors)):
        edges.append((labels[-1], a))  # inner end of the leg meets its anchor
        roles[a] = SPECIAL_ANCHOR if special and idx == 0 else ANCHOR
    buoys = range(pend_total + len(legs) + 1, pend_total + n + 1)
    roles.update((v, BUOY) for v in buoys)
    body = range(pend_total + 1, pend_total + n + 1)
    edges += itertools.combinations(body, 2)
    return LabeledGraph(n + pend_total, edges, roles)


def with_disjoint_path(graph, k: int):
    """Disjoint union with a path on k in {1, 2} fresh vertices, which
    receive the largest labels."""
    if graph is UNDEFINED:
        return UNDEFINED
    if k not in (1, 2):
        raise ValueError("only P1 and P2 extensions are supported")
    n = graph.n
    edges = set(graph.edges)
    roles = dict(graph.roles) if graph.roles is not None else {}
    if k == 1:
        roles[n + 1] = ISOLATED
    else:
        edges.add((n + 1, n + 2))
        roles[n + 1] = LEG
        roles[n + 2] = LEG
    return LabeledGraph(n + k, edges, roles)


def is_stable(graph, vertices) -> bool:
    vs = list(vertices)
    return all(not graph.adjacent(u, v) for u, v in itertools.combinations(vs, 2))


def is_claw_free(graph) -> bool:
    """True iff no four vertices induce a star K_{1,3} (brute force)."""
    for quad in itertools.combinations(graph.vertices, 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(graph.adjacent(center, u) for u in leaves) and not any(
                graph.adjacent(u, w) for u, w in itertools.combinations(leaves, 2)
            ):
                return False
    return True


def stable_subsets(graph, pool, size: int):
    """Stable subsets of ``pool`` of the given size, as sorted tuples in
    lexicographic order."""
    pool = sorted(pool)

    def rec(start: int, chosen: list[int]):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(pool)):
            if len(pool) - i < size - len(chosen):
                break
            v = pool[i]
            if all(not graph.adjacent(v, u) for u in chosen):
                chosen.append(v)
                yield from rec(i + 1, chosen)
                chosen.pop()

    yield from rec(0, [])


def max_clique(graph) -> frozenset:
    """A maximum clique, by branch and bound (fine at desk scale)."""
    best: list[int] = []

    def grow(current: list[int], candidates: list[int]):
        nonlocal best
        if len(current) > len(best):
            best = current[:]
        for i, v in enumerate(candidates):
            if len(current) + len(candidates) - i <= len(best):
                break
            grow(current + [v], [u for u in candidates[i + 1 :] if graph.adjacent(u, v)])

    grow([], sorted(graph.vertices))
    return frozenset(best)


def count_semi_ordered_stable_partitions(graph, mu) -> int:
    """Count partitions of the vertex set into stable parts of sizes ``mu``,
    where parts of equal size additionally carry an order.

    Unordered partitions are counted by always routing the smallest
    unassigned vertex into the next part (so each is seen exactly once), then
    the count is multiplied by the factorials of the size multiplicities.
    """
    mu = check_partition(mu)
    if sum(mu) != graph.n:
        raise ValueError("partition size must equal the vertex count")
    ordered_factor = 1
    for r in Counter(mu).values():
        ordered_factor *= factorial(r)
    unordered = _stable_partition_count(graph, frozenset(graph.vertices), mu)
    return unordered * ordered_factor


def _stable_partition_count(graph, remaining: frozenset, sizes) -> int:
    if not sizes:
        return 1
    v = min(remaining)
    pool = [u for u in sorted(remaining) if u != v and not graph.adjacent(u, v)]
    total = 0
    seen = set()
    for idx, s in enumerate(sizes):
        if s in seen:
            continue
        seen.add(s)
        rest = sizes[:idx] + sizes[idx + 1 :]
        for others in stable_subsets(graph, pool, s - 1):
            total += _stable_partition_count(graph, remaining.difference((v,) + others), rest)
    return total


def is_connected(graph) -> bool:
    if graph.n <= 1:
        return True
    seen = {1}
    frontier = [1]
    while frontier:
        v = frontier.pop()
        for u in graph.neighbors(v):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == graph.n


def are_isomorphic(g: LabeledGraph, h: LabeledGraph) -> bool:
    """Brute-force isomorphism test for small graphs (ignores roles)."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(map(g.degree, g.vertices)) != sorted(map(h.degree, h.vertices)):
        return False
    source = list(g.vertices)
    for perm in itertools.permutations(h.vertices):
        mapping = dict(zip(source, perm))
        if all(
            (mapping[u], mapping[v]) in h.edges or (mapping[v], mapping[u]) in h.edges
            for u, v in g.edges
        ):
            return True
    return False


def connected_graphs(n: int) -> list[LabeledGraph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Canonical form: the minimum, over all label permutations, of the edge-set
    bitmask; permutations act through precomputed pair-index remaps.
    """
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    pair_index = {pair: i for i, pair in enumerate(pairs)}
    remaps = []
    for p in itertools.permutations(range(1, n + 1)):
        remaps.append(
            tuple(
                pair_index[(p[u - 1], p[v - 1]) if p[u - 1] < p[v - 1] else (p[v - 1], p[u - 1])]
                for u, v in pairs
            )
        )
    reps: dict[int, LabeledGraph] = {}
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        graph = LabeledGraph(n, edges)
        if not is_connected(graph):
            continue
        set_bits = [i for i in range(len(pairs)) if bits >> i & 1]
        canon = min(sum(1 << remap[i] for i in set_bits) for remap in remaps)
        if canon not in reps:
            reps[canon] = graph
    return [reps[c] for c in sorted(reps)]


def random_graph(n: int, rng: random.Random, edge_probability: float = 0.5) -> LabeledGraph:
    """Seeded Erdos-Renyi style graph; edges drawn in lexicographic pair order."""
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < edge_probability
    ]
    return LabeledGraph(n, edges)


def random_relabeling(graph: LabeledGraph, rng: random.Random) -> LabeledGraph:
    labels = list(graph.vertices)
    shuffled = labels[:]
    rng.shuffle(shuffled)
    return graph.relabel(dict(zip(labels, shuffled)))


def validate_roles(graph: LabeledGraph) -> None:
    """Check the role bookkeeping invariants; raises AssertionError on breakage.

    Every anchor touches exactly one non-body vertex, buoys touch none, and a
    special pendant has degree 1 with no body neighbor.
    """
    roles = graph.roles or {}
    body = set(graph.labels_with_role(*BODY_ROLES))
    for v, tag in roles.items():
        outside = [u for u in graph.neighbors(v) if u not in body]
        if tag in (ANCHOR, SPECIAL_ANCHOR):
            assert len(outside) == 1, f"anchor {v} touches {len(outside)} non-body vertices"
        elif tag == BUOY:
            assert not outside, f"buoy {v} touches a non-body vertex"
        elif tag == SPECIAL_PENDANT:
            assert graph.degree(v) == 1, f"special pendant {v} must have degree 1"
            assert not (graph.neighbors(v) & body), f"special pendant {v} touches the body"
