"""Special rim hook tabloids and their graph-filled variants.

A special rim hook is a border strip that meets the first column.  A tabloid
tiles a partition diagram with such hooks so that removing them bottom-to-top
always leaves a smaller diagram; its sign is (-1) to the number of north
steps.  The graph-filled variant additionally assigns each hook a stable set
of vertices, placed in increasing label order outward from the first column.

Rows are indexed from the top starting at 1, columns from the left starting
at 1, and cells keep their absolute coordinates as hooks are peeled away.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import max_clique, stable_subsets
from .partitions import UNDEFINED, Partition, check_partition

Cell = tuple[int, int]


@dataclass(frozen=True)
class RimHook:
    cells: tuple[Cell, ...]

    def __post_init__(self):
        if not self.cells or self.cells[0][1] != 1:
            raise ValueError("a special rim hook must start in the first column")

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def steps(self) -> tuple[str, ...]:
        return tuple(
            "N" if r1 != r2 else "E"
            for (r1, _), (r2, _) in zip(self.cells, self.cells[1:])
        )

    @property
    def north_steps(self) -> int:
        return sum(1 for (r1, _), (r2, _) in zip(self.cells, self.cells[1:]) if r1 != r2)

    def to_json_dict(self) -> dict:
        return {"cells": [list(c) for c in self.cells], "steps": list(self.steps)}


@dataclass(frozen=True)
class SrhTabloid:
    shape: Partition
    hooks: tuple[RimHook, ...]  # bottom-to-top by first-column cell

    @property
    def content(self) -> tuple[int, ...]:
        """Hook lengths read from the bottom to the top."""
        return tuple(h.length for h in self.hooks)

    @property
    def sign(self) -> int:
        return -1 if sum(h.north_steps for h in self.hooks) % 2 else 1

    def to_json_dict(self) -> dict:
        return {"shape": list(self.shape), "hooks": [h.to_json_dict() for h in self.hooks]}


@dataclass(frozen=True)
class SrhGTabloid:
    shape: Partition
    hooks: tuple[RimHook, ...]
    fills: tuple[tuple[int, ...], ...]  # vertex labels per hook, in read order

    @property
    def content(self) -> tuple[int, ...]:
        return tuple(h.length for h in self.hooks)

    @property
    def sign(self) -> int:
        return -1 if sum(h.north_steps for h in self.hooks) % 2 else 1

    def base(self) -> SrhTabloid:
        return SrhTabloid(self.shape, self.hooks)

    def filling(self) -> dict[Cell, int]:
        out = {}
        for hook, verts in zip(self.hooks, self.fills):
            out.update(zip(hook.cells, verts))
        return out

    def vertex_at(self, cell: Cell) -> int:
        for hook, verts in zip(self.hooks, self.fills):
            for c, v in zip(hook.cells, verts):
                if c == cell:
                    return v
        raise KeyError(f"cell {cell} not in the diagram")

    def head_row_count(self) -> int:
        return sum(1 for p in self.shape if p > 1)

    def tail_vertices(self) -> frozenset:
        """Vertices sitting in the rows of length 1."""
        h = self.head_row_count()
        verts = []
        for hook, fill in zip(self.hooks, self.fills):
            verts += [v for (r, _), v in zip(hook.cells, fill) if r > h]
        return frozenset(verts)

    def to_json_dict(self) -> dict:
        out = self.base().to_json_dict()
        out["filling"] = {
            f"[{r},{c}]": v for (r, c), v in sorted(self.filling().items())
        }
        return out


@lru_cache(maxsize=None)
def bottom_hook_choices(shape: Partition) -> tuple[tuple[tuple[Cell, ...], int, Partition], ...]:
    """Every special rim hook of ``shape`` containing the bottom-left cell,
    shortest first, with its north-step count and the diagram left behind.

    The hook reaching up to ``top`` covers the whole bottom row and then
    columns shape[r]..shape[r-1] of each row r above; any hook whose removal
    leaves a partition must have this form, so these are all of them.
    """
    k = len(shape)
    out = []
    for top in range(k, 0, -1):
        cells = [(k, c) for c in range(1, shape[k - 1] + 1)]
        for r in range(k - 1, top - 1, -1):
            cells.extend((r, c) for c in range(shape[r], shape[r - 1] + 1))
        reduced = shape[: top - 1] + tuple(shape[r] - 1 for r in range(top, k))
        reduced = tuple(p for p in reduced if p > 0)
        out.append((tuple(cells), k - top, reduced))
    return tuple(out)


def srh_tabloids(shape):
    """Yield every special rim hook tabloid of ``shape`` exactly once.

    Hooks are peeled bottom-to-top; at each step candidates are tried
    shortest first, fixing a deterministic order.
    """
    shape = check_partition(shape)

    def rec(current: Partition, acc: list[RimHook]):
        if not current:
            yield SrhTabloid(shape, tuple(acc))
            return
        for cells, _, reduced in bottom_hook_choices(current):
            acc.append(RimHook(cells))
            yield from rec(reduced, acc)
            acc.pop()

    yield from rec(shape, [])


def srh_g_tabloids(shape, graph):
    """Yield every SRH G-tabloid of ``shape``: each hook carries a stable set
    of vertices sorted increasingly outward from its first-column cell, and
    together the hooks use every vertex exactly once.

    Yields nothing when either argument is UNDEFINED or the sizes differ.
    The sorted placement is the unique one satisfying the increasing-read
    condition, so it is enforced by construction rather than filtered.
    """
    if shape is UNDEFINED or graph is UNDEFINED:
        return
    shape = check_partition(shape)
    if sum(shape) != graph.n:
        return
    clique = max_clique(graph)

    def rec(current, remaining, hooks, fills):
        if not current:
            yield SrhGTabloid(shape, tuple(hooks), tuple(fills))
            return
        # every hook ahead holds at most one clique vertex and needs its own
        # first-column cell, of which len(current) remain
        if len(clique & remaining) > len(current):
            return
        for cells, _, reduced in bottom_hook_choices(current):
            for group in stable_subsets(graph, remaining, len(cells)):
                hooks.append(RimHook(cells))
                fills.append(group)
                yield from rec(reduced, remaining.difference(group), hooks, fills)
                hooks.pop()
                fills.pop()

    yield from rec(shape, frozenset(graph.vertices), [], [])


def tabloids_with_bottom_vertex(shape, graph, vertex: int):
    """Tabloids whose bottom-left cell holds ``vertex``; the shape must end
    in a part equal to 1."""
    shape = check_partition(shape)
    if not shape or shape[-1] != 1:
        raise ValueError("bottom-vertex filtering needs a shape ending in 1")
    for t in srh_g_tabloids(shape, graph):
        if t.fills[0][0] == vertex:
            yield t


@dataclass(frozen=True)
class TabloidPart:
    """Restriction of a G-tabloid to its head rows (lengths > 1) or its tail
    rows (length 1), with rows renumbered to start at 1.

    Two parts are equal exactly when their row lengths, per-hook cell
    fragments, and vertex fillings coincide; whether a fragment's hook
    continues across the head/tail boundary is deliberately not recorded.
    """

    row_lengths: Partition
    fragments: tuple[tuple[tuple[Cell, ...], tuple[int, ...]], ...]

    def vertex_set(self) -> frozenset:
        return frozenset(v for _, verts in self.fragments for v in verts)

    def sort_key(self):
        return (self.row_lengths, self.fragments)

    def to_json_dict(self) -> dict:
        return {
            "row_lengths": list(self.row_lengths),
            "fragments": [
                {"cells": [list(c) for c in cells], "vertices": list(verts)}
                for cells, verts in self.fragments
            ],
        }


def split_head_tail(tabloid: SrhGTabloid) -> tuple[TabloidPart, TabloidPart]:
    """Split into the rows of length > 1 (head) and the rows of length 1 (tail)."""
    shape = tabloid.shape
    h = sum(1 for p in shape if p > 1)
    head_frags = []
    tail_frags = []
    for hook, verts in zip(tabloid.hooks, tabloid.fills):
        hcells, hverts, tcells, tverts = [], [], [], []
        for cell, vert in zip(hook.cells, verts):
            if cell[0] <= h:
                hcells.append(cell)
                hverts.append(vert)
            else:
                tcells.append((cell[0] - h, cell[1]))
                tverts.append(vert)
        if hcells:
            head_frags.append((tuple(hcells), tuple(hverts)))
        if tcells:
            tail_frags.append((tuple(tcells), tuple(tverts)))
    return (
        TabloidPart(shape[:h], tuple(head_frags)),
        TabloidPart(shape[h:], tuple(tail_frags)),
    )
