import pytest

from chromatic_schur.graphs import (
    complete_graph,
    generalized_net,
    star_graph,
    with_disjoint_path,
)
from chromatic_schur.partitions import UNDEFINED, partitions_of
from chromatic_schur.tabloids import (
    split_head_tail,
    srh_g_tabloids,
    srh_tabloids,
    tabloids_with_bottom_vertex,
)


# --- independent oracle -----------------------------------------------------
#
# Enumerate tilings without the peel order: generate every north/east cell
# path starting in the first column, backtrack over exact covers of the
# diagram, then validate the bottom-to-top removal condition by replaying it.


def _all_first_column_paths(shape):
    cells = {(r + 1, c + 1) for r, width in enumerate(shape) for c in range(width)}
    paths = []

    def extend(path):
        paths.append(tuple(path))
        r, c = path[-1]
        for nxt in ((r - 1, c), (r, c + 1)):  # north or east
            if nxt in cells:
                path.append(nxt)
                extend(path)
                path.pop()

    for r in range(1, len(shape) + 1):
        extend([(r, 1)])
    return paths


def _is_partition_diagram(cells):
    rows = {}
    for r, c in cells:
        rows.setdefault(r, set()).add(c)
    if not rows:
        return True
    if set(rows) != set(range(1, max(rows) + 1)):
        return False
    widths = []
    for r in sorted(rows):
        cols = rows[r]
        if cols != set(range(1, len(cols) + 1)):
            return False
        widths.append(len(cols))
    return all(widths[i] >= widths[i + 1] for i in range(len(widths) - 1))


def brute_force_tiling_count(shape):
    cells = frozenset((r + 1, c + 1) for r, width in enumerate(shape) for c in range(width))
    paths = _all_first_column_paths(shape)

    def covers(remaining, chosen):
        if not remaining:
            # replay removals bottom-to-top; each must leave a partition diagram
            left = set(cells)
            for path in sorted(chosen, key=lambda p: -p[0][0]):
                left -= set(path)
                if not _is_partition_diagram(left):
                    return 0
            return 1
        target = max(remaining)  # fill the lowest-rightmost cell next
        total = 0
        for path in paths:
            if target in path and set(path) <= remaining:
                total += covers(remaining - set(path), chosen + [path])
        return total

    return covers(cells, [])


# --- golden and derived cases ----------------------------------------------


def test_golden_shape_4_2_2():
    tabs = list(srh_tabloids((4, 2, 2)))
    assert [t.content for t in tabs] == [
        (2, 2, 4),
        (2, 5, 1),
        (3, 1, 4),
        (3, 5),
        (6, 1, 1),
        (6, 2),
    ]
    assert [t.sign for t in tabs] == [1, -1, -1, 1, 1, -1]


def test_small_shapes():
    (only,) = srh_tabloids((1,))
    assert only.content == (1,) and only.sign == 1
    tabs = list(srh_tabloids((2, 1)))
    assert [(t.content, t.sign) for t in tabs] == [((1, 2), 1), ((3,), -1)]
    (empty,) = srh_tabloids(())
    assert empty.content == () and empty.sign == 1


def test_single_row_always_positive():
    for n in range(1, 7):
        for t in srh_tabloids((n,)):
            assert t.sign == 1


def test_tiling_invariants():
    for n in range(0, 8):
        for shape in partitions_of(n):
            diagram = {(r + 1, c + 1) for r, width in enumerate(shape) for c in range(width)}
            for t in srh_tabloids(shape):
                covered = [c for hook in t.hooks for c in hook.cells]
                assert len(covered) == len(set(covered)) == len(diagram)
                assert set(covered) == diagram
                assert all(hook.cells[0][1] == 1 for hook in t.hooks)
                assert sum(t.content) == n


def test_peel_count_matches_brute_force_tiler():
    for n in range(0, 9):
        for shape in partitions_of(n):
            assert len(list(srh_tabloids(shape))) == brute_force_tiling_count(shape)


# --- graph-filled tabloids ---------------------------------------------------


def test_g_tabloids_two_singletons():
    tabs = list(srh_g_tabloids((1, 1), complete_graph(2)))
    assert len(tabs) == 2
    assert all(t.sign == 1 for t in tabs)


def test_g_tabloids_need_stable_hooks():
    assert list(srh_g_tabloids((2,), complete_graph(2))) == []


def test_g_tabloids_size_mismatch_and_undefined_empty():
    assert list(srh_g_tabloids((2, 1), star_graph(3))) == []
    assert list(srh_g_tabloids(UNDEFINED, complete_graph(2))) == []
    assert list(srh_g_tabloids((1,), UNDEFINED)) == []


def test_g_tabloids_claw_signed_sum():
    signed = sum(t.sign for t in srh_g_tabloids((2, 2), star_graph(3)))
    assert signed == -1


def test_g_tabloid_consistency_sweep():
    import itertools

    from chromatic_schur.graphs import path_graph

    graphs = [
        complete_graph(3),
        path_graph(4),
        star_graph(3),
        generalized_net(2, 2),
        generalized_net(3, 1),
    ]
    for graph in graphs:
        for lam in partitions_of(graph.n):
            for t in srh_g_tabloids(lam, graph):
                used = [v for fill in t.fills for v in fill]
                assert sorted(used) == list(graph.vertices)
                for hook, fill in zip(t.hooks, t.fills):
                    assert list(fill) == sorted(fill)  # increasing outward read
                    assert all(
                        not graph.adjacent(u, v) for u, v in itertools.combinations(fill, 2)
                    )


def test_grouped_equals_ungrouped_signed_sums():
    """The pairing between (tabloid, semi-ordered stable partition) pairs and
    filled tabloids, checked as equality of signed counts."""
    import random

    from chromatic_schur.graphs import count_semi_ordered_stable_partitions, random_graph
    from chromatic_schur.partitions import sort_to_partition

    rng = random.Random(4)
    graphs = [complete_graph(4), star_graph(3), generalized_net(3, 2)]
    graphs += [random_graph(6, rng) for _ in range(8)]
    for graph in graphs:
        for lam in partitions_of(graph.n):
            direct = sum(t.sign for t in srh_g_tabloids(lam, graph))
            grouped = sum(
                t.sign * count_semi_ordered_stable_partitions(graph, sort_to_partition(t.content))
                for t in srh_tabloids(lam)
            )
            assert direct == grouped


# --- bottom-vertex classes ----------------------------------------------------


def test_bottom_vertex_examples():
    k2 = complete_graph(2)
    assert len(list(tabloids_with_bottom_vertex((1, 1), k2, 1))) == 1
    with pytest.raises(ValueError):
        list(tabloids_with_bottom_vertex((2,), k2, 1))


def test_bottom_vertex_classes_partition_everything():
    g = generalized_net(2, 2)
    for lam in partitions_of(4):
        if lam[-1] != 1:
            continue
        whole = list(srh_g_tabloids(lam, g))
        classes = [len(list(tabloids_with_bottom_vertex(lam, g, v))) for v in g.vertices]
        assert sum(classes) == len(whole)


def test_anchor_bottom_class_matches_shrunken_graph():
    g = generalized_net(2, 2)  # pendant-first: pendants 1,2; anchors 3,4
    smaller = with_disjoint_path(generalized_net(1, 1), 1)
    expected = len(list(srh_g_tabloids((2, 1), smaller)))
    for anchor in (3, 4):
        count = len(list(tabloids_with_bottom_vertex((2, 1, 1), g, anchor)))
        assert count == expected


# --- head/tail splits ----------------------------------------------------------


def test_split_head_tail_rows():
    g = generalized_net(3, 3)
    for t in srh_g_tabloids((3, 2, 1, 1, 1), g):
        head, tail = split_head_tail(t)
        assert head.row_lengths == (3, 2)
        assert tail.row_lengths == (1, 1, 1)
        assert head.vertex_set() | tail.vertex_set() == set(g.vertices)
        break
    for t in srh_g_tabloids((2, 2), generalized_net(2, 2)):
        _, tail = split_head_tail(t)
        assert tail.row_lengths == () and not tail.fragments
    for t in srh_g_tabloids((1, 1), complete_graph(2)):
        head, _ = split_head_tail(t)
        assert head.row_lengths == () and not head.fragments


def test_head_equality_ignores_boundary_crossing():
    # same head cells and filling group together whether or not the head's
    # lowest hook continues into the tail
    g = with_disjoint_path(with_disjoint_path(complete_graph(1), 1), 1)  # 3 isolated
    heads = set()
    for t in srh_g_tabloids((2, 1), g):
        head, _ = split_head_tail(t)
        heads.add(head)
    crossing = [
        t
        for t in srh_g_tabloids((2, 1), g)
        if any(len({r for r, _ in hook.cells}) > 1 for hook in t.hooks)
    ]
    assert crossing, "expected at least one boundary-crossing hook"
    for t in crossing:
        head, _ = split_head_tail(t)
        assert head in heads


def test_tabloid_json_shape():
    t = next(srh_g_tabloids((2, 1), star_graph(2)))
    payload = t.to_json_dict()
    assert payload["shape"] == [2, 1]
    assert all(set(h) == {"cells", "steps"} for h in payload["hooks"])
    assert len(payload["filling"]) == 3
