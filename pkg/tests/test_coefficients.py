import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromatic_schur.coefficients import (
    GROUPED,
    ORACLE,
    TABLOID,
    chromatic_monomial_expansion,
    f_coefficient,
    is_schur_positive,
    schur_coefficient,
    schur_expansion,
    xi,
)
from chromatic_schur.graphs import (
    PENDANT_LAST,
    complete_graph,
    generalized_net,
    generalized_spider,
    path_graph,
    random_graph,
    random_relabeling,
    star_graph,
    with_disjoint_path,
)
from chromatic_schur.partitions import UNDEFINED, partitions_of
from chromatic_schur.tabloids import srh_g_tabloids


def test_monomial_expansions():
    assert chromatic_monomial_expansion(complete_graph(2)).coeffs == {(1, 1): 2}
    assert chromatic_monomial_expansion(path_graph(3)).coeffs == {(1, 1, 1): 6, (2, 1): 1}
    assert chromatic_monomial_expansion(star_graph(3)).coeffs == {
        (3, 1): 1,
        (2, 1, 1): 6,
        (1, 1, 1, 1): 24,
    }
    assert chromatic_monomial_expansion(generalized_net(0, 0)).coeffs == {(): 1}


def _colorings_with_usage(graph, mu):
    """Oracle straight from the definition: proper colorings of the vertex
    set into colors 1..len(mu) where color i is used exactly mu[i] times."""
    import itertools

    count = 0
    for coloring in itertools.product(range(len(mu)), repeat=graph.n):
        if any(coloring.count(i) != mu[i] for i in range(len(mu))):
            continue
        if all(coloring[u - 1] != coloring[v - 1] for u, v in graph.edges):
            count += 1
    return count


def test_monomial_expansion_matches_coloring_enumeration():
    rng = random.Random(31)
    graphs = [complete_graph(3), path_graph(4), star_graph(3)]
    graphs += [random_graph(5, rng) for _ in range(4)]
    for graph in graphs:
        expansion = chromatic_monomial_expansion(graph)
        for mu in partitions_of(graph.n):
            assert expansion[mu] == _colorings_with_usage(graph, mu)


def test_schur_coefficient_examples():
    for n in range(1, 5):
        assert schur_coefficient(complete_graph(n), (1,) * n) == factorial(n)
    assert schur_coefficient(star_graph(3), (2, 2)) == -1
    assert schur_coefficient(path_graph(3), (2, 1)) == 1
    assert schur_coefficient(path_graph(3), (1, 1, 1)) == 4


def test_schur_coefficient_validation():
    with pytest.raises(ValueError):
        schur_coefficient(complete_graph(3), (2, 2))
    with pytest.raises(ValueError):
        schur_coefficient(complete_graph(3), (2, 1), method="magic")


def test_schur_expansion_examples():
    assert schur_expansion(complete_graph(3)).coeffs == {(1, 1, 1): 6}
    assert schur_expansion(star_graph(3)).coeffs == {
        (3, 1): 1,
        (2, 2): -1,
        (2, 1, 1): 5,
        (1, 1, 1, 1): 8,
    }
    two_isolated = with_disjoint_path(generalized_net(1, 0), 1)
    assert schur_expansion(two_isolated).coeffs == {(2,): 1, (1, 1): 1}


def test_xi_extends_by_zero():
    assert xi(UNDEFINED, complete_graph(2)) == 0
    assert xi((1,), UNDEFINED) == 0
    assert xi((1,), complete_graph(1)) == 1
    assert xi((2, 1), complete_graph(2)) == 0  # size mismatch
    assert xi((2, 2), generalized_net(2, 2)) == 2


def test_f_coefficient_examples():
    assert f_coefficient(0, 3) == 6
    assert [f_coefficient(n, 0) for n in range(7)] == [1, 0, 2, 0, 24, 0, 720]
    assert f_coefficient(1, 1) == 1
    assert f_coefficient(-1, 2) == 0
    assert f_coefficient(2, -1) == 0


def test_f_recurrence_small():
    for c in range(1, 4):
        for d in range(1, 4):
            assert f_coefficient(c, d) == c * f_coefficient(c - 1, d) + d * f_coefficient(c, d - 1)


def test_is_schur_positive():
    positive, witness = is_schur_positive(star_graph(3))
    assert not positive and witness == (2, 2)
    assert is_schur_positive(generalized_net(3, 3)) == (True, None)
    assert is_schur_positive(complete_graph(4)) == (True, None)


def test_tabloid_count_matches_object_enumerator():
    """The memoized signed count is exactly the sign sum over the streaming
    enumerator; check on a mixed sweep."""
    rng = random.Random(99)
    graphs = [
        complete_graph(4),
        path_graph(5),
        star_graph(3),
        generalized_net(3, 2),
        generalized_spider(3, (2, 1)),
        with_disjoint_path(generalized_net(2, 1), 1),
    ]
    graphs += [random_graph(5, rng) for _ in range(6)]
    for graph in graphs:
        for lam in partitions_of(graph.n):
            direct = sum(t.sign for t in srh_g_tabloids(lam, graph))
            assert schur_coefficient(graph, lam, TABLOID) == direct


def test_method_agreement_small_sweep():
    rng = random.Random(5)
    graphs = [complete_graph(4), path_graph(4), star_graph(3), generalized_net(2, 2)]
    graphs += [random_graph(5, rng) for _ in range(5)]
    for graph in graphs:
        for lam in partitions_of(graph.n):
            vals = {
                schur_coefficient(graph, lam, method)
                for method in (TABLOID, GROUPED, ORACLE)
            }
            assert len(vals) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**30))
def test_label_invariance_random_graphs(seed):
    rng = random.Random(seed)
    graph = random_graph(5, rng)
    relabeled = random_relabeling(graph, rng)
    for lam in partitions_of(5):
        assert schur_coefficient(graph, lam) == schur_coefficient(relabeled, lam)


def test_body_needs_its_own_hook():
    """Coefficients vanish whenever the shape has fewer parts than the body
    clique, for nets and spiders alike."""
    for n in range(2, 5):
        for m in range(0, n + 1):
            graph = generalized_net(n, m, PENDANT_LAST)
            for lam in partitions_of(graph.n):
                if len(lam) < n:
                    assert schur_coefficient(graph, lam) == 0
    spider = generalized_spider(3, (2, 1))
    for lam in partitions_of(spider.n):
        if len(lam) < 3:
            assert schur_coefficient(spider, lam) == 0


def test_singleton_union_identity_small():
    for c in range(1, 4):
        for d in range(0, 3):
            lhs = xi(
                (2,) * c + (1,) * d,
                with_disjoint_path(generalized_net(c + d, c - 1, PENDANT_LAST), 1),
            )
            rhs = xi((2,) * (c - 1) + (1,) * (d + 1), generalized_net(c + d, c - 1, PENDANT_LAST))
            assert lhs == rhs
