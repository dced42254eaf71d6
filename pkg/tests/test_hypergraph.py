import itertools
import random
from fractions import Fraction

import pytest

from gpcount.errors import BudgetExceededError, InputFormatError
from gpcount.generators import random_hypergraph
from gpcount.hypergraph import (
    Hypergraph,
    acyclic_headings,
    check_heading,
    chromatic_count,
    chromatic_polynomial,
    compatible_pairs_count,
    hypergraph_from_json,
    hypergraph_to_json,
    hypergraphic_setfn,
    indegree_vector,
    is_acyclic,
    is_compatible,
    is_proper,
    vertices_via_headings,
)
from gpcount.permutahedron import GPerm, vertices
from oracles import chromatic_poly_deletion_contraction, has_cycle_by_definition


def hg(d, *edges):
    return Hypergraph(d, tuple(frozenset(e) for e in edges))


# the 6-edge example used throughout: one triple, two pairs, three singletons
RUNNING = hg(3, {1, 2, 3}, {1, 2}, {2, 3}, {1}, {2}, {3})


def test_validation():
    with pytest.raises(ValueError):
        hg(3, set())
    with pytest.raises(ValueError):
        hg(3, {1, 5})
    with pytest.raises(ValueError):
        Hypergraph(0, ())
    assert hg(2).edges == ()  # edgeless is fine


def test_hypergraphic_setfn():
    single = hypergraphic_setfn(hg(3, {1, 2, 3}))
    assert all(single.values[mask] == 1 for mask in range(1, 8))
    empty = hypergraphic_setfn(hg(2))
    assert empty.values == (0, 0, 0, 0)
    z = hypergraphic_setfn(RUNNING)
    assert z.of_set([2]) == 4
    assert z.of_set([1]) == 3
    assert z.of_set([1, 3]) == 5
    assert z.of_set([1, 2, 3]) == 6
    assert z.is_submodular


def test_check_heading():
    check_heading(RUNNING, (1, 2, 3, 1, 2, 3))
    with pytest.raises(ValueError):
        check_heading(RUNNING, (1, 2, 3))
    with pytest.raises(ValueError):
        check_heading(RUNNING, (1, 2, 1, 1, 2, 3))  # 1 is not in {2,3}


def test_is_acyclic_examples():
    single = hg(3, {1, 2, 3})
    for head in (1, 2, 3):
        assert is_acyclic(single, (head,))
    double = hg(2, {1, 2}, {1, 2})
    assert not is_acyclic(double, (1, 2))
    assert not is_acyclic(double, (2, 1))
    assert is_acyclic(double, (1, 1))
    assert is_acyclic(double, (2, 2))
    assert not is_acyclic(RUNNING, (2, 1, 3, 1, 2, 3))


def test_acyclicity_matches_direct_definition():
    # every heading of every multiset of up to 3 edges on 4 nodes
    pool = [frozenset(s) for r in range(1, 5)
            for s in itertools.combinations(range(1, 5), r)]
    for count in range(1, 4):
        for combo in itertools.combinations_with_replacement(pool, count):
            h = Hypergraph(4, combo)
            for heads in itertools.product(*[sorted(e) for e in combo]):
                assert is_acyclic(h, heads) == (not has_cycle_by_definition(h, heads))


def test_indegree_vector():
    assert indegree_vector(hg(3, {1, 2, 3}), (2,)) == (0, 1, 0)
    assert indegree_vector(hg(2), ()) == (0, 0)
    assert indegree_vector(RUNNING, (2, 1, 3, 1, 2, 3)) == (2, 2, 2)


def test_acyclic_headings_examples():
    assert acyclic_headings(hg(3, {1, 2, 3})) == [(1,), (2,), (3,)]
    assert acyclic_headings(hg(2, {1, 2})) == [(1,), (2,)]
    assert acyclic_headings(hg(2, {1, 2}, {1, 2})) == [(1, 1), (2, 2)]


def test_running_example_headings():
    found = acyclic_headings(RUNNING)
    assert len(found) == 5
    assert found == sorted(found)  # lexicographic contract
    deltas = {indegree_vector(RUNNING, s) for s in found}
    assert deltas == {(1, 2, 3), (1, 4, 1), (2, 1, 3), (3, 1, 2), (3, 2, 1)}
    assert vertices_via_headings(RUNNING) == deltas


def test_heading_budget():
    assert RUNNING.heading_space == 12
    with pytest.raises(BudgetExceededError):
        acyclic_headings(RUNNING, budget=11)


def test_vertex_description_examples():
    assert vertices_via_headings(hg(3, {1, 2, 3})) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert vertices_via_headings(hg(2)) == {(0, 0)}
    assert vertices_via_headings(hg(2, {1, 2}, {1, 2})) == {(2, 0), (0, 2)}


def test_vertex_description_random():
    rng = random.Random(5)
    cases = [RUNNING] + [random_hypergraph(rng) for _ in range(15)]
    for h in cases:
        assert vertices_via_headings(h) == set(vertices(hypergraphic_setfn(h)))


def test_is_proper():
    e = hg(2, {1, 2})
    assert not is_proper(e, (1, 1))
    assert is_proper(e, (1, 2))
    assert not is_proper(RUNNING, (1, 2, 2))
    assert is_proper(RUNNING, (1, 3, 2))
    with pytest.raises(ValueError):
        is_proper(e, (1,))


def test_chromatic_count_examples():
    assert chromatic_count(hg(2, {1, 2}), 2) == 2
    assert chromatic_count(hg(2), 3) == 9
    assert [chromatic_count(hg(3, {1, 2, 3}), m) for m in range(1, 5)] == [0, 3, 15, 42]
    with pytest.raises(BudgetExceededError):
        chromatic_count(hg(2, {1, 2}), 10, budget=99)
    with pytest.raises(ValueError):
        chromatic_count(hg(2, {1, 2}), 0)


def test_chromatic_polynomial_examples():
    assert chromatic_polynomial(hg(2, {1, 2})).coefficients == (0, -1, 1)
    assert chromatic_polynomial(hg(2)).coefficients == (0, 0, 1)
    p = chromatic_polynomial(hg(3, {1, 2, 3}))
    assert p.coefficients == (0, Fraction(1, 2), Fraction(-3, 2), 1)
    # interpolation holds beyond its nodes
    assert p(5) == chromatic_count(hg(3, {1, 2, 3}), 5)
    assert p(6) == chromatic_count(hg(3, {1, 2, 3}), 6)


def test_chromatic_polynomial_extra_nodes():
    rng = random.Random(13)
    for _ in range(8):
        h = random_hypergraph(rng, max_d=4, max_edges=4)
        p = chromatic_polynomial(h)
        for m in (h.d + 2, h.d + 3):
            assert p(m) == chromatic_count(h, m)


def test_coloring_direction_dictionary():
    rng = random.Random(17)
    cases = [RUNNING] + [random_hypergraph(rng, max_d=4, max_edges=4) for _ in range(6)]
    for h in cases:
        P = GPerm(hypergraphic_setfn(h))
        for m in range(1, 4):
            assert chromatic_count(h, m) == P.chi_count(0, m)


def test_is_compatible():
    e = hg(2, {1, 2})
    assert is_compatible(e, (2,), (1, 2))
    assert not is_compatible(e, (1,), (1, 2))
    assert is_compatible(RUNNING, (1, 1, 2, 1, 2, 3), (2, 2, 2))  # constant coloring


def test_compatible_pairs_examples():
    assert compatible_pairs_count(hg(2, {1, 2}), 1) == 2
    assert compatible_pairs_count(hg(3, {1, 2, 3}), 1) == 3
    assert compatible_pairs_count(hg(2), 2) == 4
    with pytest.raises(ValueError):
        compatible_pairs_count(hg(2), 0)


def test_reciprocity_identities():
    rng = random.Random(37)
    cases = [RUNNING] + [random_hypergraph(rng, max_d=4, max_edges=4) for _ in range(6)]
    for h in cases:
        p = chromatic_polynomial(h)
        sign = (-1) ** h.d
        P = GPerm(hypergraphic_setfn(h))
        for m in (1, 2):
            pairs = compatible_pairs_count(h, m)
            assert sign * p(-m) == pairs
            assert pairs == P.reciprocity_rhs(0, m)
        assert sign * p(-1) == len(acyclic_headings(h))


def test_graph_specialization():
    # on ordinary graphs the polynomial is the classical chromatic polynomial
    triangle = hg(3, {1, 2}, {1, 3}, {2, 3})
    assert chromatic_polynomial(triangle).coefficients == (0, 2, -3, 1)
    rng = random.Random(41)
    for _ in range(10):
        d = rng.randint(2, 5)
        edges = [frozenset(rng.sample(range(1, d + 1), 2))
                 for _ in range(rng.randint(1, 6))]
        h = Hypergraph(d, tuple(edges))
        oracle = chromatic_poly_deletion_contraction(d, [tuple(sorted(e)) for e in edges])
        assert chromatic_polynomial(h) == oracle


def test_singleton_edges_are_inert():
    rng = random.Random(43)
    for _ in range(6):
        h = random_hypergraph(rng, max_d=4, max_edges=3)
        i = rng.randint(1, h.d)
        extended = Hypergraph(h.d, h.edges + (frozenset({i}),))
        base = acyclic_headings(h)
        ext = acyclic_headings(extended)
        assert len(ext) == len(base)
        assert [s[:-1] for s in ext] == base
        shifted = {indegree_vector(extended, s) for s in ext}
        expected = set()
        for s in base:
            delta = list(indegree_vector(h, s))
            delta[i - 1] += 1
            expected.add(tuple(delta))
        assert shifted == expected
        # proper colorings ignore singleton edges entirely
        assert chromatic_polynomial(extended) == chromatic_polynomial(h)


def test_json_round_trip():
    doc = {
        "nodes": ["a", "b", "c"],
        "edges": [["a", "b", "c"], ["a", "b"], ["b", "c"], ["a"], ["b"], ["c"]],
    }
    h, names = hypergraph_from_json(doc)
    assert h == RUNNING
    assert names == ("a", "b", "c")
    assert hypergraph_to_json(h, names) == doc
    assert hypergraph_to_json(hg(2, {1, 2}))["nodes"] == ["1", "2"]


@pytest.mark.parametrize(
    "doc",
    [
        {"edges": []},
        {"nodes": ["a", "a"], "edges": []},
        {"nodes": ["a"], "edges": [["b"]]},
        {"nodes": ["a"], "edges": [[]]},
        {"nodes": [], "edges": []},
        {"nodes": ["a"], "edges": "ab"},
        42,
    ],
)
def test_json_rejects(doc):
    with pytest.raises(InputFormatError):
        hypergraph_from_json(doc)
