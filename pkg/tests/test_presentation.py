import random

import pytest

from extremal_lie.fields import DEFAULT_PRIME, PrimeField, QQ
from extremal_lie.graphs import build_family_graph, graph_from_edges
from extremal_lie.presentation import (TruncatedAtCap, build_L0,
                                       evaluate_monomial)


def test_single_edge_is_heisenberg():
    L = build_L0(graph_from_edges(2, [(1, 2)]), QQ)
    assert L.dim == 3
    x1, x2 = L.generators()
    z = L.bracket(x1, x2)
    assert not L.is_zero(z)
    assert L.is_zero(L.bracket(x1, z)) and L.is_zero(L.bracket(x2, z))


def test_path_c4_dimension():
    L = build_L0(build_family_graph("C", 4), QQ)
    assert L.dim == 10


def test_graded_profile_d5():
    L = build_L0(build_family_graph("D", 5), QQ)
    assert L.dim == 45
    assert [d for d in L.degrees if d] == [5, 6, 8, 8, 8, 6, 4]


def test_dimensions_over_prime_field_agree():
    F = PrimeField(DEFAULT_PRIME)
    for family, n, want in (("A", 4, 15), ("B", 5, 36), ("C", 6, 21)):
        assert build_L0(build_family_graph(family, n), F).dim == want


def test_truncation_cap():
    with pytest.raises(TruncatedAtCap):
        build_L0(build_family_graph("D", 5), QQ, cap=4)


def test_extremality_relations_hold():
    L = build_L0(build_family_graph("A", 4), QQ)
    rng = random.Random(0)
    for x in L.generators():
        v = [QQ(rng.randint(-3, 3)) for _ in range(L.dim)]
        w = L.bracket(x, L.bracket(x, v))
        # [x,[x,v]] must be a multiple of x (here: zero, as the form
        # vanishes identically on the graded quotient)
        assert L.is_zero(w)


def test_jacobi_on_random_elements():
    L = build_L0(build_family_graph("B", 5), QQ)
    rng = random.Random(1)
    for _ in range(5):
        u, v, w = ([QQ(rng.randint(-2, 2)) for _ in range(L.dim)]
                   for _ in range(3))
        s = L.add(L.bracket(u, L.bracket(v, w)),
                  L.add(L.bracket(v, L.bracket(w, u)),
                        L.bracket(w, L.bracket(u, v))))
        assert L.is_zero(s)


def test_evaluate_monomial_right_nested():
    L = build_L0(build_family_graph("A", 4), QQ)
    gens = L.generators()
    # indices (3, 2, 1) mean [x3, [x2, x1]]
    direct = L.bracket(gens[2], L.bracket(gens[1], gens[0]))
    assert evaluate_monomial(L.bracket, gens, (3, 2, 1)) == direct
    assert evaluate_monomial(L.bracket, gens, (2,)) == gens[1]


def test_structure_constants_text_round_trip():
    L = build_L0(graph_from_edges(2, [(1, 2)]), QQ)
    text = L.structure_constants_text()
    assert text.splitlines() == ["0 1 2 1"]


def test_structure_constants_antisymmetry_consistency():
    L = build_L0(build_family_graph("C", 4), QQ)
    table = L.structure_constants()
    for (i, j), entries in table.items():
        bij = L.pair_bracket(i, j)
        bji = L.pair_bracket(j, i)
        assert bij == entries
        assert all(bji[k] == -v for k, v in entries.items())
