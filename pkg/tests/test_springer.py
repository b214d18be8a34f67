import math
from fractions import Fraction

import pytest

from cupcalc import diagrams as D
from cupcalc import orientation as O
from cupcalc import ringcalc as R
from cupcalc import springer as S
from helpers import brute_equivariant_dimension, dense_rank


@pytest.mark.parametrize("k", range(1, 11))
def test_presentation_dimension(k):
    ring = S.presentation_ring(k)
    assert ring.dimension == 2 ** (k - 1)
    assert sum(ring.graded_dims) == 2 ** (k - 1)


def test_presentation_bases_explicit():
    assert [sorted(m) for m in S.presentation_ring(3).basis] == [[], [1], [2], [3]]
    assert [sorted(m) for m in S.presentation_ring(4).basis] == [
        [],
        [1],
        [2],
        [3],
        [4],
        [1, 4],
        [2, 4],
        [3, 4],
    ]
    assert [sorted(m) for m in S.presentation_ring(2).basis] == [[], [2]]


@pytest.mark.parametrize("k", range(1, 9))
def test_presentation_relation_rank_by_dense_oracle(k):
    rows = S.presentation_relations(k)
    assert dense_rank(rows, 2 ** k) == 2 ** k - 2 ** (k - 1)


def test_presentation_graded_dims():
    ring = S.presentation_ring(6)
    assert list(ring.graded_dims) == [1, 6, 15, 10, 0, 0, 0]
    assert ring.graded_dims_cohomological() == {0: 1, 2: 6, 4: 15, 6: 10}


@pytest.mark.parametrize("k", range(2, 11))
@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_equivariant_dimension(k, t):
    assert S.equivariant_specialization(k, t) == 2 ** (k - 1)


@pytest.mark.parametrize("k", range(2, 6))
@pytest.mark.parametrize("t", [0, 1, 2, Fraction(3, 2)])
def test_equivariant_matches_dense_oracle(k, t):
    assert S.equivariant_specialization(k, t) == brute_equivariant_dimension(k, t)


def test_index_set_conversions():
    assert str(S.weight_of_index_set({1, 2, 3, 4})) == "^^^^"
    assert str(S.weight_of_index_set({1, -2, 3, 4})) == "^v^^"
    assert str(S.weight_of_index_set({-1, 2, -3, 4})) == "v^v^"
    # fixed-point convention is the sign flip of the two-column one
    flipped = {-i for i in {1, -2, 3, 4}}
    assert S.weight_of_index_set(flipped, "fixed_point") == S.weight_of_index_set(
        {1, -2, 3, 4}, "stable"
    )
    for convention in ("stable", "fixed_point"):
        w = S.weight_of_index_set({1, -2, 3, 4}, convention)
        assert S.index_set_of_weight(w, convention) == frozenset({1, -2, 3, 4})
    # negating the index set flips every symbol of the weight
    for iset in [{1, 2, 3}, {1, -2, 3, 4}, {-1, -2}]:
        w = S.weight_of_index_set(iset)
        negated = S.weight_of_index_set({-i for i in iset})
        assert str(negated) == str(w).translate(str.maketrans("v^", "^v"))


def test_malformed_index_sets():
    with pytest.raises(S.MalformedIndexSetError):
        S.weight_of_index_set({1, -1, 2})
    with pytest.raises(S.MalformedIndexSetError):
        S.weight_of_index_set({1, 3})
    with pytest.raises(S.MalformedIndexSetError):
        S.weight_of_index_set({0, 1})


def test_unequal_rows_refused():
    with pytest.raises(S.UnequalRowShapeError):
        S.fixed_point_table(4, "odd", shape=(5, 3))
    table = S.fixed_point_table(4, "odd", shape=(4, 4))
    assert table.k == 4


EXAMPLE_TABLE = {
    ("4: c*(1,2);c(3,4)", "4: c*(1,2);c(3,4)"): {"^^v^", "vvv^", "^^^v", "vv^v"},
    ("4: c*(1,4);c(2,3)", "4: c*(1,4);c(2,3)"): {"^^v^", "^v^^", "v^vv", "vv^v"},
    ("4: c(1,2);c*(3,4)", "4: c(1,2);c*(3,4)"): {"v^^^", "^v^^", "v^vv", "^vvv"},
    ("4: c*(1,2);c(3,4)", "4: c*(1,4);c(2,3)"): {"^^v^", "vv^v"},
    ("4: c*(1,4);c(2,3)", "4: c(1,2);c*(3,4)"): {"^v^^", "v^vv"},
    ("4: c*(1,2);c(3,4)", "4: c(1,2);c*(3,4)"): set(),
}


def test_fixed_point_table_k4_odd():
    table = S.fixed_point_table(4, "odd")
    index = {d.encode(): i for i, d in enumerate(table.diagrams)}
    assert len(index) == 3
    for (a, b), expected in EXAMPLE_TABLE.items():
        got = {str(w) for w in table.entry(index[a], index[b])}
        assert got == expected, (a, b)
        got_t = {str(w) for w in table.entry(index[b], index[a])}
        assert got_t == expected


def test_fixed_point_table_k2_even():
    table = S.fixed_point_table(2, "even")
    assert len(table.diagrams) == 1
    assert {str(w) for w in table.entry(0, 0)} == {"v^", "^v"}


@pytest.mark.parametrize("k", range(2, 8))
def test_table_diagonals_and_symmetry(k):
    for parity in ("even", "odd"):
        table = S.fixed_point_table(k, parity)
        for i, d in enumerate(table.diagrams):
            diag = {str(w) for w in table.entry(i, i)}
            assert diag == {str(w) for w in O.orientations_of_cup(d)}
            assert len(diag) == 2 ** d.n_cups
        n = len(table.diagrams)
        for i in range(n):
            for j in range(n):
                assert set(table.entry(i, j)) == set(table.entry(j, i))


@pytest.mark.parametrize("k", range(2, 8))
def test_table_empty_iff_quotient_missing(k):
    for parity in ("even", "odd"):
        table = S.fixed_point_table(k, parity)
        for i, a in enumerate(table.diagrams):
            for j, b in enumerate(table.diagrams):
                cell = table.entry(i, j)
                q = R.intersection_quotient(a, b)
                if cell:
                    assert q is not None and len(cell) == q.dimension
                else:
                    assert q is None


def test_graded_dimension_small():
    assert S.arc_algebra_graded_dimension(2).total == 4
    got = S.arc_algebra_graded_dimension(4)
    assert got.total == 40
    assert got.coefficients[0] == len(D.maximal_diagrams(4))


@pytest.mark.parametrize("k", range(2, 8))
def test_graded_dimension_identities(k):
    direct = S.arc_algebra_graded_dimension(k)
    closed = S.arc_algebra_graded_dimension_closed_form(k)
    assert direct == closed
    tables = sum(
        S.fixed_point_table(k, parity).total_count() for parity in ("even", "odd")
    )
    assert direct.total == tables
    assert direct.coefficients[0] == len(D.maximal_diagrams(k))


@pytest.mark.parametrize("k", range(2, 7))
def test_centre_matches_two_presentation_copies(k):
    ring = S.presentation_ring(k)
    even = R.centre(k, "even").graded_dims
    odd = R.centre(k, "odd").graded_dims
    for d in range(k + 1):
        assert even.get(d, 0) + odd.get(d, 0) == 2 * ring.graded_dims[d]


def test_filtration_census_values():
    assert S.filtration_census(3) == [(0, 2), (1, 6)]
    assert sum(c for _, c in S.filtration_census(4)) == 16


@pytest.mark.parametrize("k", range(1, 9))
def test_filtration_census_closed_form(k):
    for j, count in S.filtration_census(k):
        if 2 * j == k:
            assert count == math.comb(k, j)
        else:
            assert count == 2 * math.comb(k, j)


@pytest.mark.parametrize("k", range(1, 21))
def test_binomial_identities(k):
    # census identity
    middle = math.comb(k, k // 2) if k % 2 == 0 else 0
    total = middle + 2 * sum(math.comb(k, j) for j in range(0, (k - 1) // 2 + 1))
    assert total == 2 ** k
    # two-row character dimension identity
    chars = sum(math.comb(k, l) for l in range(0, (k - 1) // 2 + 1))
    if k % 2 == 0:
        chars += math.comb(k, k // 2) // 2
    assert chars == 2 ** (k - 1)
