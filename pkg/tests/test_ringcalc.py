import itertools
from fractions import Fraction

import pytest

from cupcalc import diagrams as D
from cupcalc import orientation as O
from cupcalc import ringcalc as R


def elem(k, terms):
    return R.SquarefreeElement(k, {frozenset(m): Fraction(c) for m, c in terms.items()})


def test_squarefree_multiplication():
    x1 = R.SquarefreeElement.variable(3, 1)
    x2 = R.SquarefreeElement.variable(3, 2)
    assert x1 * x2 == elem(3, {(1, 2): 1})
    assert (x1 * x1).is_zero()
    mixed = (x1 + x2) * (x1 - x2.scale(2))
    assert mixed == elem(3, {(1, 2): -1})
    assert x1.homogeneous_part(1) == x1
    assert x1.homogeneous_part(0).is_zero()


def test_component_quotient_rules():
    q = R.component_quotient(D.parse_dsl("2: c(1,2)"))
    assert q.rules == {1: (-1, 2)}
    assert q.basis() == [frozenset(), frozenset({2})]
    assert R.component_quotient(D.parse_dsl("2: c*(1,2)")).rules == {1: (1, 2)}
    q3 = R.component_quotient(D.parse_dsl("3: c(1,2);r(3)"))
    assert q3.rules[3] is None
    assert q3.dimension == 2


def test_reduce_monomial_signs():
    q = R.component_quotient(D.parse_dsl("4: c(1,2);c*(3,4)"))
    assert q.reduce_monomial(frozenset({1})) == (-1, frozenset({2}))
    assert q.reduce_monomial(frozenset({1, 3})) == (-1, frozenset({2, 4}))
    assert q.reduce_monomial(frozenset({1, 2})) is None  # x2 squared


@pytest.mark.parametrize("k", range(2, 7))
def test_quotient_dimensions(k):
    for parity in ("even", "odd"):
        nodes = D.maximal_diagrams(k, parity)
        for a in nodes:
            assert R.component_quotient(a).dimension == 2 ** a.n_cups
        for a, b in itertools.combinations(nodes, 2):
            q = R.intersection_quotient(a, b)
            oriented = O.orient_circle_diagram(a.star(), b)
            if not oriented:
                assert q is None
            else:
                circles = len(O.decompose(a.star(), b).circles)
                assert q.dimension == 2 ** circles
                assert q.dimension == len(oriented)


def test_intersection_quotient_none_for_disjoint():
    a = D.parse_dsl("4: c*(1,2);c(3,4)")
    b = D.parse_dsl("4: c(1,2);c*(3,4)")
    assert R.intersection_quotient(a, b) is None
    with pytest.raises(R.NotOrientableError):
        R.restriction_maps(a, b)


def test_self_intersection_matches_component_quotient():
    for k in range(2, 6):
        for a in D.maximal_diagrams(k):
            qa = R.component_quotient(a)
            qaa = R.intersection_quotient(a, a)
            assert qa.dimension == qaa.dimension
            assert qa.kept == qaa.kept
            assert qa.rules == qaa.rules


@pytest.mark.parametrize("k", range(2, 7))
def test_single_diagram_ideal_dies_in_intersection(k):
    for parity in ("even", "odd"):
        nodes = D.maximal_diagrams(k, parity)
        for a, b in itertools.combinations(nodes, 2):
            target = R.intersection_quotient(a, b)
            if target is None:
                continue
            for d in (a, b):
                for cup in d.cups:
                    gen = R.SquarefreeElement.variable(k, cup.left) + (
                        R.SquarefreeElement.variable(k, cup.right).scale(
                            -1 if cup.dotted else 1
                        )
                    )
                    assert target.reduce(gen).is_zero()
                for ray in d.rays:
                    assert target.reduce(
                        R.SquarefreeElement.variable(k, ray.at)
                    ).is_zero()


def test_restriction_basics():
    a = D.parse_dsl("2: c(1,2)")
    ma, mb = R.restriction_maps(a, a)
    assert ma.matrix == [[1, 0], [0, 1]]
    a1 = D.parse_dsl("4: c*(1,2);c(3,4)")
    a2 = D.parse_dsl("4: c*(1,4);c(2,3)")
    ma, mb = R.restriction_maps(a1, a2)
    # units map to units
    assert ma.column(0) == [Fraction(1), Fraction(0)]
    assert mb.column(0) == [Fraction(1), Fraction(0)]


@pytest.mark.parametrize("k", range(2, 7))
def test_restrictions_surjective_and_graded(k):
    for parity in ("even", "odd"):
        nodes = D.maximal_diagrams(k, parity)
        for a, b in itertools.combinations(nodes, 2):
            if R.intersection_quotient(a, b) is None:
                continue
            for m in R.restriction_maps(a, b):
                assert m.is_surjective()
                for j, mono in enumerate(m.domain):
                    for i, target_mono in enumerate(m.codomain):
                        if m.matrix[i][j] and len(target_mono) != len(mono):
                            pytest.fail("restriction map not degree preserving")


def test_transport_sign_against_independent_path():
    """eps(i, mx) from the reduction rules equals a sign recomputed by
    explicitly walking a path in the glued diagram."""
    for k in range(2, 6):
        for parity in ("even", "odd"):
            for a, b in itertools.product(D.maximal_diagrams(k, parity), repeat=2):
                dec = O.decompose(a.star(), b)
                if not all(c.parity_consistent for c in dec.classes):
                    continue
                edges = {}
                for half in (a, b):
                    for cup in half.cups:
                        edges.setdefault(cup.left, []).append((cup.right, cup.dotted))
                        edges.setdefault(cup.right, []).append((cup.left, cup.dotted))
                for cl in dec.classes:
                    for start in cl.vertices:
                        # breadth-first walk, visiting neighbours in a fixed
                        # but different order from the library's stack walk
                        seen = {start: 1}
                        frontier = [start]
                        while frontier:
                            nxt = []
                            for u in sorted(frontier):
                                for v, dotted in sorted(edges.get(u, [])):
                                    sign = seen[u] * (1 if dotted else -1)
                                    if v not in seen:
                                        seen[v] = sign
                                        nxt.append(v)
                                    else:
                                        assert seen[v] == sign
                            frontier = nxt
                        assert dec.epsilon(start, cl.mx) == seen[cl.mx]


# --- centre -----------------------------------------------------------------


@pytest.mark.parametrize("k", range(2, 8))
def test_centre_total_dimension(k):
    dims = [R.centre(k, parity).dimension for parity in ("even", "odd")]
    assert sum(dims) == 2 ** k
    assert dims[0] == dims[1]


def test_centre_k2_trivial():
    basis = R.centre(2, "even")
    assert basis.graded_dims == {0: 1, 1: 1}
    assert basis.dimension == 2


def test_centre_echelon_basis_spans_kernel():
    basis = R.centre(4, "even")
    for degree, vectors in basis.basis.items():
        assert len(vectors) == basis.graded_dims[degree]
        for vec in vectors:
            assert all(len(mono) == degree for (_, mono) in vec)


def test_centre_order_independence():
    for k in (3, 4, 5):
        for parity in ("even", "odd"):
            lex = R.centre(k, parity, tie_break="lex")
            rev = R.centre(k, parity, tie_break="revlex")
            assert lex.graded_dims == rev.graded_dims


# --- dictionary and transported maps ----------------------------------------


def test_dictionary_examples():
    a = D.parse_dsl("4: c*(1,2);c(3,4)")
    b = D.parse_dsl("4: c*(1,4);c(2,3)")
    bd = R.diagram_basis_dictionary(a, b)
    monos = [sorted(m) for m, _ in bd.entries]
    assert monos == [[], [4]]
    empty = bd.orientation_of(frozenset())
    assert all(cls == "anticlockwise" for _, cls in empty.circle_classes)
    full = bd.orientation_of(frozenset({4}))
    assert all(cls == "clockwise" for _, cls in full.circle_classes)
    with pytest.raises(R.NotOrientableError):
        R.diagram_basis_dictionary(a, D.parse_dsl("4: c(1,2);c*(3,4)"))


@pytest.mark.parametrize("k", range(2, 6))
def test_dictionary_degrees(k):
    for parity in ("even", "odd"):
        for a, b in itertools.product(D.maximal_diagrams(k, parity), repeat=2):
            if not O.is_orientable(a.star(), b):
                continue
            bd = R.diagram_basis_dictionary(a, b)
            base = O.min_degree_element(a, b)[1]
            for mono, oriented in bd.entries:
                assert oriented.degree == base + 2 * len(mono)


def test_gamma_unit_law_and_identity():
    a = D.parse_dsl("4: c*(1,2);c(3,4)")
    b = D.parse_dsl("4: c*(1,4);c(2,3)")
    ga, gb = R.gamma_maps(a, b)
    ida = O.min_degree_element(a, a)[0].weight
    one_ab = O.min_degree_element(a, b)[0].weight
    assert ga.mapping[ida] == (1, one_ab)
    idb = O.min_degree_element(b, b)[0].weight
    assert gb.mapping[idb] == (1, one_ab)
    # a = b transports to the identity
    gaa, _ = R.gamma_maps(a, a)
    assert all(v == (1, w) for w, v in gaa.mapping.items())


@pytest.mark.parametrize("k", range(2, 6))
def test_gamma_degree_shift(k):
    for parity in ("even", "odd"):
        nodes = D.maximal_diagrams(k, parity)
        for a, b in itertools.combinations(nodes, 2):
            if not O.is_orientable(a.star(), b):
                continue
            ga, gb = R.gamma_maps(a, b)
            shift = O.min_degree_element(a, b)[1]
            assert ga.degree_shift == shift
            by_weight = {
                o.weight: o.degree
                for o in O.orient_circle_diagram(a.star(), b)
            }
            for g, src in ((ga, a), (gb, b)):
                degrees = {
                    o.weight: o.degree
                    for o in O.orient_circle_diagram(src.star(), src)
                }
                for w, image in g.mapping.items():
                    if image is not None:
                        sign, target = image
                        assert sign in (1, -1)
                        assert by_weight[target] == degrees[w] + shift
