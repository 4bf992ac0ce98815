import pytest

from cellci.enumeration import enumerate_connected
from cellci.grid import CellCollection, Interval, Point, is_chessboard, weakly_connected_components
from cellci.ideal import (
    Binomial,
    IdealPresentation,
    Monomial,
    adjacent_minors,
    coefficient_matrix,
    coefficient_rank,
    generators,
    inner_minor,
    mu,
)

from oracles import sympy_rank
from shapes import BLOCK, DIAGONAL, DOMINO, L_TROMINO, SINGLE


def x(i, j):
    return Point(i, j)


class TestMonomial:
    def test_zero_exponents_dropped(self):
        m = Monomial({x(0, 0): 2, x(1, 0): 0})
        assert m.support == {x(0, 0)}
        assert m.degree == 2

    def test_arithmetic(self):
        a = Monomial.of(x(0, 0), x(1, 1))
        b = Monomial.of(x(1, 1), x(2, 2))
        assert a.gcd(b) == Monomial.of(x(1, 1))
        assert a.lcm(b) == Monomial.of(x(0, 0), x(1, 1), x(2, 2))
        assert (a * b)[x(1, 1)] == 2
        assert Monomial.of(x(0, 0)).divides(a)
        assert not b.divides(a)

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            Monomial({x(0, 0): -1})


class TestInnerMinor:
    @pytest.mark.parametrize("b, c, d", [
        ((1, 1), (0, 1), (1, 0)),
        ((2, 1), (0, 1), (2, 0)),
        ((2, 2), (0, 2), (2, 0)),
    ])
    def test_examples(self, b, c, d):
        f = inner_minor(Interval((0, 0), b))
        assert f.plus == Monomial.of(x(0, 0), x(*b))
        assert f.minus == Monomial.of(x(*c), x(*d))

    def test_not_proper(self):
        with pytest.raises(ValueError):
            inner_minor(Interval((0, 0), (0, 1)))

    def test_str(self):
        assert str(inner_minor(Interval((0, 0), (1, 1)))) == "x_0_0*x_1_1 - x_0_1*x_1_0"


def test_binomial_rejects_zero():
    with pytest.raises(ValueError):
        Binomial(Monomial.of(x(0, 0)), Monomial.of(x(0, 0)))


def test_presentation_checks_ring():
    f = inner_minor(Interval((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        IdealPresentation((f,), frozenset({x(0, 0)}))


@pytest.mark.parametrize("C, n", [(SINGLE, 1), (DOMINO, 3), (DIAGONAL, 2)])
def test_generator_counts(C, n):
    assert len(generators(C)) == n


def test_adjacent_minors():
    assert adjacent_minors(SINGLE).generators == generators(SINGLE).generators
    adj = set(adjacent_minors(DOMINO).generators)
    assert len(adj) == 2 and adj < set(generators(DOMINO).generators)


def test_adjacent_equals_generators_iff_chessboard():
    for form in enumerate_connected(5):
        C = CellCollection(form)
        gens, adj = set(generators(C).generators), set(adjacent_minors(C).generators)
        assert adj <= gens
        assert (adj == gens) == is_chessboard(C)


@pytest.mark.parametrize("C, n", [(SINGLE, 1), (DOMINO, 3), (L_TROMINO, 5), (BLOCK, 9)])
def test_mu_examples(C, n):
    assert mu(C) == n
    assert coefficient_rank(generators(C)) == n
    assert sympy_rank(coefficient_matrix(generators(C))) == n


def test_generator_shape_invariants():
    for form in enumerate_connected(4):
        C = CellCollection(form)
        gens = generators(C).generators
        plus = [g.plus for g in gens]
        minus = {g.minus for g in gens}
        assert len(set(plus)) == len(plus)
        assert not (set(plus) & minus)
        for g in gens:
            assert g.plus.degree == g.minus.degree == 2
            assert not (g.plus.support & g.minus.support)


def test_component_additivity():
    C = CellCollection.from_corners([(0, 0), (1, 0), (5, 5), (6, 6), (3, 0)])
    parts = weakly_connected_components(C)
    assert len(parts) == 3
    union = [g for P in parts for g in generators(P).generators]
    assert sorted(map(str, union)) == sorted(map(str, generators(C).generators))
    assert len(union) == len(set(union))
