from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cellci.enumeration import enumerate_chessboards, enumerate_connected
from cellci.grid import CellCollection, Point
from cellci.ideal import Monomial, generators
from cellci.order import (
    EQUAL,
    GREATER,
    LESS,
    MonomialOrder,
    VertexOrder,
    compare_monomials,
    leading_term,
    lex,
    rowmajor_vertex_order,
    snake_vertex_order,
)

from shapes import DOMINO, SINGLE, cells


def snake_less(p, q):
    """The three clauses, written out literally."""
    (i, j), (k, l) = p, q
    return j < l or (j == l and j % 2 == 0 and i < k) or (j == l and j % 2 == 1 and i > k)


def test_single_cell_snake_order():
    assert snake_vertex_order(SINGLE).vertices == (Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1))


def test_lower_row_first():
    C = cells((0, 1), (4, 0))
    order = snake_vertex_order(C)
    assert order.less(Point(5, 0), Point(0, 2))


def test_odd_row_reversed():
    C = cells((0, 0), (2, 0))
    assert snake_vertex_order(C).less(Point(3, 1), Point(0, 1))


def test_empty_collection():
    with pytest.raises(ValueError):
        snake_vertex_order(CellCollection())


def test_snake_is_the_three_clause_order():
    for form in enumerate_connected(4):
        order = snake_vertex_order(CellCollection(form))
        for p, q in combinations(order.vertices, 2):
            assert order.less(p, q) == snake_less(p, q)
            assert order.less(p, q) != order.less(q, p)


def test_parity_read_after_translation():
    C = cells((0, 0), (1, 1))
    for di, dj in [(0, 1), (3, 0), (-2, 5)]:
        moved = snake_vertex_order(C.shift(di, dj))
        assert moved.vertices == tuple(p.shift(di, dj) for p in snake_vertex_order(C).vertices)
        assert moved.offset == (-di, -dj)


def test_rowmajor():
    assert rowmajor_vertex_order(SINGLE).vertices == (Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1))


def test_vertex_order_rejects_repeats():
    with pytest.raises(ValueError):
        VertexOrder((Point(0, 0), Point(0, 0)))


class TestCompare:
    order = lex(snake_vertex_order(SINGLE))

    def test_equal(self):
        m = Monomial.of(Point(0, 0), Point(1, 1))
        assert compare_monomials(self.order, m, m) == EQUAL

    def test_antidiagonal_wins(self):
        anti = Monomial.of(Point(0, 1), Point(1, 0))
        diag = Monomial.of(Point(0, 0), Point(1, 1))
        assert compare_monomials(self.order, anti, diag) == GREATER

    def test_higher_variable_wins(self):
        u = Monomial.of(Point(0, 0), Point(0, 0))
        v = Monomial.of(Point(0, 0), Point(1, 0))
        assert compare_monomials(self.order, u, v) == LESS


def test_leading_term_single_cell():
    order = lex(snake_vertex_order(SINGLE))
    (f,) = generators(SINGLE).generators
    lt, plus_leads = leading_term(order, f)
    assert lt == Monomial.of(Point(0, 1), Point(1, 0))
    assert not plus_leads


def test_leading_term_when_plus_holds_largest_variable():
    order = lex(rowmajor_vertex_order(SINGLE))  # (1,1) is the largest variable
    (f,) = generators(SINGLE).generators
    assert leading_term(order, f) == (f.plus, True)


def test_domino_box_minor_follows_compare():
    order = lex(snake_vertex_order(DOMINO))
    for f in generators(DOMINO).generators:
        lt, plus = leading_term(order, f)
        assert compare_monomials(order, f.plus, f.minus) == (GREATER if plus else LESS)


VARS = tuple(f"v{k}" for k in range(4))
exps = st.lists(st.integers(0, 3), min_size=4, max_size=4).map(lambda e: Monomial(zip(VARS, e)))


@pytest.mark.parametrize("kind", ["lex", "grevlex"])
@given(u=exps, v=exps, w=exps)
@settings(max_examples=150, deadline=None)
def test_monomial_order_axioms(kind, u, v, w):
    order = MonomialOrder(VertexOrder(VARS), kind)
    c = compare_monomials(order, u, v)
    assert c == -compare_monomials(order, v, u)
    assert (c == EQUAL) == (u == v)
    assert compare_monomials(order, u * w, v * w) == c
    assert compare_monomials(order, Monomial(), u) in (LESS, EQUAL)
    if c == LESS and compare_monomials(order, v, w) == LESS:
        assert compare_monomials(order, u, w) == LESS


def _coprime_leads(C, base):
    order = lex(base)
    leads = [leading_term(order, g)[0] for g in generators(C).generators]
    return all(a.gcd(b).is_one() for a, b in combinations(leads, 2))


def test_chessboard_leading_terms_coprime():
    for form in enumerate_chessboards(4, (5, 5)):
        C = CellCollection(form)
        assert _coprime_leads(C, snake_vertex_order(C)), form


def test_coprimality_survives_parity_flip():
    # snake order with row parity read in the untranslated frame, shifted by one row
    for form in enumerate_chessboards(4, (5, 5)):
        C = CellCollection(form).shift(0, 1)
        base = VertexOrder(tuple(sorted(C.vertices, key=lambda p: (p.j, p.i if (p.j + 1) % 2 == 0 else -p.i))))
        assert _coprime_leads(C, base), form
