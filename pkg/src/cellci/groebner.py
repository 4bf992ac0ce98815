"""Exact Buchberger engine over Q, initial ideals, and heights of monomial ideals.

Polynomials are sparse maps from dense exponent tuples to rational
coefficients. The tuple layout is fixed by a ``MonomialOrder``: position 0 is
the largest variable. Coefficients stay Python ints while divisions are exact
(always the case for pure-difference binomials) and become Fractions otherwise.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Sequence

from cellci.grid import CellCollection
from cellci.ideal import Binomial, IdealPresentation, Monomial, format_monomial, generators
from cellci.order import MonomialOrder, lex, vertex_order_for

DEFAULT_BUDGET = 10**6


class BudgetExhausted(RuntimeError):
    """The S-pair budget ran out before the Gröbner basis was complete."""

    def __init__(self, processed: int, budget: int):
        super().__init__(f"budget exhausted: {processed} S-pairs processed (cap {budget})")
        self.processed = processed
        self.budget = budget


def _div(a: Rational, b: Rational) -> Rational:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable = ()):
        src = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for m, c in src:
            m = tuple(m)
            acc[m] = acc.get(m, 0) + c
        self.terms = {m: c for m, c in acc.items() if c != 0}

    @classmethod
    def from_binomial(cls, f: Binomial, order: MonomialOrder) -> Polynomial:
        return cls([(order.encode(f.plus), 1), (order.encode(f.minus), -1)])

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self, order: MonomialOrder) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Rational:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> Polynomial:
        lc = self.leading_coefficient(order)
        return Polynomial({m: _div(c, lc) for m, c in self.terms.items()})

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[tuple[int, ...], Rational]]:
        """Terms in decreasing order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monomials(self, order: MonomialOrder) -> list[Monomial]:
        return [order.decode(m) for m, _ in self.sorted_terms(order)]

    def scaled(self, c: Rational) -> Polynomial:
        return Polynomial({m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self.terms!r})"

    def format(self, order: MonomialOrder) -> str:
        """One-line rendering, terms in decreasing order."""
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            mono = format_monomial(order.decode(m))
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mag == 1 else (str(mag) if mono == "1" else f"{mag}*{mono}")
            if k == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Sequence[int], b: Sequence[int]) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _sub_tuple(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """lcm/LT(f) * f - lcm/LT(g) * g, each side scaled to a monic leading term."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    cf, cg = f.terms[lf], g.terms[lg]
    L = _lcm(lf, lg)
    qf, qg = _sub_tuple(L, lf), _sub_tuple(L, lg)
    acc: dict = {}
    for m, c in f.terms.items():
        k = tuple(x + y for x, y in zip(m, qf))
        acc[k] = acc.get(k, 0) + _div(c, cf)
    for m, c in g.terms.items():
        k = tuple(x + y for x, y in zip(m, qg))
        acc[k] = acc.get(k, 0) - _div(c, cg)
    return Polynomial(acc)


def _reduce(terms: dict, basis: list[tuple[tuple, Rational, dict]], key) -> dict:
    """Full reduction of ``terms`` (consumed) by (lead, lead_coeff, terms) triples."""
    rest: dict = {}
    while terms:
        m = max(terms, key=key)
        c = terms[m]
        for lm, lc, gterms in basis:
            if _divides(lm, m):
                q = _sub_tuple(m, lm)
                factor = _div(c, lc)
                for gm, gc in gterms.items():
                    k = tuple(x + y for x, y in zip(gm, q))
                    v = terms.get(k, 0) - factor * gc
                    if v:
                        terms[k] = v
                    else:
                        terms.pop(k, None)
                break
        else:
            rest[m] = c
            del terms[m]
    return rest


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of f on full division by G; divisors are tried in the order given."""
    basis = [(g.leading_monomial(order), g.leading_coefficient(order), g.terms) for g in G if not g.is_zero()]
    return Polynomial(_reduce(dict(f.terms), basis, order.key))


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool
    spairs_processed: int = 0
    spairs_skipped: int = 0
    budget: int = DEFAULT_BUDGET

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def dump(self) -> str:
        """One polynomial per line, terms in decreasing order."""
        return "".join(g.format(self.order) + "\n" for g in self.elements)

    def __len__(self):
        return len(self.elements)


def _as_polynomials(ideal, order: MonomialOrder) -> list[Polynomial]:
    if isinstance(ideal, IdealPresentation):
        ideal = ideal.generators
    out = []
    for f in ideal:
        p = Polynomial.from_binomial(f, order) if isinstance(f, Binomial) else f
        if not p.is_zero():
            out.append(p)
    return out


def buchberger(ideal, order: MonomialOrder, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``ideal`` under ``order``.

    ``ideal`` is an IdealPresentation or a sequence of Binomials/Polynomials.
    Pairs are taken smallest lcm first (ties by index). Pairs with coprime
    leading terms, and pairs covered by the chain criterion, are skipped.
    Raises BudgetExhausted once more than ``budget`` S-pairs have been reduced.
    """
    key = order.key
    G: list[Polynomial] = [p.monic(order) for p in _as_polynomials(ideal, order)]
    leads = [g.leading_monomial(order) for g in G]
    heap: list = []
    pending: set = set()

    def push(i, j):
        L = _lcm(leads[i], leads[j])
        heapq.heappush(heap, (key(L), i, j, L))
        pending.add((i, j))

    for i, j in combinations(range(len(G)), 2):
        push(i, j)

    processed = skipped = 0
    while heap:
        _, i, j, L = heapq.heappop(heap)
        pending.discard((i, j))
        if _coprime(leads[i], leads[j]):
            skipped += 1
            continue
        if any(
            k != i and k != j
            and _divides(leads[k], L)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            skipped += 1
            continue
        processed += 1
        if processed > budget:
            raise BudgetExhausted(processed - 1, budget)
        s = s_polynomial(G[i], G[j], order)
        basis = [(leads[k], G[k].terms[leads[k]], G[k].terms) for k in range(len(G))]
        r = _reduce(s.terms, basis, key)
        if r:
            h = Polynomial(r).monic(order)
            G.append(h)
            leads.append(h.leading_monomial(order))
            n = len(G) - 1
            for k in range(n):
                push(k, n)

    return GroebnerBasis(
        tuple(_interreduce(G, order)), order, True, processed, skipped, budget
    )


def _interreduce(G: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    key = order.key
    items = sorted(((g.leading_monomial(order), g) for g in G), key=lambda t: key(t[0]))
    minimal: list[tuple[tuple, Polynomial]] = []
    for lm, g in items:
        if not any(_divides(other, lm) for other, _ in minimal):
            minimal.append((lm, g))
    out = []
    for k, (lm, g) in enumerate(minimal):
        others = [(m, h.terms[m], h.terms) for t, (m, h) in enumerate(minimal) if t != k]
        r = _reduce(dict(g.terms), others, key)
        out.append(Polynomial(r).monic(order))
    out.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return out


def audit(G: GroebnerBasis) -> bool:
    """Post-hoc check: every S-polynomial of the basis reduces to zero, and the reduced-basis conditions hold."""
    order = G.order
    elems = list(G.elements)
    for f, g in combinations(elems, 2):
        if not normal_form(s_polynomial(f, g, order), elems, order).is_zero():
            return False
    if G.reduced:
        leads = [g.leading_monomial(order) for g in elems]
        for k, g in enumerate(elems):
            if g.terms[leads[k]] != 1:
                return False
            for t, lm in enumerate(leads):
                if t != k and any(_divides(lm, m) for m in g.terms):
                    return False
    return True


def same_basis_up_to_scaling(G: GroebnerBasis, polys: Iterable) -> bool:
    """Whether G and ``polys`` agree as sets once both are made monic."""
    order = G.order
    target = {p.monic(order) for p in _as_polynomials(list(polys), order)}
    return set(G.elements) == target and len(target) == len(G.elements)


class MonomialIdeal:
    """A monomial ideal kept as its antichain of minimal generators."""

    def __init__(self, gens: Iterable[Monomial] = ()):
        gens = sorted(set(gens), key=lambda m: (m.degree, m.items()))
        minimal: list[Monomial] = []
        for m in gens:
            if not any(g.divides(m) for g in minimal):
                minimal.append(m)
        self.generators: tuple[Monomial, ...] = tuple(minimal)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and set(self.generators) == set(other.generators)

    def __repr__(self):
        return f"MonomialIdeal({[str(m) for m in self.generators]})"


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.order.decode(m) for m in G.leading_monomials())


def is_monomial_ci(M: MonomialIdeal) -> bool:
    """Minimal generators pairwise coprime."""
    seen: set = set()
    for m in M.generators:
        s = m.support
        if seen & s:
            return False
        seen |= s
    return True


def min_hitting_set(sets: Iterable[Iterable]) -> frozenset:
    """A smallest set meeting every given set (exact branch and bound)."""
    family = [frozenset(s) for s in sets]
    if any(not s for s in family):
        raise ValueError("cannot hit an empty set")
    family = sorted(set(family), key=len)
    family = [s for k, s in enumerate(family) if not any(t < s for t in family[:k])]

    best = _greedy_hitting_set(family)

    def lower_bound(rest):
        # pairwise disjoint sets each need their own element
        used: set = set()
        count = 0
        for s in rest:
            if not (s & used):
                used |= s
                count += 1
        return count

    def search(chosen: frozenset, rest: list):
        nonlocal best
        if not rest:
            if len(chosen) < len(best):
                best = chosen
            return
        if len(chosen) + lower_bound(rest) >= len(best):
            return
        pivot = min(rest, key=len)
        for v in sorted(pivot, key=lambda v: -sum(v in s for s in rest)):
            search(chosen | {v}, [s for s in rest if v not in s])

    search(frozenset(), family)
    return best


def _greedy_hitting_set(family: list[frozenset]) -> frozenset:
    rest = list(family)
    chosen: set = set()
    while rest:
        counts: dict = {}
        for s in rest:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        v = max(sorted(counts, key=repr), key=counts.get)
        chosen.add(v)
        rest = [s for s in rest if v not in s]
    return frozenset(chosen)


def monomial_ideal_height(M: MonomialIdeal) -> int:
    """Height of a monomial ideal: the fewest variables meeting every generator's support."""
    if not M.generators:
        return 0
    return len(min_hitting_set(m.support for m in M.generators))


def groebner_for(C: CellCollection, order_name: str = "snake", budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    if not C.cells:
        return GroebnerBasis((), None, True, 0, 0, budget)
    order = lex(vertex_order_for(C, order_name))
    return buchberger(generators(C), order, budget)


def height(C: CellCollection, order_name: str = "snake", budget: int = DEFAULT_BUDGET) -> int:
    """Height of the inner 2-minor ideal, read off the initial ideal of a Gröbner basis."""
    if not C.cells:
        return 0
    return monomial_ideal_height(initial_ideal(groebner_for(C, order_name, budget)))
