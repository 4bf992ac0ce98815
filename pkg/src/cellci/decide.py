"""Complete-intersection decisions for inner 2-minor ideals, with certificates.

The combinatorial verdict (chessboard or not) is authoritative. The algebraic
pipeline, mu from the inner intervals and the height from a Gröbner
degeneration, is an independent check of it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from cellci.enumeration import CanonicalCollection, enumerate_connected, enumerate_disconnected_pairs
from cellci.grid import Cell, CellCollection, Point, edge_sharing_pairs, is_chessboard, weakly_connected_components
from cellci.groebner import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    buchberger,
    initial_ideal,
    is_monomial_ci,
    monomial_ideal_height,
)
from cellci.ideal import Monomial, format_monomial, generators, mu
from cellci.lattice import lattice_basis, lattice_rank
from cellci.order import leading_term, lex, snake_vertex_order, vertex_order_for


class TheoremViolation(AssertionError):
    """The algebraic and combinatorial sides disagreed on some collection."""

    def __init__(self, message: str, collection: CellCollection | None = None):
        if collection is not None:
            message = f"{message}; collection: {collection.corners()}"
        super().__init__(message)
        self.collection = collection


@dataclass(frozen=True)
class CiCertificate:
    """Evidence for the complete-intersection verdict.

    A positive certificate carries the snake vertex order and one leading term
    per generator, pairwise coprime. A negative one carries two cells sharing
    an edge together with mu and the height bound |C|.
    """

    verdict: bool
    branch: str  # "chessboard-positive" | "edge-negative"
    vertex_order: tuple[Point, ...] = ()
    leading_terms: tuple[Monomial, ...] = ()
    witness: tuple[Cell, Cell] | None = None
    mu: int = 0
    height_bound: int = 0
    note: str = ""

    def check(self) -> bool:
        """Re-verify the certificate's own invariants."""
        if self.branch == "chessboard-positive":
            seen: set = set()
            for m in self.leading_terms:
                if seen & m.support:
                    return False
                seen |= m.support
            return self.verdict and len(self.leading_terms) == self.mu
        A, B = self.witness
        return (
            not self.verdict
            and len(A.vertices & B.vertices) == 2
            and self.mu > self.height_bound
        )

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.verdict, "branch": self.branch}
        if self.branch == "chessboard-positive":
            out["vertex_order"] = [f"{p.i} {p.j}" for p in self.vertex_order]
            out["leading_terms"] = [format_monomial(m) for m in self.leading_terms]
        else:
            out["witness"] = [list(c.lower_left) for c in self.witness]
            out["mu"] = self.mu
            out["height_bound"] = self.height_bound
        if self.note:
            out["note"] = self.note
        return out


def is_complete_intersection(C: CellCollection) -> CiCertificate:
    """Decide whether I_C is a complete intersection, i.e. whether C is a chessboard."""
    if not C.cells:
        return CiCertificate(True, "chessboard-positive", note="empty collection: mu = height = 0")
    if is_chessboard(C):
        order = snake_vertex_order(C)
        mono_order = lex(order)
        leads = tuple(leading_term(mono_order, g)[0] for g in generators(C).generators)
        cert = CiCertificate(True, "chessboard-positive", order.vertices, leads, mu=len(leads))
        if not cert.check():
            raise TheoremViolation("snake-order leading terms are not pairwise coprime", C)
        return cert
    witness = edge_sharing_pairs(C)[0]
    return CiCertificate(False, "edge-negative", witness=witness, mu=mu(C), height_bound=C.rank)


@dataclass
class AnalysisReport:
    rank: int
    vertices: int
    mu: int
    height: int | None
    lattice_rank: int
    is_chessboard: bool
    is_ci: bool
    certificate: CiCertificate
    status: str = "verified"  # "verified" | "unverified" | "violation"
    initial_ideal_ci: bool | None = None
    engine: dict[str, Any] = field(default_factory=dict)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.status != "violation"

    @property
    def height_equals_rank(self) -> bool | None:
        return None if self.height is None else self.height == self.rank

    def to_dict(self, include_timings: bool = False) -> dict[str, Any]:
        out = {
            "rank": self.rank,
            "vertices": self.vertices,
            "mu": self.mu,
            "height": self.height,
            "lattice_rank": self.lattice_rank,
            "is_chessboard": self.is_chessboard,
            "is_ci": self.is_ci,
            "status": self.status,
            "initial_ideal_ci": self.initial_ideal_ci,
            "height_equals_rank": self.height_equals_rank,
            "certificate": self.certificate.to_dict(),
            "engine": dict(self.engine),
        }
        if include_timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out


def verify_algebraically(C: CellCollection, budget: int = DEFAULT_BUDGET, order: str = "snake") -> AnalysisReport:
    """Compute mu and the height independently and compare (mu == height) with the chessboard test.

    On budget exhaustion the report is marked "unverified" and ``height`` is None.
    """
    timings = {}
    t0 = time.perf_counter()
    cert = is_complete_intersection(C)
    chess = is_chessboard(C)
    timings["decide"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    m = mu(C)
    timings["mu"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    lrank = lattice_rank(lattice_basis(C))
    timings["lattice"] = time.perf_counter() - t0

    engine: dict[str, Any] = {"order": f"lex({order})", "budget": budget, "spairs_processed": 0}
    if C.cells:
        engine["offset"] = list(C.canonical_offset())
    ht = None
    in_ci = None
    status = "verified"
    t0 = time.perf_counter()
    if not C.cells:
        ht, in_ci = 0, True
    else:
        try:
            G = buchberger(generators(C), lex(vertex_order_for(C, order)), budget)
        except BudgetExhausted as exc:
            status = "unverified"
            engine["spairs_processed"] = exc.processed
        else:
            engine["spairs_processed"] = G.spairs_processed
            engine["basis_size"] = len(G)
            M = initial_ideal(G)
            ht = monomial_ideal_height(M)
            in_ci = is_monomial_ci(M)
    timings["groebner"] = time.perf_counter() - t0

    if ht is not None:
        ok = (m == ht) == chess and ht <= C.rank and lrank == C.rank
        if order == "snake":
            ok = ok and in_ci == chess
        if not ok:
            status = "violation"

    return AnalysisReport(
        rank=C.rank,
        vertices=len(C.vertices),
        mu=m,
        height=ht,
        lattice_rank=lrank,
        is_chessboard=chess,
        is_ci=cert.verdict,
        certificate=cert,
        status=status,
        initial_ideal_ci=in_ci,
        engine=engine,
        timings=timings,
    )


@dataclass
class TheoremSummary:
    counts: dict[int, dict[str, int]]
    instances: int
    violations: int
    conjecture_deviations: list[CanonicalCollection]
    reports: list[tuple[CanonicalCollection, AnalysisReport]] = field(repr=False, default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "instances": self.instances,
            "violations": self.violations,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "conjecture_deviations": [[list(p) for p in f] for f in self.conjecture_deviations],
        }


def _analyse(form: CanonicalCollection) -> AnalysisReport:
    return verify_algebraically(CellCollection(form))


def _fits(form: CanonicalCollection, box: tuple[int, int] | None) -> bool:
    if box is None:
        return True
    return max(p.i for p in form) < box[0] and max(p.j for p in form) < box[1]


def theorem_instances(max_rank: int, box: tuple[int, int] | None = None, disconnected: bool = True) -> list[CanonicalCollection]:
    """Connected collections of rank <= max_rank, then small disconnected pairs."""
    forms = [f for f in enumerate_connected(max_rank) if _fits(f, box)]
    if disconnected and max_rank >= 2:
        piece = min(2, max_rank - 1)
        forms += [f for f in enumerate_disconnected_pairs(piece) if len(f) <= max_rank and _fits(f, box)]
    return forms


def check_theorem_exhaustive(
    max_rank: int,
    box: tuple[int, int] | None = None,
    disconnected: bool = True,
    workers: int = 1,
    instances: Iterable[CanonicalCollection] | None = None,
) -> TheoremSummary:
    """Check chessboard <=> (mu == height) on every small collection.

    ``box`` (width, height) restricts to collections whose cells fit in it.
    Raises TheoremViolation on the first disagreement, in canonical instance order.
    """
    forms = list(instances) if instances is not None else theorem_instances(max_rank, box, disconnected)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_analyse, forms, chunksize=8))
    else:
        reports = [_analyse(f) for f in forms]

    counts: dict[int, dict[str, int]] = {}
    deviations = []
    for form, rep in zip(forms, reports):
        C = CellCollection(form)
        if rep.status == "unverified":
            raise TheoremViolation("Gröbner budget exhausted during exhaustive check", C)
        if rep.status == "violation":
            raise TheoremViolation(
                f"mu={rep.mu} height={rep.height} lattice_rank={rep.lattice_rank} "
                f"chessboard={rep.is_chessboard}",
                C,
            )
        row = counts.setdefault(rep.rank, {"total": 0, "ci": 0, "not_ci": 0, "height_eq_rank": 0, "disconnected": 0})
        row["total"] += 1
        row["ci" if rep.is_ci else "not_ci"] += 1
        row["height_eq_rank"] += rep.height == rep.rank
        row["disconnected"] += len(weakly_connected_components(C)) > 1
        if rep.height != rep.rank:
            deviations.append(form)
    return TheoremSummary(counts, len(forms), 0, deviations, list(zip(forms, reports)))
