"""Orientation sweeps and instance-level verification reports.

Each ``verify_*`` function checks one structural statement about the
permanental polynomials of a graph's orientations and returns an
:class:`OrientationReport`.  Verdicts describe the property on the
instance: ``holds`` (exhaustive), ``sampled-holds`` (over budget, seeded
sample) or ``refuted`` (with a replayable witness).

Sweeps visit orientation bitmasks in increasing order.  Reversing every
arc maps ``A`` to ``-A = A^T``, which leaves the permanental polynomial
unchanged, so exhaustive sweeps only need bitmasks below ``2^(m-1)``; the
first failing bitmask is always in that half, so reports are identical
either way.
"""
from __future__ import annotations

import json
import os
import random
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .formats import write_graph6
from .graph import (
    Graph,
    GraphError,
    OrientedGraph,
    bipartition,
    has_even_cycle,
    is_forest,
)
from .poly import Poly, char_poly, check_i_relation, matching_polynomial
from .sachs import SkewSachsTable, perm_poly_adjacency_sachs
from .spectra import multiset_equal, roots

HOLDS = "holds"
REFUTED = "refuted"
SAMPLED_HOLDS = "sampled-holds"

DEFAULT_BUDGET = 1 << 20
DEFAULT_SEED = 0
ROOT_TOL = 1e-8


class ConsistencyError(AssertionError):
    """A certified verdict contradicts the structural characterization."""

    def __init__(self, message: str, report: OrientationReport):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Witness:
    bits_a: int
    bits_b: int | None
    poly_a: Poly
    poly_b: Poly

    def to_json(self) -> dict:
        return {
            "bits_a": self.bits_a,
            "bits_b": self.bits_b,
            "poly_a": self.poly_a.to_json(),
            "poly_b": self.poly_b.to_json(),
        }


@dataclass(frozen=True)
class OrientationReport:
    graph6: str
    property: str
    verdict: str
    examined: int
    witness: Witness | None = None
    seed: int | None = None

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "property": self.property,
            "verdict": self.verdict,
            "examined": self.examined,
            "witness": None if self.witness is None else self.witness.to_json(),
            "seed": self.seed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def all_orientations(g: Graph) -> Iterator[OrientedGraph]:
    for bits in range(1 << g.m):
        yield OrientedGraph(g, bits)


def reverse_edge(og: OrientedGraph, e: int) -> OrientedGraph:
    if not 0 <= e < og.graph.m:
        raise IndexError(f"edge index {e} out of range 0..{og.graph.m - 1}")
    return OrientedGraph(og.graph, og.bits ^ (1 << e))


def toward_y_orientation(g: Graph, bip: tuple[Sequence[int], Sequence[int]]) -> OrientedGraph:
    """Direct every edge from the X side to the Y side."""
    xs, ys = set(bip[0]), set(bip[1])
    if xs & ys or xs | ys != set(range(g.n)):
        raise GraphError("(X, Y) is not a partition of the vertex set")
    bits = 0
    for e, (u, v) in enumerate(g.edges):
        if u in xs and v in ys:
            continue
        if v in xs and u in ys:
            bits |= 1 << e
        else:
            raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")
    return OrientedGraph(g, bits)


# sweep machinery ----------------------------------------------------------


def thread_count() -> int:
    raw = os.environ.get("SKEWPERM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _schedule(m: int, budget: int, seed: int, halve: bool) -> tuple[Sequence[int], bool]:
    """Bitmasks to visit and whether they certify all ``2^m`` orientations."""
    if budget < 1:
        raise ValueError(f"budget must be at least 1, got {budget}")
    total = 1 << m
    if total <= budget:
        return (range(total >> 1) if halve and m else range(total)), True
    rng = random.Random(seed)
    return [0] + [rng.getrandbits(m) for _ in range(budget - 1)], False


def _first_failure(seq: Sequence[int], ok: Callable[[int], bool], threads: int) -> int | None:
    """Smallest index ``i`` with ``not ok(seq[i])``, independent of ``threads``."""

    def scan(lo: int, hi: int) -> int | None:
        for i in range(lo, hi):
            if not ok(seq[i]):
                return i
        return None

    n = len(seq)
    if threads <= 1 or n < 2 * threads:
        return scan(0, n)
    bounds = [n * t // threads for t in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        found = list(pool.map(lambda t: scan(bounds[t], bounds[t + 1]), range(threads)))
    hits = [i for i in found if i is not None]
    return min(hits) if hits else None


@dataclass
class _Sweep:
    examined: int
    failed_at: int | None  # bitmask of the first failure
    exhaustive: bool


def _sweep(g: Graph, ok, budget: int, seed: int, threads: int | None, halve: bool) -> _Sweep:
    seq, exhaustive = _schedule(g.m, budget, seed, halve)
    idx = _first_failure(seq, ok, thread_count() if threads is None else threads)
    if idx is None:
        return _Sweep(1 << g.m if exhaustive else len(seq), None, exhaustive)
    return _Sweep(idx + 1, seq[idx], exhaustive)


def _finish(report: OrientationReport, certified: bool, expected_holds: bool) -> OrientationReport:
    if certified and (report.verdict == HOLDS) != expected_holds:
        raise ConsistencyError(
            f"{report.property} on {report.graph6!r}: verdict {report.verdict} "
            f"contradicts the structural prediction",
            report,
        )
    return report


# verifications ------------------------------------------------------------


def verify_all_orientations_same(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    threads: int | None = None,
    halve: bool = True,
) -> OrientationReport:
    table = SkewSachsTable(g)
    ref = table.poly(0)
    sw = _sweep(g, lambda b: table.poly(b) == ref, budget, seed, threads, halve)
    witness = None
    if sw.failed_at is not None:
        witness = Witness(0, sw.failed_at, ref, table.poly(sw.failed_at))
    report = _report(g, "same-poly", sw, witness, seed)
    return _finish(report, sw.exhaustive or witness is not None, not has_even_cycle(g))


def verify_matching_equality(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    threads: int | None = None,
    halve: bool = True,
) -> OrientationReport:
    table = SkewSachsTable(g)
    mu = matching_polynomial(g)
    sw = _sweep(g, lambda b: table.poly(b) == mu, budget, seed, threads, halve)
    witness = None
    if sw.failed_at is not None:
        witness = Witness(sw.failed_at, None, table.poly(sw.failed_at), mu)
    report = _report(g, "matching-eq", sw, witness, seed)
    return _finish(report, sw.exhaustive or witness is not None, not has_even_cycle(g))


def verify_bipartite_i_relation(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    threads: int | None = None,
    halve: bool = True,
) -> OrientationReport:
    """Is there an orientation with ``S_p(G^sigma) = i S_p(G)``?

    Bipartite graphs are settled by the toward-Y construction; otherwise
    orientations are swept looking for one that passes the coefficient test.
    """
    pg = perm_poly_adjacency_sachs(g)
    table = SkewSachsTable(g)
    bip = bipartition(g)
    g6 = write_graph6(g)
    if bip is not None:
        og = toward_y_orientation(g, bip)
        p = table.poly(og.bits)
        if check_i_relation(pg, p):
            report = OrientationReport(g6, "bipartite-i", HOLDS, 1)
        else:
            report = OrientationReport(g6, "bipartite-i", REFUTED, 1, Witness(og.bits, None, p, pg))
        return _finish(report, True, True)

    sw = _sweep(g, lambda b: not check_i_relation(pg, table.poly(b)), budget, seed, threads, halve)
    seed_out = None if sw.exhaustive else seed
    if sw.failed_at is not None:
        report = OrientationReport(g6, "bipartite-i", HOLDS, sw.examined, None, seed_out)
        return _finish(report, True, False)
    # none of the examined orientations passes
    report = OrientationReport(
        g6, "bipartite-i", REFUTED, sw.examined, Witness(0, None, table.poly(0), pg), seed_out
    )
    return report


def verify_forest_relation(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    threads: int | None = None,
    halve: bool = True,
    tol: float = ROOT_TOL,
) -> OrientationReport:
    """Does every orientation satisfy the i-relation (and, for forests, match the adjacency spectrum)?"""
    pg = perm_poly_adjacency_sachs(g)
    table = SkewSachsTable(g)
    forest = is_forest(g)
    spectrum = roots(char_poly(g.adjacency_matrix())) if forest else None

    def ok(b: int) -> bool:
        p = table.poly(b)
        if not check_i_relation(pg, p):
            return False
        return spectrum is None or multiset_equal(roots(p), spectrum, tol)

    sw = _sweep(g, ok, budget, seed, threads, halve)
    witness = None
    if sw.failed_at is not None:
        p = table.poly(sw.failed_at)
        other = pg if not check_i_relation(pg, p) else char_poly(g.adjacency_matrix())
        witness = Witness(sw.failed_at, None, p, other)
    report = _report(g, "forest", sw, witness, seed)
    return _finish(report, sw.exhaustive or witness is not None, forest)


def _report(g: Graph, prop: str, sw: _Sweep, witness: Witness | None, seed: int) -> OrientationReport:
    if witness is not None:
        verdict = REFUTED
    else:
        verdict = HOLDS if sw.exhaustive else SAMPLED_HOLDS
    return OrientationReport(
        write_graph6(g), prop, verdict, sw.examined, witness, None if sw.exhaustive else seed
    )
