"""Sachs subgraph enumeration and coefficient formulas for permanental polynomials.

A Sachs subgraph is a vertex-disjoint union of single edges and cycles.
Permanental polynomial coefficients are assembled by summing signed,
weighted contributions of the Sachs subgraphs covering ``k`` vertices:

* plain graph: ``a_k = (-1)^k sum 2^c(U)`` over all Sachs subgraphs;
* orientation: ``a_k = sum (-1)^(m(U) + c^-(U)) 2^c(U)`` over those with
  only even cycles, ``c^-`` counting oddly oriented cycles;
* the weighted variants multiply by ``prod(U)``, squaring single-edge
  weights and taking cycle weights once.
"""
from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (
    Cycle,
    Graph,
    GraphError,
    OrientedGraph,
    WeightedOrientedGraph,
    _as_rational,
    enumerate_cycles,
)
from .poly import Poly


class CycleParity(enum.Enum):
    EVENLY = "evenly"
    ODDLY = "oddly"


@dataclass(frozen=True)
class SachsSubgraph:
    single_edges: tuple[tuple[int, int], ...]
    cycles: tuple[Cycle, ...]
    host: Graph = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.single_edges)

    @property
    def c(self) -> int:
        return len(self.cycles)

    @property
    def k(self) -> int:
        return 2 * self.m + sum(cy.length for cy in self.cycles)


def _walk(g: Graph, cycles: Sequence[Cycle], size: int | None = None) -> Iterator[tuple[list, list, int]]:
    """Yield ``(edges, cycle_indices, k)`` for every Sachs subgraph built from ``cycles``.

    Branches on the lowest undecided vertex: leave it uncovered, match it
    along an edge, or route one of the cycles rooted at it.  With ``size``
    given, only subgraphs covering exactly that many vertices are produced.
    """
    nbrs = g.neighbors
    rooted: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for idx, cy in enumerate(cycles):
        rooted[cy.vertices[0]].append((idx, cy.mask))
    edges: list[tuple[int, int]] = []
    chosen: list[int] = []

    def rec(free: int, covered: int):
        if size is not None:
            if covered > size or covered + free.bit_count() < size:
                return
            if covered == size:
                yield list(edges), list(chosen), covered
                return
        if free == 0:
            yield list(edges), list(chosen), covered
            return
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        yield from rec(rest, covered)
        for w in nbrs[v]:
            if (rest >> w) & 1:
                edges.append((v, w))
                yield from rec(rest & ~(1 << w), covered + 2)
                edges.pop()
        for idx, cmask in rooted[v]:
            if cmask & free == cmask:
                chosen.append(idx)
                yield from rec(free & ~cmask, covered + cycles[idx].length)
                chosen.pop()

    yield from rec((1 << g.n) - 1, 0)


def _cycles_for(g: Graph, even_only: bool) -> list[Cycle]:
    cycles = enumerate_cycles(g)
    return [c for c in cycles if c.length % 2 == 0] if even_only else cycles


def enumerate_sachs(g: Graph, even_only: bool, size: int) -> list[SachsSubgraph]:
    if not 0 <= size <= g.n:
        raise ValueError(f"size must lie in 0..{g.n}, got {size}")
    cycles = _cycles_for(g, even_only)
    return [
        SachsSubgraph(tuple(es), tuple(cycles[i] for i in cis), g)
        for es, cis, _ in _walk(g, cycles, size)
    ]


def _cycle_masks(g: Graph, cy: Cycle) -> tuple[int, int]:
    """(edge mask, mask of edges traversed from larger to smaller endpoint)."""
    emask = rmask = 0
    for a, b in cy.steps:
        e = g.index_of(a, b)
        emask |= 1 << e
        if a > b:
            rmask |= 1 << e
    return emask, rmask


def _oddly(bits: int, emask: int, rmask: int) -> bool:
    # an arc agrees with the traversal iff its direction bit equals the
    # "traversed backwards" bit; on an even cycle the parity of agreements
    # equals the parity of disagreements
    return ((bits ^ rmask) & emask).bit_count() & 1 == 1


def cycle_parity(og: OrientedGraph, c: Cycle) -> CycleParity:
    if c.length % 2:
        raise ValueError(f"parity is only defined for even cycles, got length {c.length}")
    g = og.graph
    for a, b in c.steps:
        if not g.has_edge(a, b):
            raise GraphError(f"cycle step ({a}, {b}) is not an edge of the graph")
    arcs = set(og.arcs)
    agree = sum(1 for step in c.steps if step in arcs)
    return CycleParity.ODDLY if agree % 2 else CycleParity.EVENLY


class SkewSachsTable:
    """Sachs data of a graph compiled once, evaluated per orientation.

    ``poly(bits)`` returns the permanental polynomial of the skew adjacency
    matrix of the orientation with direction bitmask ``bits``.  Subgraphs
    made only of single edges contribute a constant per ``k``; the rest are
    stored as (k, sign, 2^c, cycle ids) and only the cycle parities depend
    on the orientation.  Results are cached by parity vector, which is
    exact because the polynomial depends on the orientation only through it.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.cycles = _cycles_for(g, even_only=True)
        self.masks = [_cycle_masks(g, cy) for cy in self.cycles]
        base = [0] * (g.n + 1)
        terms: list[tuple[int, int, tuple[int, ...]]] = []
        for es, cis, k in _walk(g, self.cycles):
            sign = -1 if len(es) % 2 else 1
            if cis:
                terms.append((k, sign * (1 << len(cis)), tuple(cis)))
            else:
                base[k] += sign
        self.base = base
        self.terms = terms
        self._cache: dict[int, Poly] = {}

    def parity_vector(self, bits: int) -> int:
        out = 0
        for i, (emask, rmask) in enumerate(self.masks):
            if _oddly(bits, emask, rmask):
                out |= 1 << i
        return out

    def poly(self, bits: int) -> Poly:
        pv = self.parity_vector(bits)
        hit = self._cache.get(pv)
        if hit is not None:
            return hit
        coeffs = list(self.base)
        for k, weight, cis in self.terms:
            flips = sum((pv >> i) & 1 for i in cis)
            coeffs[k] += -weight if flips & 1 else weight
        p = Poly.from_ints(coeffs)
        self._cache[pv] = p
        return p


def perm_poly_adjacency_sachs(g: Graph) -> Poly:
    coeffs = [0] * (g.n + 1)
    for _, cis, k in _walk(g, _cycles_for(g, even_only=False)):
        coeffs[k] += 1 << len(cis)
    return Poly.from_ints((-1) ** k * c for k, c in enumerate(coeffs))


def perm_poly_skew_sachs(og: OrientedGraph) -> Poly:
    return SkewSachsTable(og.graph).poly(og.bits)


def perm_poly_weighted_skew_sachs(wog: WeightedOrientedGraph) -> Poly:
    g = wog.graph
    bits = wog.oriented.bits
    w = wog.weights
    cycles = _cycles_for(g, even_only=True)
    cyc_data = []
    for cy in cycles:
        emask, rmask = _cycle_masks(g, cy)
        prod = Fraction(1)
        for a, b in cy.steps:
            prod *= w[g.index_of(a, b)]
        cyc_data.append((-prod if _oddly(bits, emask, rmask) else prod))
    coeffs = [Fraction(0)] * (g.n + 1)
    for es, cis, k in _walk(g, cycles):
        term = Fraction(1 << len(cis))
        for a, b in es:
            term *= -w[g.index_of(a, b)] ** 2
        for i in cis:
            term *= cyc_data[i]
        coeffs[k] += term
    return Poly(tuple(coeffs))


def perm_poly_weighted_undirected_sachs(g: Graph, weights: Sequence) -> Poly:
    w = tuple(_as_rational(x) for x in weights)
    if len(w) != g.m:
        raise GraphError(f"expected {g.m} weights, got {len(w)}")
    cycles = _cycles_for(g, even_only=False)
    cyc_w = []
    for cy in cycles:
        prod = Fraction(1)
        for a, b in cy.steps:
            prod *= w[g.index_of(a, b)]
        cyc_w.append(prod)
    coeffs = [Fraction(0)] * (g.n + 1)
    for es, cis, k in _walk(g, cycles):
        term = Fraction(1 << len(cis))
        for a, b in es:
            term *= w[g.index_of(a, b)] ** 2
        for i in cis:
            term *= cyc_w[i]
        coeffs[k] += term
    return Poly(tuple((-1) ** k * c for k, c in enumerate(coeffs)))
