"""Hypergraphs with multiset edge lists: headings, acyclicity, colorings.

A heading picks one head node per edge.  Acyclicity is decided on the digraph
that points every non-head node of an edge at that edge's head; a directed
cycle there corresponds exactly to an oriented cycle of edges.  Proper
colorings (a unique maximal color on every edge) and heading/coloring
compatibility give the counting polynomials whose reciprocity the rest of the
package checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import BudgetExceededError, InputFormatError
from .polynomial import Polynomial, interpolate
from .setfn import SetFn

HEADING_BUDGET = 10 ** 7
COLORING_BUDGET = 10 ** 7


@dataclass(frozen=True)
class Hypergraph:
    """Nodes are 1..d; edges form a multiset (duplicates and singletons allowed)."""

    d: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        edges = tuple(frozenset(e) for e in self.edges)
        for e in edges:
            if not e:
                raise ValueError("edges must be nonempty")
            if not all(isinstance(i, int) and 1 <= i <= self.d for i in e):
                raise ValueError("edge node outside 1..d")
        object.__setattr__(self, "edges", edges)

    @property
    def heading_space(self) -> int:
        n = 1
        for e in self.edges:
            n *= len(e)
        return n


def check_heading(h: Hypergraph, heads: Sequence[int]) -> None:
    if len(heads) != len(h.edges):
        raise ValueError("a heading needs exactly one head per edge")
    for e, head in zip(h.edges, heads):
        if head not in e:
            raise ValueError(f"head {head} does not belong to its edge")


def hypergraphic_setfn(h: Hypergraph) -> SetFn:
    """z(T) = number of edges meeting T, counted with multiplicity."""
    masks = [sum(1 << (i - 1) for i in e) for e in h.edges]
    values = tuple(Fraction(sum(1 for em in masks if em & mask))
                   for mask in range(1 << h.d))
    return SetFn(h.d, values)


def is_acyclic(h: Hypergraph, heads: Sequence[int]) -> bool:
    """True when the heading induces no oriented cycle of edges."""
    check_heading(h, heads)
    succ: list[list[int]] = [[] for _ in range(h.d + 1)]
    indeg = [0] * (h.d + 1)
    for e, head in zip(h.edges, heads):
        for u in e:
            if u != head:
                succ[u].append(head)
                indeg[head] += 1
    queue = [i for i in range(1, h.d + 1) if indeg[i] == 0]
    removed = 0
    while queue:
        u = queue.pop()
        removed += 1
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return removed == h.d


def indegree_vector(h: Hypergraph, heads: Sequence[int]) -> tuple[int, ...]:
    """Coordinate i counts the edges whose head is node i."""
    check_heading(h, heads)
    delta = [0] * h.d
    for head in heads:
        delta[head - 1] += 1
    return tuple(delta)


def headings(h: Hypergraph, budget: int = HEADING_BUDGET) -> Iterator[tuple[int, ...]]:
    if h.heading_space > budget:
        raise BudgetExceededError(
            f"{h.heading_space} headings exceed the budget of {budget}")
    yield from itertools.product(*[sorted(e) for e in h.edges])


def acyclic_headings(h: Hypergraph, budget: int = HEADING_BUDGET) -> list[tuple[int, ...]]:
    """All acyclic headings, lexicographic in the per-edge head tuples."""
    return [s for s in headings(h, budget) if is_acyclic(h, s)]


def vertices_via_headings(h: Hypergraph,
                          budget: int = HEADING_BUDGET) -> set[tuple[int, ...]]:
    """In-degree vectors of the acyclic headings (the polytope's vertex set)."""
    return {indegree_vector(h, s) for s in acyclic_headings(h, budget)}


def is_proper(h: Hypergraph, colors: Sequence[int]) -> bool:
    """Every edge has exactly one node of maximal color."""
    if len(colors) != h.d:
        raise ValueError("one color per node required")
    for e in h.edges:
        mx = max(colors[i - 1] for i in e)
        if sum(1 for i in e if colors[i - 1] == mx) != 1:
            return False
    return True


def chromatic_count(h: Hypergraph, m: int, budget: int = COLORING_BUDGET) -> int:
    """Number of proper colorings with colors drawn from {1, ..., m}."""
    if m < 1:
        raise ValueError("m must be positive")
    if m ** h.d > budget:
        raise BudgetExceededError(f"{m}^{h.d} colorings exceed the budget of {budget}")
    return sum(1 for c in itertools.product(range(1, m + 1), repeat=h.d)
               if is_proper(h, c))


def chromatic_polynomial(h: Hypergraph, budget: int = COLORING_BUDGET) -> Polynomial:
    """Interpolation of the proper-coloring count at m = 1, ..., d+1."""
    return interpolate([(m, chromatic_count(h, m, budget)) for m in range(1, h.d + 2)])


def is_compatible(h: Hypergraph, heads: Sequence[int], colors: Sequence[int]) -> bool:
    """The head of every edge carries that edge's maximal color."""
    check_heading(h, heads)
    if len(colors) != h.d:
        raise ValueError("one color per node required")
    for e, head in zip(h.edges, heads):
        if colors[head - 1] != max(colors[i - 1] for i in e):
            return False
    return True


def compatible_pairs_count(h: Hypergraph, m: int,
                           budget: int = HEADING_BUDGET) -> int:
    """Pairs of an acyclic heading and an m-coloring that are compatible.

    Per coloring only the max-colored head choices are enumerated; the
    coloring loop and each per-coloring heading product observe the budget.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m ** h.d > budget:
        raise BudgetExceededError(f"{m}^{h.d} colorings exceed the budget of {budget}")
    total = 0
    for colors in itertools.product(range(1, m + 1), repeat=h.d):
        per_edge = []
        space = 1
        for e in h.edges:
            mx = max(colors[i - 1] for i in e)
            choice = [i for i in sorted(e) if colors[i - 1] == mx]
            per_edge.append(choice)
            space *= len(choice)
        if space > budget:
            raise BudgetExceededError(
                f"{space} candidate headings exceed the budget of {budget}")
        for heads in itertools.product(*per_edge):
            if is_acyclic(h, heads):
                total += 1
    return total


def hypergraph_to_json(h: Hypergraph, names: Sequence[str] | None = None) -> dict:
    if names is None:
        names = [str(i) for i in range(1, h.d + 1)]
    if len(names) != h.d:
        raise ValueError("one name per node required")
    return {
        "nodes": list(names),
        "edges": [[names[i - 1] for i in sorted(e)] for e in h.edges],
    }


def hypergraph_from_json(doc: object) -> tuple[Hypergraph, tuple[str, ...]]:
    """Decode {"nodes": [...], "edges": [[...], ...]}; node names are mapped to
    1..d in input order and returned alongside the hypergraph."""
    if not isinstance(doc, dict) or "nodes" not in doc or "edges" not in doc:
        raise InputFormatError("hypergraph document needs 'nodes' and 'edges'")
    nodes, edges = doc["nodes"], doc["edges"]
    if not isinstance(nodes, list) or not all(isinstance(n, str) for n in nodes):
        raise InputFormatError("'nodes' must be a list of names")
    if len(set(nodes)) != len(nodes):
        raise InputFormatError("node names must be unique")
    if not nodes:
        raise InputFormatError("at least one node is required")
    index = {name: i for i, name in enumerate(nodes, start=1)}
    if not isinstance(edges, list):
        raise InputFormatError("'edges' must be a list of node-name lists")
    decoded = []
    for e in edges:
        if not isinstance(e, list) or not e:
            raise InputFormatError("each edge must be a nonempty list of node names")
        members = set()
        for n in e:
            if n not in index:
                raise InputFormatError(f"unknown node name {n!r}")
            members.add(index[n])
        decoded.append(frozenset(members))
    return Hypergraph(len(nodes), tuple(decoded)), tuple(nodes)
