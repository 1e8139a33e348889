"""Cut-mutation and the mutation graph over all cuts.

A vertex is a strict source of ``(Q, C)`` when all its incoming arrows lie
in ``C`` and none of its outgoing arrows do; mutation at a strict source
swaps that incidence (remove incoming, add outgoing), and dually at strict
sinks.  Both operations send cuts to cuts and are mutually inverse.

The mutation graph has one node per cut and one labelled edge per single
mutation.  Transitivity of cut-mutation is connectivity of this graph.
Free arrows (arrows in no distinguished cycle) never belong to enumerated
cuts, so graph edges are computed in the subquiver spanned by cycle arrows;
for covered quivers this changes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cuts import Cut, enumerate_cuts, is_cut
from .model import ArrowId, Quiver, QuiverWithCycles, VertexId


def _strict_vertices(quiver: Quiver, cut: Cut) -> tuple[list[VertexId], list[VertexId]]:
    """Strict sources and strict sinks of ``cut``, each sorted."""
    sources: list[VertexId] = []
    sinks: list[VertexId] = []
    for v in quiver.vertices:
        incoming = quiver.incoming.get(v, ())
        outgoing = quiver.outgoing.get(v, ())
        if not incoming and not outgoing:
            continue
        in_cut = [a.name in cut for a in incoming]
        out_cut = [a.name in cut for a in outgoing]
        if all(in_cut) and not any(out_cut):
            sources.append(v)
        if all(out_cut) and not any(in_cut):
            sinks.append(v)
    return sources, sinks


def _require_cut(q: QuiverWithCycles, cut: Iterable[ArrowId]) -> Cut:
    members = frozenset(cut)
    if not is_cut(q, members):
        raise ValueError(f"not a cut: {sorted(members)}")
    return members


def strict_sources(q: QuiverWithCycles, cut: Cut) -> frozenset[VertexId]:
    """Vertices whose incoming arrows all lie in the cut and outgoing all outside."""
    members = _require_cut(q, cut)
    return frozenset(_strict_vertices(q.quiver, members)[0])


def strict_sinks(q: QuiverWithCycles, cut: Cut) -> frozenset[VertexId]:
    """Vertices whose outgoing arrows all lie in the cut and incoming all outside."""
    members = _require_cut(q, cut)
    return frozenset(_strict_vertices(q.quiver, members)[1])


def mutate_plus(q: QuiverWithCycles, cut: Cut, vertex: VertexId) -> Cut:
    """Mutation at a strict source: drop its incoming arrows, add its outgoing."""
    members = _require_cut(q, cut)
    if vertex not in strict_sources(q, members):
        raise ValueError(f"vertex {vertex!r} is not a strict source of the cut")
    incoming = {a.name for a in q.quiver.incoming.get(vertex, ())}
    outgoing = {a.name for a in q.quiver.outgoing.get(vertex, ())}
    return (members - incoming) | outgoing


def mutate_minus(q: QuiverWithCycles, cut: Cut, vertex: VertexId) -> Cut:
    """Mutation at a strict sink: drop its outgoing arrows, add its incoming."""
    members = _require_cut(q, cut)
    if vertex not in strict_sinks(q, members):
        raise ValueError(f"vertex {vertex!r} is not a strict sink of the cut")
    incoming = {a.name for a in q.quiver.incoming.get(vertex, ())}
    outgoing = {a.name for a in q.quiver.outgoing.get(vertex, ())}
    return (members - outgoing) | incoming


@dataclass(frozen=True)
class MutationEdge:
    source: int
    target: int
    vertex: VertexId
    direction: str  # "+" for source mutation, "-" for sink mutation


@dataclass(frozen=True)
class MutationGraph:
    """Nodes are cuts (as sorted arrow tuples); edges are single mutations.

    Every "+" edge has a matching "-" edge in reverse, so the undirected
    view collapses each such pair into one edge labelled by its vertex.
    """

    nodes: tuple[tuple[ArrowId, ...], ...]
    edges: tuple[MutationEdge, ...]

    def undirected_edges(self) -> tuple[tuple[int, int, VertexId], ...]:
        seen = {
            (min(e.source, e.target), max(e.source, e.target), e.vertex) for e in self.edges
        }
        return tuple(sorted(seen))

    def component_count(self) -> int:
        parent = list(range(len(self.nodes)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for e in self.edges:
            a, b = find(e.source), find(e.target)
            if a != b:
                parent[max(a, b)] = min(a, b)
        return len({find(i) for i in range(len(self.nodes))})

    @property
    def is_connected(self) -> bool:
        return len(self.nodes) == 0 or self.component_count() == 1


def _cycle_core(q: QuiverWithCycles) -> QuiverWithCycles:
    """The subquiver spanned by arrows appearing in distinguished cycles."""
    keep = q.cycle_arrows
    if len(keep) == len(q.quiver.arrows):
        return q
    quiver = Quiver(q.quiver.vertices, tuple(a for a in q.quiver.arrows if a.name in keep))
    return QuiverWithCycles(quiver, q.cycles)


def mutation_graph(q: QuiverWithCycles) -> MutationGraph:
    """The graph of all cuts of ``q`` under single cut-mutations.

    All cuts are enumerated up front (discovery by mutation alone would hide
    non-transitive instances); edges are then computed node by node.
    """
    cuts = enumerate_cuts(q)
    nodes = tuple(tuple(sorted(cut)) for cut in cuts)
    index = {cut: i for i, cut in enumerate(cuts)}
    core = _cycle_core(q)
    quiver = core.quiver
    edges: list[MutationEdge] = []
    for i, cut in enumerate(cuts):
        sources, sinks = _strict_vertices(quiver, cut)
        for v in sources:
            incoming = {a.name for a in quiver.incoming.get(v, ())}
            outgoing = {a.name for a in quiver.outgoing.get(v, ())}
            mutated = (cut - incoming) | outgoing
            edges.append(MutationEdge(i, index[mutated], v, "+"))
        for v in sinks:
            incoming = {a.name for a in quiver.incoming.get(v, ())}
            outgoing = {a.name for a in quiver.outgoing.get(v, ())}
            mutated = (cut - outgoing) | incoming
            edges.append(MutationEdge(i, index[mutated], v, "-"))
    unique = sorted(set(edges), key=lambda e: (e.source, e.target, e.vertex, e.direction))
    return MutationGraph(nodes, tuple(unique))


def is_transitive(q: QuiverWithCycles) -> bool:
    """True iff successive cut-mutations reach every cut from every other."""
    return mutation_graph(q).is_connected
