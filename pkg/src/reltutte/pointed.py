"""Pointed relative Tutte polynomials of a graph with one distinguished edge.

The distinguished edge is treated as an honorary zero edge while summing over
contracting sets; each contracting set is classified by whether the pointed
edge ends up a loop (its contracting side closes a cycle through it), a
bridge (its deleting side cuts through it), or neither (a zero-edge path
keeps its endpoints connected). Projecting the universal polynomial onto
those three classes and correcting the plain contraction/deletion polynomials
by the "neither" class yields the five pointed polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoPointedEdge, NotLinearInZ, PointedIsLoopOrBridge
from .graph import (
    ColoredMultigraph,
    PivotClassKey,
    components,
    contract,
    delete,
    is_bridge,
    is_connected,
    is_loop,
    pivot_class_key,
)
from .poly import RelPolynomial
from .tutte import (
    ContractingSet,
    canonical_labeling,
    universal_tutte_statesum,
    validate_contracting_set,
)

TYPE_C = "C"
TYPE_D = "D"
TYPE_ZERO = "zero"


class PointedGraph:
    """A connected graph with one pointed edge that is neither loop nor bridge."""

    def __init__(self, graph: ColoredMultigraph):
        e = graph.pointed_edge()
        if e is None:
            raise NoPointedEdge("graph has no pointed edge")
        if e.is_loop or is_bridge(graph, e.id):
            raise PointedIsLoopOrBridge(f"pointed edge {e.id!r} is a loop or a bridge")
        if not is_connected(graph):
            raise NoPointedEdge("pointed graphs must be connected")
        self.graph = graph
        self.pointed_id = e.id

    def contracted(self) -> ColoredMultigraph:
        return contract(self.graph, self.pointed_id)

    def deleted(self) -> ColoredMultigraph:
        return delete(self.graph, self.pointed_id)

    def __repr__(self):
        return f"PointedGraph(pointed={self.pointed_id!r}, {self.graph!r})"


def classify_pair(pg: PointedGraph, cs: ContractingSet) -> str:
    """Type of a contracting set taken with the pointed edge as a zero edge.

    Type C: the contracting side plus the pointed edge contains a cycle.
    Type D: the deleting side plus the pointed edge contains a cocycle.
    Type zero: neither.
    """
    g = pg.graph
    validate_contracting_set(g, cs, pointed_as_zero=True)
    e = g.edge(pg.pointed_id)
    parent: dict[str, str] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for eid in cs.contracting:
        f = g.edge(eid)
        ru, rv = find(f.u), find(f.v)
        if ru != rv:
            parent[ru] = rv
    if find(e.u) == find(e.v):
        verdict = TYPE_C
    else:
        removed = set(cs.deleting) | {e.id}
        rest = ColoredMultigraph(
            [f for f in g.edges if f.id not in removed], extra_vertices=g.vertex_set
        )
        verdict = TYPE_D if len(components(rest)) > len(components(g)) else TYPE_ZERO
    assert verdict == _classify_by_terminal_status(pg, cs), "type classification disagrees with terminal status"
    return verdict


def _classify_by_terminal_status(pg: PointedGraph, cs: ContractingSet) -> str:
    """Cross-check: contract C and delete D, then look at the pointed edge."""
    from .tutte import _replay

    lab = canonical_labeling(pg.graph, pointed_as_zero=True)
    _, t = _replay(pg.graph, lab, cs, pointed_as_zero=True, validate=False)
    if is_loop(t, pg.pointed_id):
        return TYPE_C
    if is_bridge(t, pg.pointed_id):
        return TYPE_D
    return TYPE_ZERO


def _map_z_linear(p: RelPolynomial, fn) -> RelPolynomial:
    """Apply key -> (coefficient multiplier, new key or None) to a z-linear polynomial."""
    out = RelPolynomial.zero()
    for (vars_, zs), coeff in p.terms():
        if len(zs) != 1:
            raise NotLinearInZ("operation requires exactly one z-symbol per monomial")
        new_key = fn(zs[0])
        if new_key is None:
            continue
        out = out + RelPolynomial.monomial(coeff, vars_, (new_key,))
    return out


def pi_C(p: RelPolynomial) -> RelPolynomial:
    """Keep monomials whose class has exactly one pointed edge and it is a bridge."""
    return _map_z_linear(p, lambda k: k if k.pointed_status() == "bridge" else None)


def pi_L(p: RelPolynomial) -> RelPolynomial:
    """Keep monomials whose class has exactly one pointed edge and it is a loop."""
    return _map_z_linear(p, lambda k: k if k.pointed_status() == "loop" else None)


def pi_0(p: RelPolynomial) -> RelPolynomial:
    """Keep monomials whose pointed edge is neither loop nor bridge."""
    return _map_z_linear(p, lambda k: k if k.pointed_status() == "inner" else None)


def _pointed_edge_id(key: PivotClassKey) -> str:
    return next(e.id for e in key.representative.edges if e.is_pointed)


def pi_contract(p: RelPolynomial) -> RelPolynomial:
    """Contract the unique pointed edge inside each class; drop loop classes."""

    def act(key: PivotClassKey):
        if key.pointed_edge_count() != 1 or key.pointed_status() == "loop":
            return None
        return pivot_class_key(contract(key.representative, _pointed_edge_id(key)))

    return _map_z_linear(p, act)


def pi_delete(p: RelPolynomial) -> RelPolynomial:
    """Delete the unique pointed edge inside each class; drop bridge classes."""

    def act(key: PivotClassKey):
        if key.pointed_edge_count() != 1 or key.pointed_status() == "bridge":
            return None
        return pivot_class_key(delete(key.representative, _pointed_edge_id(key)))

    return _map_z_linear(p, act)


@dataclass(frozen=True)
class PointedPolynomials:
    """The five pointed universal relative Tutte polynomials."""

    tc: RelPolynomial
    tl: RelPolynomial
    t0: RelPolynomial
    tslash: RelPolynomial
    tminus: RelPolynomial

    def as_dict(self) -> dict[str, RelPolynomial]:
        return {"T_C": self.tc, "T_L": self.tl, "T_0": self.t0, "T_/": self.tslash, "T_-": self.tminus}


def pointed_polys(pg: PointedGraph) -> PointedPolynomials:
    """Compute all five pointed polynomials of a pointed graph."""
    u = universal_tutte_statesum(pg.graph, pointed_as_zero=True)
    t0 = pi_0(u)
    tc = pi_contract(pi_C(u))
    tl = pi_delete(pi_L(u))
    tslash = universal_tutte_statesum(pg.contracted()) - pi_contract(t0)
    tminus = universal_tutte_statesum(pg.deleted()) - pi_delete(t0)
    return PointedPolynomials(tc=tc, tl=tl, t0=t0, tslash=tslash, tminus=tminus)


def universal_with_pointed_zero(pg: PointedGraph) -> RelPolynomial:
    """Universal polynomial with the pointed edge treated as a zero edge."""
    return universal_tutte_statesum(pg.graph, pointed_as_zero=True)


def contracting_sets_by_type(pg: PointedGraph) -> dict[str, list[ContractingSet]]:
    """All contracting sets with the pointed edge as zero, bucketed by type."""
    from .tutte import enumerate_contracting_sets

    buckets: dict[str, list[ContractingSet]] = {TYPE_C: [], TYPE_D: [], TYPE_ZERO: []}
    for cs in enumerate_contracting_sets(pg.graph, pointed_as_zero=True):
        buckets[classify_pair(pg, cs)].append(cs)
    return buckets
