"""The universal relative Tutte polynomial.

The state sum walks the regular edges in decreasing label order, branching
into contract/delete decisions: contracting a loop and deleting a bridge are
forbidden, a forced contraction of a bridge contributes X, a forced deletion
of a loop contributes Y, and the free branches contribute x (contract) and y
(delete). The leaves of this walk are exactly the contracting sets, the
accumulated weights are the activity weights, and the surviving all-zero-edge
graph is the terminal graph whose pivot class indexes the z-symbol.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Mapping, Optional

from .errors import ColorClash, ImproperLabeling, InvalidContractingSet
from .graph import (
    ColoredMultigraph,
    components,
    contract,
    delete,
    is_bridge,
    is_loop,
    pivot_class_key,
)
from .poly import RelPolynomial, monomial_key


class Activity(Enum):
    IA = "internally-active"
    II = "internally-inactive"
    EA = "externally-active"
    EI = "externally-inactive"


_WEIGHT_KIND = {Activity.IA: "X", Activity.II: "x", Activity.EA: "Y", Activity.EI: "y"}


@dataclass(frozen=True)
class ContractingSet:
    contracting: frozenset
    deleting: frozenset


class ProperLabeling:
    """Edge labeling: zero exactly on the zero set, injective on regular edges."""

    def __init__(self, labels: Mapping[str, int]):
        self.labels = {str(k): int(v) for k, v in labels.items()}

    def __getitem__(self, eid: str) -> int:
        return self.labels[eid]

    def validate(self, g: ColoredMultigraph, pointed_as_zero: bool = False) -> None:
        regular = set(g.regular_ids(pointed_as_zero))
        zero = set(g.zero_ids(pointed_as_zero))
        if set(self.labels) != regular | zero:
            raise ImproperLabeling("labeling does not cover the edge set exactly")
        pos = [self.labels[e] for e in regular]
        if any(p <= 0 for p in pos) or len(set(pos)) != len(pos):
            raise ImproperLabeling("regular edges need distinct positive labels")
        if any(self.labels[e] != 0 for e in zero):
            raise ImproperLabeling("zero edges must be labeled 0")


def canonical_labeling(g: ColoredMultigraph, pointed_as_zero: bool = False) -> ProperLabeling:
    """Regular edges sorted by id get labels 1..k; zero edges get 0."""
    labels = {eid: 0 for eid in g.zero_ids(pointed_as_zero)}
    for i, eid in enumerate(sorted(g.regular_ids(pointed_as_zero)), start=1):
        labels[eid] = i
    return ProperLabeling(labels)


def _decreasing_order(g: ColoredMultigraph, lab: ProperLabeling, pointed_as_zero: bool) -> list[str]:
    lab.validate(g, pointed_as_zero)
    return sorted(g.regular_ids(pointed_as_zero), key=lambda e: lab[e], reverse=True)


def _check_colors(g: ColoredMultigraph) -> None:
    clash = set(g.regular_colors()) & set(g.zero_colors())
    if clash:
        raise ColorClash(f"colors used on both sides: {sorted(clash)}")


def enumerate_contracting_sets(
    g: ColoredMultigraph,
    lab: Optional[ProperLabeling] = None,
    pointed_as_zero: bool = False,
) -> Iterator[ContractingSet]:
    """All contracting sets, each exactly once, in contract-first branch order."""
    lab = lab or canonical_labeling(g, pointed_as_zero)
    order = _decreasing_order(g, lab, pointed_as_zero)

    def walk(graph: ColoredMultigraph, i: int, chosen: list):
        if i == len(order):
            c = frozenset(e for e, in_c in chosen if in_c)
            d = frozenset(e for e, in_c in chosen if not in_c)
            yield ContractingSet(c, d)
            return
        eid = order[i]
        if not is_loop(graph, eid):
            chosen.append((eid, True))
            yield from walk(contract(graph, eid), i + 1, chosen)
            chosen.pop()
        if not is_bridge(graph, eid):
            chosen.append((eid, False))
            yield from walk(delete(graph, eid), i + 1, chosen)
            chosen.pop()

    yield from walk(g, 0, [])


def validate_contracting_set(
    g: ColoredMultigraph,
    cs: ContractingSet,
    pointed_as_zero: bool = False,
) -> None:
    """Definition-level check: C cycle-free, D cocycle-free, C+D the regular edges."""
    regular = set(g.regular_ids(pointed_as_zero))
    if cs.contracting | cs.deleting != regular or cs.contracting & cs.deleting:
        raise InvalidContractingSet("C and D must partition the regular edges")
    parent: dict[str, str] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for eid in sorted(cs.contracting):
        e = g.edge(eid)
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            raise InvalidContractingSet(f"C contains a cycle through {eid!r}")
        parent[ru] = rv
    pruned = ColoredMultigraph(
        [e for e in g.edges if e.id not in cs.deleting], extra_vertices=g.vertex_set
    )
    if len(components(pruned)) != len(components(g)):
        raise InvalidContractingSet("D contains a cocycle")


def _replay(
    g: ColoredMultigraph,
    lab: ProperLabeling,
    cs: ContractingSet,
    pointed_as_zero: bool,
    validate: bool = True,
) -> tuple[dict[str, Activity], ColoredMultigraph]:
    if validate:
        validate_contracting_set(g, cs, pointed_as_zero)
    order = _decreasing_order(g, lab, pointed_as_zero)
    acts: dict[str, Activity] = {}
    graph = g
    for eid in order:
        if eid in cs.contracting:
            assert not is_loop(graph, eid), "contracting a loop in a valid contracting set"
            acts[eid] = Activity.IA if is_bridge(graph, eid) else Activity.II
            graph = contract(graph, eid)
        else:
            assert not is_bridge(graph, eid), "deleting a bridge in a valid contracting set"
            acts[eid] = Activity.EA if is_loop(graph, eid) else Activity.EI
            graph = delete(graph, eid)
    return acts, graph


def activities(
    g: ColoredMultigraph,
    lab: ProperLabeling,
    cs: ContractingSet,
    pointed_as_zero: bool = False,
) -> dict[str, Activity]:
    """Activities by replaying contractions/deletions in decreasing label order."""
    acts, _ = _replay(g, lab, cs, pointed_as_zero)
    return acts


def terminal_graph(
    g: ColoredMultigraph,
    lab: ProperLabeling,
    cs: ContractingSet,
    pointed_as_zero: bool = False,
) -> ColoredMultigraph:
    """The all-zero-edge graph left after processing in decreasing label order."""
    _, graph = _replay(g, lab, cs, pointed_as_zero)
    return graph


def activities_via_cycles(
    g: ColoredMultigraph,
    lab: ProperLabeling,
    cs: ContractingSet,
    pointed_as_zero: bool = False,
) -> dict[str, Activity]:
    """Independent activity oracle via explicit cycle/cocycle subset search.

    An edge of C is internally active iff some cocycle inside D+{e} has e as
    its smallest edge; an edge of D is externally active iff some cycle inside
    C+{f} has f as its smallest edge. Exponential in |C| and |D|; intended for
    cross-checking on small graphs.
    """
    validate_contracting_set(g, cs, pointed_as_zero)
    lab.validate(g, pointed_as_zero)
    acts: dict[str, Activity] = {}
    d_sorted = sorted(cs.deleting)
    c_sorted = sorted(cs.contracting)
    for eid in c_sorted:
        active = False
        for r in range(len(d_sorted) + 1):
            for extra in combinations(d_sorted, r):
                cand = set(extra) | {eid}
                if _is_cocycle(g, cand) and all(lab[eid] < lab[f] for f in extra):
                    active = True
                    break
            if active:
                break
        acts[eid] = Activity.IA if active else Activity.II
    for eid in d_sorted:
        active = False
        for r in range(len(c_sorted) + 1):
            for extra in combinations(c_sorted, r):
                cand = set(extra) | {eid}
                if _is_cycle(g, cand) and all(lab[eid] < lab[f] for f in extra):
                    active = True
                    break
            if active:
                break
        acts[eid] = Activity.EA if active else Activity.EI
    return acts


def _is_cycle(g: ColoredMultigraph, ids: set) -> bool:
    """True iff the edge set forms one single cycle (a lone loop counts)."""
    deg: dict[str, int] = {}
    for eid in ids:
        e = g.edge(eid)
        deg[e.u] = deg.get(e.u, 0) + 1
        deg[e.v] = deg.get(e.v, 0) + 1
        if e.is_loop:
            return len(ids) == 1
    if any(d != 2 for d in deg.values()):
        return False
    sub = ColoredMultigraph([g.edge(eid) for eid in ids])
    return len(components(sub)) == 1


def _is_cocycle(g: ColoredMultigraph, ids: set) -> bool:
    """True iff the edge set is a minimal cut of g."""
    base = len(components(g))

    def comps_without(removed):
        rest = ColoredMultigraph(
            [e for e in g.edges if e.id not in removed], extra_vertices=g.vertex_set
        )
        return len(components(rest))

    if comps_without(ids) <= base:
        return False
    return all(comps_without(ids - {x}) == base for x in ids)


def universal_tutte_statesum(
    g: ColoredMultigraph,
    lab: Optional[ProperLabeling] = None,
    pointed_as_zero: bool = False,
) -> RelPolynomial:
    """State sum over all contracting sets; linear in the z-symbols."""
    _check_colors(g)
    lab = lab or canonical_labeling(g, pointed_as_zero)
    order = _decreasing_order(g, lab, pointed_as_zero)
    terms: dict = {}
    weight: dict = {}

    def bump(kind, color, step):
        key = (kind, color)
        weight[key] = weight.get(key, 0) + step
        if not weight[key]:
            del weight[key]

    def walk(graph: ColoredMultigraph, i: int):
        if i == len(order):
            m = monomial_key(weight.items(), (pivot_class_key(graph),))
            terms[m] = terms.get(m, 0) + 1
            return
        eid = order[i]
        e = graph.edge(eid)
        loop = e.is_loop
        bridge = (not loop) and is_bridge(graph, eid)
        if loop:
            bump("Y", e.color, 1)
            walk(delete(graph, eid), i + 1)
            bump("Y", e.color, -1)
        elif bridge:
            bump("X", e.color, 1)
            walk(contract(graph, eid), i + 1)
            bump("X", e.color, -1)
        else:
            bump("x", e.color, 1)
            walk(contract(graph, eid), i + 1)
            bump("x", e.color, -1)
            bump("y", e.color, 1)
            walk(delete(graph, eid), i + 1)
            bump("y", e.color, -1)

    walk(g, 0)
    return RelPolynomial(terms)


def tutte_recursive(g: ColoredMultigraph, pointed_as_zero: bool = False) -> RelPolynomial:
    """Deletion-contraction on the regular edge of largest canonical label.

    Matches the state sum under the canonical labeling term by term, not just
    modulo the ideal.
    """
    _check_colors(g)
    regular = g.regular_ids(pointed_as_zero)
    if not regular:
        return RelPolynomial.z_symbol(pivot_class_key(g))
    eid = max(regular)
    e = g.edge(eid)
    if e.is_loop:
        return RelPolynomial.variable("Y", e.color) * tutte_recursive(delete(g, eid), pointed_as_zero)
    if is_bridge(g, eid):
        return RelPolynomial.variable("X", e.color) * tutte_recursive(contract(g, eid), pointed_as_zero)
    return RelPolynomial.variable("x", e.color) * tutte_recursive(
        contract(g, eid), pointed_as_zero
    ) + RelPolynomial.variable("y", e.color) * tutte_recursive(delete(g, eid), pointed_as_zero)


def weight_polynomial(acts: Mapping[str, Activity], g: ColoredMultigraph) -> RelPolynomial:
    """Product of per-edge activity weights."""
    out = RelPolynomial.const(1)
    for eid, act in acts.items():
        out = out * RelPolynomial.variable(_WEIGHT_KIND[act], g.edge(eid).color)
    return out
