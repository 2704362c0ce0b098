"""Colored multigraphs and their structural operations.

Graphs are immutable values: every operation returns a fresh graph. Edges
carry stable string ids, a color token, and zero/pointed flags. Parallel
edges and loops are permitted throughout.

Color discipline: within one graph a color is used either only on zero edges
or only on regular edges, the reserved color ``nu`` appears on at most one
edge and marks it pointed, and the reserved color ``lambda0`` is always a
zero color.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count
from typing import Iterable, Optional

from .errors import (
    BadReattachChoice,
    ColorClash,
    ContractLoop,
    EngineError,
    LoopTwoSum,
    MixedColors,
    NotACutpoint,
    NotRegular,
    UnknownEdge,
)

#: Reserved color of the single distinguished (pointed) edge.
POINTED_COLOR = "nu"
#: Reserved zero color given to regular edges demoted by recolor_subset.
RECOLOR_ZERO = "lambda0"

_COLOR_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class EdgeRecord:
    """One edge: endpoints may coincide (a loop)."""

    id: str
    u: str
    v: str
    color: str
    is_zero: bool = False
    is_pointed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "id", str(self.id))
        object.__setattr__(self, "u", str(self.u))
        object.__setattr__(self, "v", str(self.v))
        if not _COLOR_RE.match(self.color):
            raise EngineError(f"bad color token {self.color!r}")
        if self.is_pointed and self.is_zero:
            raise EngineError(f"edge {self.id}: pointed edges cannot be zero edges")

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def endpoints(self) -> tuple[str, str]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    def other_end(self, w: str) -> str:
        return self.v if w == self.u else self.u


class ColoredMultigraph:
    """Immutable colored multigraph with stable edge ids."""

    __slots__ = ("_edges", "_vertices")

    def __init__(self, edges: Iterable[EdgeRecord] = (), extra_vertices: Iterable = ()):
        recs = sorted(edges, key=lambda e: e.id)
        emap: dict[str, EdgeRecord] = {}
        for e in recs:
            if e.id in emap:
                raise EngineError(f"duplicate edge id {e.id!r}")
            emap[e.id] = e
        vs = {str(v) for v in extra_vertices}
        for e in recs:
            vs.add(e.u)
            vs.add(e.v)
        self._edges = emap
        self._vertices = frozenset(vs)
        self._validate()

    def _validate(self):
        zero_colors, regular_colors = set(), set()
        pointed = [e for e in self._edges.values() if e.is_pointed]
        if len(pointed) > 1:
            raise EngineError("more than one pointed edge")
        for e in self._edges.values():
            if e.color == POINTED_COLOR and not e.is_pointed:
                raise ColorClash(f"edge {e.id}: color {POINTED_COLOR!r} is reserved for the pointed edge")
            if e.is_pointed and e.color != POINTED_COLOR:
                raise ColorClash(f"edge {e.id}: pointed edges must carry color {POINTED_COLOR!r}")
            if e.color == RECOLOR_ZERO and not e.is_zero:
                raise ColorClash(f"edge {e.id}: color {RECOLOR_ZERO!r} is reserved for zero edges")
            (zero_colors if e.is_zero else regular_colors).add(e.color)
        regular_colors.discard(POINTED_COLOR)
        clash = zero_colors & regular_colors
        if clash:
            raise ColorClash(f"colors used both as zero and regular: {sorted(clash)}")

    # -- accessors ------------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self._vertices))

    @property
    def vertex_set(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> tuple[EdgeRecord, ...]:
        return tuple(self._edges.values())

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(self._edges)

    def edge(self, eid: str) -> EdgeRecord:
        try:
            return self._edges[str(eid)]
        except KeyError:
            raise UnknownEdge(f"no edge with id {eid!r}") from None

    def has_edge(self, eid: str) -> bool:
        return str(eid) in self._edges

    def regular_ids(self, pointed_as_zero: bool = False) -> tuple[str, ...]:
        return tuple(
            e.id
            for e in self._edges.values()
            if not e.is_zero and not (pointed_as_zero and e.is_pointed)
        )

    def zero_ids(self, pointed_as_zero: bool = False) -> tuple[str, ...]:
        return tuple(
            e.id
            for e in self._edges.values()
            if e.is_zero or (pointed_as_zero and e.is_pointed)
        )

    def pointed_edge(self) -> Optional[EdgeRecord]:
        for e in self._edges.values():
            if e.is_pointed:
                return e
        return None

    def regular_colors(self) -> tuple[str, ...]:
        return tuple(sorted({e.color for e in self._edges.values() if not e.is_zero and not e.is_pointed}))

    def zero_colors(self) -> tuple[str, ...]:
        return tuple(sorted({e.color for e in self._edges.values() if e.is_zero}))

    def adjacency(self) -> dict[str, list[tuple[str, str]]]:
        """Map vertex -> [(neighbor, edge id)]; loops appear once."""
        adj: dict[str, list[tuple[str, str]]] = {v: [] for v in self._vertices}
        for e in self._edges.values():
            adj[e.u].append((e.v, e.id))
            if not e.is_loop:
                adj[e.v].append((e.u, e.id))
        return adj

    def __eq__(self, other):
        if not isinstance(other, ColoredMultigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, frozenset(self._edges.values())))

    def __repr__(self):
        return f"ColoredMultigraph({len(self._vertices)} vertices, {len(self._edges)} edges)"


def single_vertex(name: str = "0") -> ColoredMultigraph:
    return ColoredMultigraph((), extra_vertices=(name,))


# -- connectivity --------------------------------------------------------------


def components(g: ColoredMultigraph) -> list[frozenset]:
    adj = g.adjacency()
    seen: set[str] = set()
    out = []
    for start in sorted(g.vertex_set):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: ColoredMultigraph) -> bool:
    return len(components(g)) <= 1


def contract(g: ColoredMultigraph, eid: str) -> ColoredMultigraph:
    """Merge the endpoints of a non-loop edge; the smaller vertex id survives."""
    e = g.edge(eid)
    if e.is_loop:
        raise ContractLoop(f"cannot contract loop {eid!r}")
    keep, gone = sorted((e.u, e.v))
    edges = []
    for f in g.edges:
        if f.id == e.id:
            continue
        u = keep if f.u == gone else f.u
        v = keep if f.v == gone else f.v
        edges.append(EdgeRecord(f.id, u, v, f.color, f.is_zero, f.is_pointed) if (u, v) != (f.u, f.v) else f)
    extra = (g.vertex_set - {gone}) - {x for f in edges for x in (f.u, f.v)}
    return ColoredMultigraph(edges, extra_vertices=extra)


def delete(g: ColoredMultigraph, eid: str) -> ColoredMultigraph:
    """Remove an edge, keeping both endpoints (possibly now isolated)."""
    e = g.edge(eid)
    edges = [f for f in g.edges if f.id != e.id]
    return ColoredMultigraph(edges, extra_vertices=g.vertex_set)


def is_loop(g: ColoredMultigraph, eid: str) -> bool:
    return g.edge(eid).is_loop


def is_bridge(g: ColoredMultigraph, eid: str) -> bool:
    e = g.edge(eid)
    if e.is_loop:
        return False
    return len(components(delete(g, eid))) > len(components(g))


def cutpoints(g: ColoredMultigraph) -> tuple[str, ...]:
    """Vertices whose removal increases the component count."""
    base = len(components(g))
    out = []
    for v in sorted(g.vertex_set):
        edges = [e for e in g.edges if v not in (e.u, e.v)]
        rest = ColoredMultigraph(edges, extra_vertices=g.vertex_set - {v})
        if len(components(rest)) > base:
            out.append(v)
    return tuple(out)


# -- blocks ---------------------------------------------------------------------


def blocks(g: ColoredMultigraph) -> list[ColoredMultigraph]:
    """Biconnected components; every edge lands in exactly one block.

    A block is a maximal 2-connected subgraph, a single bridge, or a single
    loop. Isolated vertices produce no block.
    """
    loops = [e for e in g.edges if e.is_loop]
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in g.vertex_set}
    for e in g.edges:
        if e.is_loop:
            continue
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))

    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    timer = count()
    stack: list[str] = []
    groups: list[list[str]] = []

    def dfs(root):
        # iterative DFS so deep paths cannot overflow the recursion limit
        work = [(root, None, iter(adj[root]))]
        disc[root] = low[root] = next(timer)
        while work:
            v, in_edge, it = work[-1]
            advanced = False
            for w, eid in it:
                if eid == in_edge:
                    continue
                if w not in disc:
                    stack.append(eid)
                    disc[w] = low[w] = next(timer)
                    work.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(eid)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    grp = []
                    while True:
                        eid = stack.pop()
                        grp.append(eid)
                        if eid == in_edge:
                            break
                    groups.append(grp)

    for v in sorted(g.vertex_set):
        if v not in disc:
            dfs(v)

    out = []
    for e in loops:
        out.append(ColoredMultigraph([e]))
    for grp in groups:
        out.append(ColoredMultigraph([g.edge(eid) for eid in grp]))
    out.sort(key=lambda b: b.edge_ids())
    return out


# -- canonical codes --------------------------------------------------------------


def _canonical_order(vs, loop_colors, pair_colors):
    """Vertex ordering minimizing the row-wise adjacency encoding.

    Row k of an ordering lists the loop colors at the k-th vertex followed by
    the edge colors towards each earlier vertex; minimizing rows level by
    level over all orderings yields a canonical form for the colored
    multigraph.
    """
    beam = [((), frozenset(vs))]
    rows = []
    for _ in range(len(vs)):
        best_row = None
        nxt = []
        for seq, rem in beam:
            for v in sorted(rem):
                row = (loop_colors.get(v, ()),) + tuple(
                    pair_colors.get((v, u) if v <= u else (u, v), ()) for u in seq
                )
                if best_row is None or row < best_row:
                    best_row = row
                    nxt = [(seq + (v,), rem - {v})]
                elif row == best_row:
                    nxt.append((seq + (v,), rem - {v}))
        rows.append(best_row)
        beam = nxt
    return beam[0][0], tuple(rows)


@lru_cache(maxsize=200000)
def _canonical_atoms_cached(n_vertices: int, sig: tuple) -> tuple:
    loop_colors: dict = {}
    pair_colors: dict = {}
    vs = set()
    for u, v, c in sig:
        vs.add(u)
        vs.add(v)
        if u == v:
            loop_colors.setdefault(u, []).append(c)
        else:
            pair_colors.setdefault((u, v), []).append(c)
    k = 0
    while len(vs) < n_vertices:
        cand = f"~iso{k}"
        k += 1
        if cand not in vs:
            vs.add(cand)
    loop_colors = {k: tuple(sorted(v)) for k, v in loop_colors.items()}
    pair_colors = {k: tuple(sorted(v)) for k, v in pair_colors.items()}
    order, _rows = _canonical_order(sorted(vs), loop_colors, pair_colors)
    pos = {v: i for i, v in enumerate(order)}
    atoms = []
    for u, v, c in sig:
        i, j = sorted((pos[u], pos[v]))
        atoms.append((i, j, c))
    return tuple(sorted(atoms))


def canonical_atoms(g: ColoredMultigraph) -> tuple:
    """Edges of g rewritten over a canonical vertex labeling 0..n-1.

    Two graphs get equal atom tuples (paired with their vertex counts) iff
    they are isomorphic as colored multigraphs. Zero/pointed flags are not
    encoded: under the color discipline they are implied by the color.
    """
    sig = tuple(sorted(e.endpoints() + (e.color,) for e in g.edges))
    return _canonical_atoms_cached(len(g.vertex_set), sig)


def canonical_code(g: ColoredMultigraph) -> str:
    atoms = canonical_atoms(g)
    body = ",".join(f"{i}-{j}:{c}" for i, j, c in atoms)
    return f"g{len(g.vertex_set)}({body})"


def block_code(b: ColoredMultigraph) -> str:
    """Canonical printable code of a single block."""
    es = b.edges
    if len(es) == 1:
        e = es[0]
        return f"loop({e.color})" if e.is_loop else f"bridge({e.color})"
    if len(es) == 2 and len(b.vertex_set) == 2:
        c1, c2 = sorted(e.color for e in es)
        return f"cycle2({c1},{c2})"
    atoms = canonical_atoms(b)
    body = ",".join(f"{i}-{j}:{c}" for i, j, c in atoms)
    return f"b{len(b.vertex_set)}({body})"


@dataclass(frozen=True)
class PivotClassKey:
    """Vertex-pivot equivalence class of a graph, as its multiset of block codes.

    Equality and hashing use the codes only; the stored representative graph
    realizes the class and is what contraction/deletion/2-sum operators act on.
    """

    codes: tuple[str, ...]
    representative: ColoredMultigraph = field(compare=False, hash=False)

    @property
    def is_empty(self) -> bool:
        return not self.codes

    def pointed_edge_count(self) -> int:
        return sum(1 for e in self.representative.edges if e.is_pointed)

    def pointed_status(self) -> Optional[str]:
        """'bridge', 'loop' or 'inner' when exactly one pointed edge exists."""
        if self.pointed_edge_count() != 1:
            return None
        if f"bridge({POINTED_COLOR})" in self.codes:
            return "bridge"
        if f"loop({POINTED_COLOR})" in self.codes:
            return "loop"
        return "inner"

    def render(self) -> str:
        return "z{%s}" % ",".join(self.codes)

    def __repr__(self):
        return self.render()


def pivot_class_key(g: ColoredMultigraph) -> PivotClassKey:
    """Canonical pivot-class key; isolated vertices contribute nothing."""
    bs = blocks(g)
    codes = tuple(sorted(block_code(b) for b in bs))
    if bs:
        used = {x for b in bs for x in b.vertex_set}
        rep = ColoredMultigraph([e for b in bs for e in b.edges]) if used != g.vertex_set else g
    else:
        rep = single_vertex()
    return PivotClassKey(codes, rep)


EMPTY_KEY = pivot_class_key(single_vertex())


# -- pivot, splice, two-sum --------------------------------------------------------


def vertex_pivot(g: ColoredMultigraph, cutpoint: str, reattach: tuple[str, str]) -> ColoredMultigraph:
    """Split g at a cutpoint and re-splice the two parts at the given vertices.

    The first reattach vertex selects the split: its component after removing
    the cutpoint becomes one side (plus a fresh copy of the cutpoint); the
    rest stays with the original cutpoint. The two reattach vertices are then
    identified.
    """
    cutpoint = str(cutpoint)
    a, b = str(reattach[0]), str(reattach[1])
    if cutpoint not in cutpoints(g):
        raise NotACutpoint(f"{cutpoint!r} is not a cutpoint")
    if a == cutpoint or a not in g.vertex_set:
        raise BadReattachChoice(f"{a!r} must be a vertex distinct from the cutpoint")
    rest_edges = [e for e in g.edges if cutpoint not in (e.u, e.v)]
    rest = ColoredMultigraph(rest_edges, extra_vertices=g.vertex_set - {cutpoint})
    side = next(c for c in components(rest) if a in c)
    if not any(e.other_end(cutpoint) in side for e in g.edges if cutpoint in (e.u, e.v) and not e.is_loop):
        raise BadReattachChoice(f"the component of {a!r} is not attached to the cutpoint")
    if b in side or b not in g.vertex_set:
        raise BadReattachChoice(f"{b!r} must lie outside the component of {a!r}")
    fresh = cutpoint
    while fresh in g.vertex_set:
        fresh += "'"
    # detach the side of `a` onto a fresh copy of the cutpoint, then identify a with b
    merged = min(a, b)

    def rename(v):
        if v in (a, b):
            return merged
        return v

    edges = []
    for e in g.edges:
        u, v = e.u, e.v
        if not e.is_loop and cutpoint in (u, v) and e.other_end(cutpoint) in side:
            u = fresh if u == cutpoint else rename(u)
            v = fresh if v == cutpoint else rename(v)
        else:
            u, v = rename(u), rename(v)
        if (u, v) != (e.u, e.v):
            edges.append(EdgeRecord(e.id, u, v, e.color, e.is_zero, e.is_pointed))
        else:
            edges.append(e)
    extra = {rename(v) for v in g.vertex_set}
    extra.add(fresh)
    return ColoredMultigraph(edges, extra_vertices=extra)


def splice_all(graphs: Iterable[ColoredMultigraph]) -> ColoredMultigraph:
    """Connect all components of all inputs by repeatedly identifying vertices.

    The result is well defined up to vertex pivots, so only its pivot-class
    key is contractually meaningful. An empty input yields a single vertex.
    """
    comps: list[tuple[str, ColoredMultigraph, frozenset]] = []
    for i, g in enumerate(graphs):
        for comp in components(g):
            comps.append((f"s{i}.", g, comp))
    if not comps:
        return single_vertex()
    anchor = None
    edges = []
    vertices = set()
    for prefix, g, comp in comps:
        local = prefix + min(comp)
        if anchor is None:
            anchor = local

        def rename(v, prefix=prefix, local=local):
            pv = prefix + v
            return anchor if pv == local else pv

        for v in comp:
            vertices.add(rename(v))
        for e in g.edges:
            if e.u in comp:
                edges.append(EdgeRecord(prefix + e.id, rename(e.u), rename(e.v), e.color, e.is_zero, e.is_pointed))
    return ColoredMultigraph(edges, extra_vertices=vertices)


def _glue_along_edge(
    base: ColoredMultigraph,
    base_edge: str,
    patch: ColoredMultigraph,
    patch_edge: str,
    flip: bool = False,
) -> ColoredMultigraph:
    """Identify the endpoints of base_edge with those of patch_edge, drop both.

    The base edge may be a loop: both patch endpoints then collapse onto the
    loop's vertex. The patch edge must not be a loop.
    """
    be = base.edge(base_edge)
    pe = patch.edge(patch_edge)
    if pe.is_loop:
        raise LoopTwoSum(f"patch edge {patch_edge!r} is a loop")
    b1, b2 = be.endpoints()
    p1, p2 = pe.endpoints()
    if flip:
        b1, b2 = b2, b1
    target = {p1: b1, p2: b2}
    prefix = f"{base_edge}."
    while any((prefix + v) in base.vertex_set for v in patch.vertex_set) or any(
        base.has_edge(prefix + e.id) for e in patch.edges
    ):
        prefix += "+"

    def rename(v):
        return target.get(v, prefix + v)

    edges = [f for f in base.edges if f.id != be.id]
    for f in patch.edges:
        if f.id == pe.id:
            continue
        edges.append(EdgeRecord(prefix + f.id, rename(f.u), rename(f.v), f.color, f.is_zero, f.is_pointed))
    vertices = set(base.vertex_set) | {rename(v) for v in patch.vertex_set}
    return ColoredMultigraph(edges, extra_vertices=vertices)


def two_sum(
    base: ColoredMultigraph,
    base_edge: str,
    patch: ColoredMultigraph,
    patch_edge: str,
    flip: bool = False,
) -> ColoredMultigraph:
    """2-sum: identify two non-loop edges endpoint-to-endpoint and remove both.

    Endpoints are matched in ascending vertex-id order on both sides unless
    ``flip`` reverses the base side.
    """
    if base.edge(base_edge).is_loop:
        raise LoopTwoSum(f"base edge {base_edge!r} is a loop")
    return _glue_along_edge(base, base_edge, patch, patch_edge, flip)


def recolor_subset(g: ColoredMultigraph, s: Iterable[str], new_color: str) -> ColoredMultigraph:
    """Demote a same-colored set of regular edges to zero edges of new_color."""
    ids = {str(x) for x in s}
    if not ids:
        return g
    colors = set()
    for eid in sorted(ids):
        e = g.edge(eid)
        if e.is_zero or e.is_pointed:
            raise NotRegular(f"edge {eid!r} is not a regular edge")
        colors.add(e.color)
    if len(colors) > 1:
        raise MixedColors(f"edges span colors {sorted(colors)}")
    if new_color == POINTED_COLOR:
        raise ColorClash(f"{POINTED_COLOR!r} cannot be used as a zero color")
    edges = []
    for e in g.edges:
        if e.id in ids:
            edges.append(EdgeRecord(e.id, e.u, e.v, new_color, True, False))
        else:
            edges.append(e)
    return ColoredMultigraph(edges, extra_vertices=g.vertex_set)
