"""Colored tensor products and the substitution formula for their polynomials.

Replacing every edge of a chosen regular color in a base graph by a copy of a
pointed patch graph (glued along the pointed edge, which is then removed)
multiplies out, at the polynomial level, to a three-stage substitution:

* the regular substitution swaps the four weight variables of the replaced
  color for the four pointed polynomials of the patch,
* the splicing map collapses the resulting products of z-symbols into single
  symbols, and
* the zero substitution expands every demoted (``lambda0``-colored) edge of a
  terminal class into the symmetric sum over the terms of the patch's
  type-zero polynomial, glued in by 2-sums.

Summing over all subsets of the replaced color's edges (each subset demoted
to zero edges beforehand) reproduces the universal relative Tutte polynomial
of the product. ``verify_tensor_formula`` checks that equality by randomized
evaluation modulo the labeling ideal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from typing import Mapping

from .errors import InstanceInvalid, InvalidPartition, NotLinearInZ, TypeMismatch
from .graph import (
    POINTED_COLOR,
    RECOLOR_ZERO,
    ColoredMultigraph,
    EdgeRecord,
    _glue_along_edge,
    is_connected,
    pivot_class_key,
    recolor_subset,
    splice_all,
)
from .poly import RelPolynomial, equal_mod_ideal, monomial_key
from .pointed import (
    TYPE_C,
    TYPE_D,
    TYPE_ZERO,
    PointedGraph,
    PointedPolynomials,
    classify_pair,
    pointed_polys,
)
from .tutte import (
    ContractingSet,
    ProperLabeling,
    universal_tutte_statesum,
    validate_contracting_set,
)


@dataclass(frozen=True)
class TensorInstance:
    """A base graph, a pointed patch graph, and the color being replaced."""

    g1: ColoredMultigraph
    g2: PointedGraph
    lam: str

    def __post_init__(self):
        g1, g2, lam = self.g1, self.g2, self.lam
        if not is_connected(g1):
            raise InstanceInvalid("base graph must be connected")
        if lam in (POINTED_COLOR, RECOLOR_ZERO):
            raise InstanceInvalid(f"{lam!r} is a reserved color")
        if lam in g1.zero_colors():
            raise InstanceInvalid(f"{lam!r} colors zero edges of the base graph")
        g2_colors = set(g2.graph.regular_colors()) | set(g2.graph.zero_colors())
        if lam in g2_colors:
            raise InstanceInvalid(f"{lam!r} must not appear in the patch graph")
        reserved = {RECOLOR_ZERO}
        used = set(g1.regular_colors()) | set(g1.zero_colors()) | g2_colors
        if used & reserved:
            raise InstanceInvalid(f"reserved colors in use: {sorted(used & reserved)}")
        if g1.pointed_edge() is not None:
            raise InstanceInvalid("base graph cannot contain a pointed edge")
        # copy ids live in the namespace "<lambda-edge id>/..."; it must be free
        names = set(g1.edge_ids()) | set(g1.vertex_set)
        for f in self.lambda_edge_ids():
            taken = [n for n in names if n.startswith(f"{f}/")]
            if taken:
                raise InstanceInvalid(f"base ids {taken[:3]} collide with the copy namespace of {f!r}")

    def lambda_edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.g1.edges if e.color == self.lam and not e.is_zero)

    def copy_graph(self, f: str) -> PointedGraph:
        """The standalone namespaced copy of the patch assigned to base edge f."""
        return _copy_graph_cached(self.g2, f)

    def copy_edge_ids(self, f: str) -> frozenset:
        return frozenset(f"{f}/{e.id}" for e in self.g2.graph.edges if e.id != self.g2.pointed_id)


@lru_cache(maxsize=4096)
def _copy_graph_cached(g2: PointedGraph, f: str) -> PointedGraph:
    edges = [
        EdgeRecord(f"{f}/{e.id}", f"{f}/{e.u}", f"{f}/{e.v}", e.color, e.is_zero, e.is_pointed)
        for e in g2.graph.edges
    ]
    return PointedGraph(ColoredMultigraph(edges))


@lru_cache(maxsize=1024)
def tensor_product(ti: TensorInstance, flip: bool = False) -> ColoredMultigraph:
    """Replace every lambda-edge of the base by a copy of the patch minus its
    pointed edge, glued at the pointed edge's endpoints."""
    g = ti.g1
    pe = ti.g2.graph.edge(ti.g2.pointed_id)
    p1, p2 = pe.endpoints()
    for f in ti.lambda_edge_ids():
        base_edge = g.edge(f)
        b1, b2 = base_edge.endpoints()
        if flip:
            b1, b2 = b2, b1
        target = {f"{f}/{p1}": b1, f"{f}/{p2}": b2}
        edges = [e for e in g.edges if e.id != f]
        for e in ti.g2.graph.edges:
            if e.id == ti.g2.pointed_id:
                continue
            u = target.get(f"{f}/{e.u}", f"{f}/{e.u}")
            v = target.get(f"{f}/{e.v}", f"{f}/{e.v}")
            edges.append(EdgeRecord(f"{f}/{e.id}", u, v, e.color, e.is_zero, e.is_pointed))
        g = ColoredMultigraph(edges, extra_vertices=g.vertex_set)
    return g


def product_labeling(ti: TensorInstance, prod: ColoredMultigraph) -> ProperLabeling:
    """Labeling of the product that keeps each copy's edges consecutive.

    Regular base edges get multiples of the patch's edge count; the regular
    edges of the copy replacing a base edge fill the block of labels just
    below that edge's multiple.
    """
    m = len(ti.g2.graph.edges)
    lam_ids = set(ti.lambda_edge_ids())
    labels = {eid: 0 for eid in prod.zero_ids()}
    for k, f in enumerate(sorted(ti.g1.regular_ids()), start=1):
        if f in lam_ids:
            base = (k - 1) * m
            copy_regular = sorted(
                eid for eid in prod.edge_ids()
                if eid.startswith(f"{f}/") and not prod.edge(eid).is_zero
            )
            for offset, eid in enumerate(copy_regular, start=1):
                labels[eid] = base + offset
        else:
            labels[f] = k * m
    return ProperLabeling(labels)


@dataclass(frozen=True)
class InducedPartition:
    """Partition of the base edge set induced by a product contracting set."""

    c1: frozenset
    d1: frozenset
    h1_hat: frozenset
    copy_types: Mapping[str, str]

    @property
    def demoted(self) -> frozenset:
        """The lambda-edges sent to the zero side."""
        return frozenset(f for f, t in self.copy_types.items() if t == TYPE_ZERO)


def induced_partition(ti: TensorInstance, cs: ContractingSet, flip: bool = False) -> InducedPartition:
    """Classify each copy's restriction and pull the contracting set back to the base."""
    prod = tensor_product(ti, flip=flip)
    validate_contracting_set(prod, cs)
    lam_ids = ti.lambda_edge_ids()
    c1, d1, h1 = set(), set(), set(e.id for e in ti.g1.edges if e.is_zero)
    copy_types = {}
    for f in lam_ids:
        copy = ti.copy_graph(f)
        ids = ti.copy_edge_ids(f)
        cs_f = ContractingSet(cs.contracting & ids, cs.deleting & ids)
        t = classify_pair(copy, cs_f)
        copy_types[f] = t
        if t == TYPE_C:
            c1.add(f)
        elif t == TYPE_D:
            d1.add(f)
        else:
            h1.add(f)
    lam_set = set(lam_ids)
    for e in ti.g1.edges:
        if e.is_zero or e.id in lam_set:
            continue
        (c1 if e.id in cs.contracting else d1).add(e.id)
    part = InducedPartition(frozenset(c1), frozenset(d1), frozenset(h1), copy_types)
    # the pulled-back pair must itself be a contracting set of the demoted base
    base = recolor_subset(ti.g1, part.demoted, RECOLOR_ZERO)
    validate_contracting_set(base, ContractingSet(part.c1, part.d1))
    return part


def compose_contracting_set(
    ti: TensorInstance,
    c1_partition: tuple[frozenset, frozenset, frozenset],
    per_copy: Mapping[str, ContractingSet],
    flip: bool = False,
) -> ContractingSet:
    """Inverse of induced_partition: assemble a product contracting set."""
    c1, d1, s = (frozenset(x) for x in c1_partition)
    lam_ids = set(ti.lambda_edge_ids())
    if (c1 | d1 | s) - set(ti.g1.regular_ids()) or (s - lam_ids):
        raise InvalidPartition("partition must cover regular base edges with demotions among lambda-edges")
    base = recolor_subset(ti.g1, s, RECOLOR_ZERO)
    validate_contracting_set(base, ContractingSet(c1, d1))
    want = {f: (TYPE_C if f in c1 else TYPE_D if f in d1 else TYPE_ZERO) for f in lam_ids}
    c, d = set(c1 - lam_ids), set(d1 - lam_ids)
    for f in sorted(lam_ids):
        if f not in per_copy:
            raise InvalidPartition(f"missing per-copy choice for {f!r}")
        copy = ti.copy_graph(f)
        cs_f = per_copy[f]
        got = classify_pair(copy, cs_f)
        if got != want[f]:
            raise TypeMismatch(f"copy {f!r} has type {got}, required {want[f]}")
        c |= set(cs_f.contracting)
        d |= set(cs_f.deleting)
    cs = ContractingSet(frozenset(c), frozenset(d))
    validate_contracting_set(tensor_product(ti, flip=flip), cs)
    return cs


# -- the three substitution maps --------------------------------------------------------


def beta_lambda(p: RelPolynomial, lam: str, pp: PointedPolynomials) -> RelPolynomial:
    """Swap the four weight variables of the replaced color for the pointed
    polynomials: x -> T_L, X -> T_-, y -> T_C, Y -> T_/."""
    images = {"x": pp.tl, "X": pp.tminus, "y": pp.tc, "Y": pp.tslash}
    powers: dict[tuple[str, int], RelPolynomial] = {}

    def power(kind, exp):
        if (kind, exp) not in powers:
            powers[(kind, exp)] = images[kind] ** exp
        return powers[(kind, exp)]

    out = RelPolynomial.zero()
    for (vars_, zs), coeff in p.terms():
        rest = [(vc, e) for vc, e in vars_ if vc[1] != lam]
        factor = RelPolynomial.monomial(coeff, rest, zs)
        for (kind, color), exp in vars_:
            if color == lam:
                factor = factor * power(kind, exp)
        out = out + factor
    return out


def sigma(p: RelPolynomial) -> RelPolynomial:
    """Collapse each monomial's z-multiset into a single spliced class."""
    terms: dict = {}
    for (vars_, zs), coeff in p.terms():
        if len(zs) > 1:
            key = pivot_class_key(splice_all([k.representative for k in zs]))
            m = monomial_key(vars_, (key,))
        else:
            m = (vars_, zs)
        terms[m] = terms.get(m, 0) + coeff
    return RelPolynomial(terms)


def decompose_z_linear(p: RelPolynomial) -> list[tuple[RelPolynomial, "object"]]:
    """Write a z-linear polynomial as a list of (coefficient polynomial, key)."""
    buckets: dict = {}
    for (vars_, zs), coeff in p.terms():
        if len(zs) != 1:
            raise NotLinearInZ("expected exactly one z-symbol per monomial")
        key = zs[0]
        buckets.setdefault(key, {})[(vars_, ())] = coeff
    return [(RelPolynomial(t), k) for k, t in sorted(buckets.items(), key=lambda it: it[0].codes)]


def beta_zero(p: RelPolynomial, t0: RelPolynomial, flip: bool = False) -> RelPolynomial:
    """Expand every demoted edge of each class via the type-zero polynomial.

    Each ``lambda0``-colored edge of a class representative is glued, by a
    2-sum along the patch's pointed edge, to one term of t0; the results are
    summed over all assignments of t0 terms to demoted edges. Classes without
    demoted edges pass through; with a zero t0 they are annihilated.
    """
    parts = decompose_z_linear(t0) if not t0.is_zero else []
    out = RelPolynomial.zero()
    for (vars_, zs), coeff in p.terms():
        if len(zs) != 1:
            raise NotLinearInZ("expected exactly one z-symbol per monomial")
        key = zs[0]
        rep = key.representative
        demoted = sorted(e.id for e in rep.edges if e.color == RECOLOR_ZERO)
        if not demoted:
            out = out + RelPolynomial.monomial(coeff, vars_, zs)
            continue
        base_poly = RelPolynomial.monomial(coeff, vars_, ())
        for assignment in iter_product(range(len(parts)), repeat=len(demoted)):
            glued = rep
            weight = base_poly
            for eid, j in zip(demoted, assignment):
                pj, key_j = parts[j]
                patch = key_j.representative
                nu_id = next(e.id for e in patch.edges if e.is_pointed)
                glued = _glue_along_edge(glued, eid, patch, nu_id, flip=flip)
                weight = weight * pj
            out = out + weight * RelPolynomial.z_symbol(pivot_class_key(glued))
    return out


def substitution_rhs(ti: TensorInstance, flip: bool = False) -> RelPolynomial:
    """The substitution pipeline side: sum over demoted subsets of the replaced color."""
    pp = pointed_polys(ti.g2)
    lam_ids = ti.lambda_edge_ids()
    total = RelPolynomial.zero()
    for mask in range(1 << len(lam_ids)):
        s = frozenset(lam_ids[i] for i in range(len(lam_ids)) if mask >> i & 1)
        g1s = recolor_subset(ti.g1, s, RECOLOR_ZERO)
        u = universal_tutte_statesum(g1s)
        total = total + beta_zero(sigma(beta_lambda(u, ti.lam, pp)), pp.t0, flip=flip)
    return total


@dataclass(frozen=True)
class VerifyReport:
    equal: bool
    structural_equal: bool
    lhs: RelPolynomial
    rhs: RelPolynomial
    trials: int
    seed: int
    elapsed: float

    @property
    def lhs_text(self) -> str:
        return self.lhs.render()

    @property
    def rhs_text(self) -> str:
        return self.rhs.render()


def verify_tensor_formula(
    ti: TensorInstance,
    trials: int = 32,
    seed: int = 0,
    flip: bool = False,
    corrupt_rhs: bool = False,
) -> VerifyReport:
    """Compare the product's polynomial against the substitution formula.

    The left side is computed directly on the product graph under the
    copy-block labeling; the right side through the substitution pipeline.
    ``corrupt_rhs`` injects a fault (negative control for the test suite).
    """
    t_start = time.perf_counter()
    prod = tensor_product(ti, flip=flip)
    lhs = universal_tutte_statesum(prod, product_labeling(ti, prod))
    rhs = substitution_rhs(ti, flip=flip)
    if corrupt_rhs:
        rhs = rhs + RelPolynomial.const(1)
    structural = lhs == rhs
    equal = structural or equal_mod_ideal(lhs, rhs, trials=trials, seed=seed)
    return VerifyReport(
        equal=equal,
        structural_equal=structural,
        lhs=lhs,
        rhs=rhs,
        trials=trials,
        seed=seed,
        elapsed=time.perf_counter() - t_start,
    )
