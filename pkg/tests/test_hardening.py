"""Adversarial and cross-route checks beyond the per-module suites."""

import random

from conftest import G
from oracles import colored_isomorphic
from reltutte import (
    ColoredMultigraph,
    EdgeRecord,
    RelPolynomial,
    canonical_code,
    pivot_class_key,
    universal_tutte_statesum,
    vertex_pivot,
    z_symbol,
)
from reltutte.graph import blocks, block_code
from reltutte.randgen import (
    RandomInstanceSpec,
    derived_seed,
    random_graph,
    random_pointed_graph,
)
from reltutte.tutte import (
    canonical_labeling,
    enumerate_contracting_sets,
    terminal_graph,
    weight_polynomial,
    activities,
)


def _cycle(colors, prefix="e"):
    n = len(colors)
    edges = [
        EdgeRecord(f"{prefix}{i}", str(i), str((i + 1) % n), c, True, False)
        for i, c in enumerate(colors)
    ]
    return ColoredMultigraph(edges)


def test_canonical_code_separates_colored_cycles():
    # same color multiset, different cyclic arrangement
    aabb = _cycle(["z0", "z0", "z1", "z1"])
    abab = _cycle(["z0", "z1", "z0", "z1"])
    assert not colored_isomorphic(aabb, abab)
    assert canonical_code(aabb) != canonical_code(abab)
    assert pivot_class_key(aabb) != pivot_class_key(abab)
    # rotations and reflections collapse
    rotated = _cycle(["z1", "z0", "z0", "z1"])
    assert canonical_code(rotated) == canonical_code(aabb)


def test_canonical_code_on_symmetric_cycles():
    ten = _cycle(["z0"] * 10)
    relabeled = ColoredMultigraph(
        [EdgeRecord(f"f{i}", f"v{(3 * i) % 10}", f"v{(3 * (i + 1)) % 10}", "z0", True, False) for i in range(10)]
    )
    assert canonical_code(ten) == canonical_code(relabeled)
    assert block_code(blocks(ten)[0]) == block_code(blocks(relabeled)[0])


def test_canonical_code_loop_parallel_mixtures():
    # moving the loop to the other endpoint of the 2-cycle is a vertex pivot
    # (split at the cutpoint, re-splice at the other vertex): same key
    a = G("edge p1 1 2 color=z0 zero\nedge p2 1 2 color=z0 zero\nedge l 1 1 color=z1 zero")
    b = G("edge p1 8 9 color=z0 zero\nedge p2 9 8 color=z0 zero\nedge l 9 9 color=z1 zero")
    assert pivot_class_key(a) == pivot_class_key(b)
    # but the whole-graph canonical codes still see non-isomorphic graphs as
    # different when the loop colors disagree
    c = G("edge p1 1 2 color=z0 zero\nedge p2 1 2 color=z0 zero\nedge l 1 1 color=z0 zero")
    assert pivot_class_key(c) != pivot_class_key(a)


def test_vertex_pivot_reattach_at_cutpoint_copy():
    bowtie = G(
        """
        edge a1 u p color=z0 zero
        edge a2 p q color=z0 zero
        edge a3 q u color=z0 zero
        edge b1 u r color=z0 zero
        edge b2 r s color=z0 zero
        edge b3 s u color=z0 zero
        """
    )
    key = pivot_class_key(bowtie)
    # b equal to the cutpoint: identify the detached side with the remaining copy
    got = vertex_pivot(bowtie, "u", ("p", "u"))
    assert pivot_class_key(got) == key


def test_statesum_accepts_disconnected_graphs():
    g = G(
        """
        edge m 1 2 color=mu
        edge h 1 2 color=z0 zero
        edge k 3 4 color=z1 zero
        """
    )
    p = universal_tutte_statesum(g)
    keys = {zs[0].codes for (_, zs), _ in p.terms()}
    assert keys == {("bridge(z1)", "loop(z0)"), ("bridge(z0)", "bridge(z1)")}


def test_statesum_assembled_from_activities_route():
    # third route: sum of weight(activities) * z(terminal) over enumerated sets
    for i in range(25):
        rng = random.Random(derived_seed(51, i))
        g = random_graph(
            rng,
            RandomInstanceSpec(vertices=(2, 5), regular_edges=(1, 6), zero_edges=(0, 2), connected=False),
        )
        lab = canonical_labeling(g)
        total = RelPolynomial.zero()
        for cs in enumerate_contracting_sets(g, lab):
            w = weight_polynomial(activities(g, lab, cs), g)
            total = total + w * z_symbol(pivot_class_key(terminal_graph(g, lab, cs)))
        assert total == universal_tutte_statesum(g, lab)


def test_pointed_status_matches_direct_inspection():
    from reltutte.graph import is_bridge, is_loop
    from reltutte.pointed import universal_with_pointed_zero

    for i in range(20):
        rng = random.Random(derived_seed(52, i))
        pg = random_pointed_graph(rng, max_regular=4, zero_edges=(0, 2))
        u = universal_with_pointed_zero(pg)
        for key in u.zkeys():
            rep = key.representative
            nu = [e for e in rep.edges if e.is_pointed]
            assert len(nu) == 1
            e = nu[0]
            want = "loop" if is_loop(rep, e.id) else "bridge" if is_bridge(rep, e.id) else "inner"
            assert key.pointed_status() == want
