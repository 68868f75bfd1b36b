"""Brute-force equivalence-class oracle.

Enumerates every maximal ancestral graph over a skeleton by trying all
three orientations per edge and filtering. Exponential on purpose: this
is the ground truth the fast algorithms are tested against, so it stays
definition-literal and refuses inputs big enough to lie about.
"""

from itertools import product

from . import paths
from .graph import (
    ARROW,
    CIRC,
    TAIL,
    GraphError,
    MixedGraph,
    is_ancestral,
    render_pmg,
    skeleton,
)

ENUM_EDGE_CAP = 12

_EDGE_SHAPES = ((TAIL, ARROW), (ARROW, TAIL), (ARROW, ARROW))


def enumerate_mags(g):
    """All maximal ancestral graphs on the skeleton of g."""
    pairs = g.edges()
    if len(pairs) > ENUM_EDGE_CAP:
        raise GraphError(
            "class enumeration is capped at %d edges (got %d)"
            % (ENUM_EDGE_CAP, len(pairs))
        )
    out = []
    for shapes in product(_EDGE_SHAPES, repeat=len(pairs)):
        edges = [
            (x, y, mx, my) for (x, y), (mx, my) in zip(pairs, shapes)
        ]
        m = MixedGraph(g.nodes, edges)
        if is_ancestral(m) and paths.is_maximal(m):
            out.append(m)
    return out


def markov_equivalent(m1, m2, cross_check=True):
    """Same separation structure.

    Decided by skeleton plus minimal collider paths; with cross_check
    the answer is recomputed from every m-separation statement and a
    disagreement raises.
    """
    fast = bool(
        m1.nodes == m2.nodes
        and skeleton(m1) == skeleton(m2)
        and paths.minimal_collider_paths(m1) == paths.minimal_collider_paths(m2)
    )
    if cross_check:
        slow = _same_separations(m1, m2)
        if fast != slow:
            raise AssertionError(
                "equivalence deciders disagree on\n%s\n%s"
                % (render_pmg(m1), render_pmg(m2))
            )
    return fast


def _same_separations(m1, m2):
    if m1.nodes != m2.nodes or skeleton(m1) != skeleton(m2):
        return False
    nodes = m1.nodes
    for i, x in enumerate(nodes):
        for y in nodes[i + 1:]:
            rest = [v for v in nodes if v not in (x, y)]
            for mask in range(1 << len(rest)):
                z = {rest[k] for k in range(len(rest)) if mask & (1 << k)}
                if paths.m_separated(m1, x, y, z) != paths.m_separated(
                    m2, x, y, z
                ):
                    return False
    return True


def mec(m):
    """The equivalence class of m, canonically ordered."""
    target = paths.minimal_collider_paths(m)
    return [
        g
        for g in enumerate_mags(m)
        if paths.minimal_collider_paths(g) == target
    ]


def piece_holds(m, k):
    """The knowledge piece is literally true of the MAG m."""
    if not m.has_edge(k.x, k.y):
        return False
    for u, v, mark in k.orients():
        if m.mark(u, v) != mark:
            return False
    return True


def restrict(mags, pieces):
    """Class members on which every piece holds."""
    return [m for m in mags if all(piece_holds(m, k) for k in pieces)]


def consistent(mags, pieces):
    return bool(restrict(mags, pieces))


def essential_by_intersection(mags):
    """Mark-wise intersection of a non-empty class list: positions
    where all members agree keep the mark, the rest become circles."""
    if not mags:
        raise GraphError("cannot intersect an empty class")
    first = mags[0]
    for m in mags[1:]:
        if m.nodes != first.nodes or skeleton(m) != skeleton(first):
            raise GraphError("class members disagree on the skeleton")
    edges = []
    for x, y in first.edges():
        mx = first.mark(y, x)
        my = first.mark(x, y)
        for m in mags[1:]:
            if m.mark(y, x) != mx:
                mx = CIRC
            if m.mark(x, y) != my:
                my = CIRC
        # a tail only survives opposite an arrowhead that also survived,
        # so the constructor's tail-facing-circle guard cannot trip here
        edges.append((x, y, mx, my))
    return MixedGraph(first.nodes, edges)


def restricted_essential(m, pieces):
    """Intersection of the piece-restricted class of m, or None when
    the pieces are inconsistent with the class."""
    cls = restrict(mec(m), pieces)
    if not cls:
        return None
    return essential_by_intersection(cls)
