"""Path machinery: separation, collider paths, discriminating paths.

All path enumeration here is exact and exponential in the worst case;
the graphs this package targets are small (tens of nodes). Where a
faster route exists (walk-based separation on circle-free graphs) it is
kept alongside the definition-literal one and the two are cross-checked
in the tests rather than trusted blindly.
"""

from .graph import (
    ARROW,
    CIRC,
    TAIL,
    ancestors_of_set,
    descendants,
    possible_ancestors_of_set,
)

# A loner interior node on a two-edge path must satisfy both the
# first-node and the last-node clause of the relaxed collider-path
# shape. Flip to require only one of them.
STRICT_SINGLE_INTERIOR = True


def is_collider(g, u, v, w):
    """v is a collider between u and w (arrowheads at v on both edges)."""
    return g.mark(u, v) == ARROW and g.mark(w, v) == ARROW


def is_collider_path(g, path):
    """Every non-endpoint of path is a collider on it. Needs >= 2 edges."""
    if len(path) < 3:
        return False
    for i in range(len(path) - 1):
        if not g.has_edge(path[i], path[i + 1]):
            return False
    return all(
        is_collider(g, path[i - 1], path[i], path[i + 1])
        for i in range(1, len(path) - 1)
    )


def is_unshielded_path(g, path):
    return all(
        not g.has_edge(path[i - 1], path[i + 1]) for i in range(1, len(path) - 1)
    )


def unshielded_colliders(g):
    """Canonical (u, v, w) triples: collider at v, u and w non-adjacent."""
    out = set()
    for v in g.nodes:
        nb = g.adj(v)
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if g.has_edge(u, w):
                    continue
                if g.mark(u, v) == ARROW and g.mark(w, v) == ARROW:
                    out.add((u, v, w))
    return out


# -- m-separation ---------------------------------------------------------


def _iter_simple_paths(g, x, y):
    stack = [(x,)]
    while stack:
        path = stack.pop()
        for u in g.adj(path[-1]):
            if u in path:
                continue
            if u == y:
                yield path + (u,)
            else:
                stack.append(path + (u,))


def _definite_status(g, path):
    """Each interior classified 'collider' / 'noncollider', or None.

    A node of undecidable status makes the whole path undecidable.
    """
    status = []
    for i in range(1, len(path) - 1):
        u, v, w = path[i - 1], path[i], path[i + 1]
        left, right = g.mark(u, v), g.mark(w, v)
        if left == ARROW and right == ARROW:
            status.append("collider")
        elif left == TAIL or right == TAIL:
            status.append("noncollider")
        elif left == CIRC and right == CIRC and not g.has_edge(u, w):
            status.append("noncollider")
        else:
            return None
    return status


def m_separated(g, x, y, z, _desc=None):
    """No definite status path between x and y is m-connecting given z.

    A definite status path connects when none of its definite
    non-colliders is in z and every collider has a descendant in z.
    """
    z = set(z)
    assert x != y and x not in z and y not in z
    desc = _desc if _desc is not None else {}
    for path in _iter_simple_paths(g, x, y):
        status = _definite_status(g, path)
        if status is None:
            continue
        blocked = False
        for i, st in enumerate(status):
            v = path[i + 1]
            if st == "noncollider":
                if v in z:
                    blocked = True
                    break
            else:
                if v not in desc:
                    desc[v] = descendants(g, v)
                if not (desc[v] & z):
                    blocked = True
                    break
        if not blocked:
            return False
    return True


def m_separated_walk(g, x, y, z):
    """Walk-state reachability version of m_separated.

    Only sound on circle-free graphs, where every path has definite
    status. State: (node, arrived-with-arrowhead).
    """
    assert not g.has_circles()
    z = set(z)
    anz = ancestors_of_set(g, z)
    seen = set()
    stack = []
    for u in g.adj(x):
        stack.append((u, g.mark(x, u) == ARROW))
    while stack:
        v, arr = stack.pop()
        if v == y:
            return False
        if (v, arr) in seen:
            continue
        seen.add((v, arr))
        for w in g.adj(v):
            collider = arr and g.mark(w, v) == ARROW
            if collider:
                if v not in anz:
                    continue
            elif v in z:
                continue
            stack.append((w, g.mark(v, w) == ARROW))
    return True


# -- minimal collider paths ------------------------------------------------


def _has_collider_subsequence(g, path):
    """Some proper subsequence of path (same endpoints) is a collider path."""
    interior = list(path[1:-1])
    n = len(interior)
    for mask in range((1 << n) - 1):
        seq = [path[0]]
        seq.extend(interior[i] for i in range(n) if mask & (1 << i))
        seq.append(path[-1])
        if len(seq) < 3:
            continue
        if is_collider_path(g, tuple(seq)):
            return True
    return False


def is_minimal_collider_path(g, path):
    if g.has_edge(path[0], path[-1]):
        return False
    if not is_collider_path(g, path):
        return False
    return not _has_collider_subsequence(g, path)


def minimal_collider_paths(g):
    """All minimal collider paths, smaller endpoint first, sorted."""
    out = []
    for a in g.nodes:
        for b in g.nodes:
            if g.index(a) >= g.index(b) or g.has_edge(a, b):
                continue
            stack = [(a,)]
            while stack:
                path = stack.pop()
                last = path[-1]
                for u in g.adj(last):
                    if u in path:
                        continue
                    if len(path) >= 2 and not is_collider(
                        g, path[-2], last, u
                    ):
                        continue
                    if u == b:
                        cand = path + (u,)
                        if len(cand) >= 3 and not _has_collider_subsequence(
                            g, cand
                        ):
                            out.append(cand)
                    else:
                        stack.append(path + (u,))
    key = lambda p: (len(p),) + tuple(g.index(v) for v in p)
    return sorted(out, key=key)


# -- discriminating paths ---------------------------------------------------


def iter_discriminating_paths(g, collider_only=False):
    """Yield paths (a, q1, ..., qk, b), k >= 2, where a and b are
    non-adjacent, q1..q_{k-1} are colliders on the path and parents of
    b, and qk is adjacent to b. With collider_only, qk must also be a
    collider on the path.
    """
    for b in g.nodes:
        pa = set(g.parents(b))
        for a in g.nodes:
            if a == b or g.has_edge(a, b):
                continue
            stack = [(a,)]
            while stack:
                path = stack.pop()
                last = path[-1]
                if len(path) >= 3 and g.has_edge(last, b):
                    if not collider_only or (
                        g.mark(path[-2], last) == ARROW
                        and g.mark(b, last) == ARROW
                    ):
                        yield path + (b,)
                for u in g.adj(last):
                    if u == b or u in path:
                        continue
                    # extending makes `last` an interior: a collider and
                    # a parent of b
                    if len(path) >= 2:
                        if last not in pa:
                            continue
                        if not is_collider(g, path[-2], last, u):
                            continue
                    stack.append(path + (u,))


def discriminated_collider_triples(g):
    """Canonical (q_{k-1}, qk, b) triples over all discriminating
    collider paths of g."""
    out = set()
    for p in iter_discriminating_paths(g, collider_only=True):
        out.add((p[-3], p[-2], p[-1]))
    return out


# -- relaxed (circle-tolerant) collider paths -------------------------------


def _acp_first(g, p):
    q0, q1, q2 = p[0], p[1], p[2]
    if is_collider(g, q0, q1, q2):
        return True
    if (
        g.mark(q0, q1) == ARROW
        and g.mark(q2, q1) == CIRC
        and g.mark(q1, q2) == ARROW
        and g.has_edge(q0, q2)
        and g.mark(q0, q2) == CIRC
    ):
        return True
    if (
        g.mark(q0, q1) == CIRC
        and g.mark(q2, q1) == ARROW
        and g.has_edge(q0, q2)
        and g.mark(q0, q2) == ARROW
    ):
        return True
    return False


def _acp_mid(g, p, i):
    a, v, b = p[i - 1], p[i], p[i + 1]
    if is_collider(g, a, v, b):
        return True
    c = p[i + 2]
    # arrowhead into v, circle at v toward b with an arrowhead at b, and
    # a chord two steps ahead with an arrowhead back into a
    if (
        g.mark(a, v) == ARROW
        and g.mark(b, v) == CIRC
        and g.mark(v, b) == ARROW
        and g.has_edge(a, c)
        and g.mark(c, a) == ARROW
        and g.mark(a, c) == CIRC
    ):
        return True
    # arrowhead back into a over a circle at v, arrowhead into v from b,
    # and a chord a o-> b
    if (
        g.mark(v, a) == ARROW
        and g.mark(a, v) == CIRC
        and g.mark(b, v) == ARROW
        and g.has_edge(a, b)
        and g.mark(b, a) == CIRC
        and g.mark(a, b) == ARROW
    ):
        return True
    return False


def _acp_last(g, p):
    a, v, b = p[-3], p[-2], p[-1]
    if is_collider(g, a, v, b):
        return True
    if (
        g.mark(a, v) == ARROW
        and g.mark(b, v) == CIRC
        and g.has_edge(a, b)
        and g.mark(b, a) == ARROW
    ):
        return True
    if (
        g.mark(v, a) == ARROW
        and g.mark(a, v) == CIRC
        and g.mark(b, v) == ARROW
        and g.has_edge(a, b)
        and g.mark(b, a) == CIRC
    ):
        return True
    return False


def is_almost_collider_path(g, path, strict_single_interior=None):
    """Collider path with circle-shaped exceptions at interior nodes.

    The first, middle and last interior positions each admit one of
    three local shapes (plain collider or one of two partially oriented
    configurations with a chord). A single interior node is both the
    first and the last position; by default it must satisfy both
    clauses.
    """
    if strict_single_interior is None:
        strict_single_interior = STRICT_SINGLE_INTERIOR
    k = len(path) - 1
    if k < 2:
        return False
    for i in range(k):
        if not g.has_edge(path[i], path[i + 1]):
            return False
    if k == 2:
        if strict_single_interior:
            return _acp_first(g, path) and _acp_last(g, path)
        return _acp_first(g, path) or _acp_last(g, path)
    if not _acp_first(g, path):
        return False
    if not _acp_last(g, path):
        return False
    return all(_acp_mid(g, path, i) for i in range(2, k - 1))


def iter_almost_discriminating_paths(g):
    """Yield paths (a, q1, ..., qk, b): a, b non-adjacent, q1..q_{k-1}
    parents of b, and (a, q1, ..., qk) an almost collider path."""
    for b in g.nodes:
        pa = set(g.parents(b))
        for a in g.nodes:
            if a == b or g.has_edge(a, b):
                continue
            stack = [(a,)]
            while stack:
                path = stack.pop()
                last = path[-1]
                if (
                    len(path) >= 3
                    and g.has_edge(last, b)
                    and is_almost_collider_path(g, path)
                ):
                    yield path + (b,)
                for u in g.adj(last):
                    if u == b or u in path:
                        continue
                    if len(path) >= 2 and last not in pa:
                        continue
                    stack.append(path + (u,))


# -- inducing paths ----------------------------------------------------------


def has_inducing_path(g, a, b, latents=frozenset(), possible=False):
    """Inducing path between a and b relative to `latents`.

    Interior nodes outside `latents` must be colliders on the path, and
    every interior collider must be a (possible, if asked) ancestor of
    {a, b}.
    """
    if possible:
        anc = possible_ancestors_of_set(g, (a, b))
    else:
        anc = ancestors_of_set(g, (a, b))
    stack = [(a,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        for u in g.adj(last):
            if u in path:
                continue
            if len(path) >= 2:
                coll = is_collider(g, path[-2], last, u)
                if coll and last not in anc:
                    continue
                if not coll and last not in latents:
                    continue
            if u == b:
                if len(path) >= 2:
                    return True
                continue  # direct edge is not an inducing path here
            stack.append(path + (u,))
    return False


def is_maximal(g, possible=False):
    """No (possible) inducing path joins two non-adjacent nodes."""
    for i, a in enumerate(g.nodes):
        for b in g.nodes[i + 1:]:
            if g.has_edge(a, b):
                continue
            if has_inducing_path(g, a, b, possible=possible):
                return False
    return True


def is_maximal_pmg(g):
    """Maximality with circles: interiors need only be possible ancestors."""
    return is_maximal(g, possible=True)


# -- possibly directed paths --------------------------------------------------


def iter_unshielded_pd_paths(g, a, dst, min_edges=1):
    """Unshielded possibly directed paths from a to dst.

    Possibly directed is the all-pairs condition: no edge of g joins
    two path nodes with an arrowhead at the one earlier on the path.
    Unshielded: consecutive triples have non-adjacent ends.
    """
    if a == dst:
        return
    stack = [(a,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        for u in g.adj(last):
            if u in path:
                continue
            if len(path) >= 2 and g.has_edge(path[-2], u):
                continue
            ok = True
            for p in path:
                if g.has_edge(p, u) and g.mark(u, p) == ARROW:
                    ok = False
                    break
            if not ok:
                continue
            if u == dst:
                if len(path) >= min_edges:
                    yield path + (u,)
            else:
                stack.append(path + (u,))
