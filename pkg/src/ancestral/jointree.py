"""Join trees over maximal cliques, and MAG sampling from a class.

A partial mixed graph whose skeleton is chordal, that is ancestral,
maximal, rule-closed and free of minimal collider paths can be oriented
into a member of its equivalence class through a tree of its maximal
cliques: direct the tree edges by the clique-level gamma relation,
reshape the tree until nothing points into the undirected surroundings
of a chosen anchor clique, fan the remaining undirected tree edges out
from their unique sources, push the resulting clique order down onto
the graph, complete the requested edge, and sweep leftover circles to
arrowheads. sampleMag composes this per component and post-validates
the result instead of trusting any single step.
"""

from .graph import (
    ARROW,
    CIRC,
    TAIL,
    ConflictError,
    GraphError,
    circle_component,
    induced_subgraph,
    is_ancestral,
)
from .paths import is_maximal, is_maximal_pmg, minimal_collider_paths
from .rules import ALL_RULES, RuleConflict, close_under
from .essential import Knowledge, add_bg_knowledge, bidirected_pieces


class NotChordal(GraphError):
    """The skeleton has a chordless cycle of length four or more."""


class NoSuchMag(GraphError):
    """No member of the equivalence class carries the requested marks."""


# -- chordality and maximal cliques ------------------------------------


def mcs_order(g):
    """Maximum-cardinality search order over all nodes of g.

    Ties broken by the graph's canonical node order, so the result is
    deterministic for a given graph value.
    """
    weight = {v: 0 for v in g.nodes}
    order = []
    seen = set()
    while len(order) < len(g.nodes):
        best = min(
            (v for v in g.nodes if v not in seen),
            key=lambda v: (-weight[v], g.index(v)),
        )
        order.append(best)
        seen.add(best)
        for u in g.adj(best):
            if u not in seen:
                weight[u] += 1
    return order


def chordality_witness(g):
    """A chordless pair witnessing non-chordality, or None.

    Along a maximum-cardinality search order, every node's already
    numbered neighbors must form a clique; the first missing edge of
    such a would-be clique is returned.
    """
    pos = {}
    for i, v in enumerate(mcs_order(g)):
        pos[v] = i
        earlier = sorted(
            (u for u in g.adj(v) if u in pos and pos[u] < i), key=g.index
        )
        for a_i, a in enumerate(earlier):
            for b in earlier[a_i + 1:]:
                if not g.has_edge(a, b):
                    return (a, b)
    return None


def is_chordal(g):
    return chordality_witness(g) is None


def maximal_cliques(g):
    """Maximal cliques of a chordal graph, canonically ordered.

    Candidates are each node together with its earlier search
    neighbors; dropping candidates contained in another leaves exactly
    the maximal cliques. Raises NotChordal when the search order
    disproves chordality, since the extraction is only valid then.
    """
    witness = chordality_witness(g)
    if witness is not None:
        raise NotChordal(
            "skeleton has no chord between %s and %s" % witness
        )
    pos = {}
    candidates = []
    for i, v in enumerate(mcs_order(g)):
        pos[v] = i
        candidates.append(
            frozenset([v] + [u for u in g.adj(v) if u in pos and pos[u] < i])
        )
    cliques = [
        c for c in candidates
        if not any(c < other for other in candidates)
    ]
    return sorted(set(cliques), key=lambda c: tuple(sorted(c)))


# -- the gamma relation on clique pairs ---------------------------------


def gamma_witness(g, ci, cj):
    """Arrowhead witness (a, b) when gamma(ci, cj) holds, else None.

    Requires a nonempty overlap, every overlap node pointing a directed
    edge at every node of cj outside the overlap, and some edge from
    ci outside the overlap carrying an arrowhead into the overlap.
    """
    lam = ci & cj
    if not lam:
        return None
    for b in lam:
        for c in cj - lam:
            if not (g.mark(b, c) == ARROW and g.mark(c, b) == TAIL):
                return None
    for a in sorted(ci - lam):
        for b in sorted(lam):
            if g.has_edge(a, b) and g.mark(a, b) == ARROW:
                return (a, b)
    return None


# -- join trees ---------------------------------------------------------


class JoinTree:
    """Tree over maximal cliques with per-edge direction state.

    Cliques are indexed by their position in the canonical clique
    order. Edge state is "fwd" (lower index toward higher), "rev", or
    "none"; until orientTree runs, the state of every edge mirrors the
    gamma relation of its endpoint cliques.
    """

    def __init__(self, host, cliques, edge_pairs):
        self.host = host
        self.cliques = tuple(cliques)
        self.gamma = {}
        n = len(self.cliques)
        for i in range(n):
            for j in range(n):
                if i != j:
                    self.gamma[(i, j)] = (
                        gamma_witness(host, self.cliques[i], self.cliques[j])
                        is not None
                    )
        self.edges = {}
        for i, j in edge_pairs:
            self.add_edge(i, j)

    def copy(self):
        t = JoinTree.__new__(JoinTree)
        t.host = self.host
        t.cliques = self.cliques
        t.gamma = self.gamma
        t.edges = dict(self.edges)
        return t

    def __eq__(self, other):
        if not isinstance(other, JoinTree):
            return NotImplemented
        return self.cliques == other.cliques and self.edges == other.edges

    def __repr__(self):
        parts = []
        for (i, j), state in sorted(self.edges.items()):
            tok = {"fwd": "->", "rev": "<-", "none": "--"}[state]
            parts.append("%d%s%d" % (i, tok, j))
        return "JoinTree(%s)" % " ".join(parts)

    # -- structure ------------------------------------------------

    def add_edge(self, a, b):
        key = (a, b) if a < b else (b, a)
        if key in self.edges:
            raise GraphError("tree edge %s already present" % (key,))
        fwd, rev = self.gamma[key], self.gamma[(key[1], key[0])]
        if fwd and rev:
            raise GraphError(
                "gamma holds both ways between cliques %d and %d" % key
            )
        self.edges[key] = "fwd" if fwd else ("rev" if rev else "none")

    def remove_edge(self, a, b):
        key = (a, b) if a < b else (b, a)
        del self.edges[key]

    def has_edge(self, a, b):
        key = (a, b) if a < b else (b, a)
        return key in self.edges

    def neighbors(self, v):
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return sorted(out)

    def directed_from(self, a, b):
        """True when the a-b tree edge is directed a toward b."""
        if a < b:
            return self.edges[(a, b)] == "fwd"
        return self.edges[(b, a)] == "rev"

    def undirected(self, a, b):
        key = (a, b) if a < b else (b, a)
        return self.edges[key] == "none"

    def undirected_edges(self):
        return sorted(k for k, state in self.edges.items() if state == "none")

    def set_direction(self, a, b):
        """Direct a still-undirected tree edge a toward b."""
        key = (a, b) if a < b else (b, a)
        if self.edges[key] != "none":
            raise GraphError("tree edge %s already directed" % (key,))
        self.edges[key] = "fwd" if a < b else "rev"

    def parents(self, v):
        return sorted(
            u for u in self.neighbors(v)
            if not self.undirected(u, v) and self.directed_from(u, v)
        )

    def children(self, v):
        return sorted(
            u for u in self.neighbors(v)
            if not self.undirected(u, v) and self.directed_from(v, u)
        )

    def ancestors(self, v):
        """Cliques with a directed tree path into v, v included."""
        out = {v}
        stack = [v]
        while stack:
            cur = stack.pop()
            for p in self.parents(cur):
                if p not in out:
                    out.add(p)
                    stack.append(p)
        return out

    def descendants(self, v):
        out = {v}
        stack = [v]
        while stack:
            cur = stack.pop()
            for c in self.children(cur):
                if c not in out:
                    out.add(c)
                    stack.append(c)
        return out

    def tree_path(self, a, b):
        """The unique a-b path as a tuple of clique indices."""
        prev = {a: None}
        queue = [a]
        while queue:
            cur = queue.pop(0)
            if cur == b:
                path = [cur]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return tuple(reversed(path))
            for u in self.neighbors(cur):
                if u not in prev:
                    prev[u] = cur
                    queue.append(u)
        raise GraphError("cliques %d and %d are in different trees" % (a, b))

    def distance(self, a, b):
        return len(self.tree_path(a, b)) - 1

    def triples(self):
        """Ordered triples (i, j, k) spanning two tree edges."""
        out = []
        for j in range(len(self.cliques)):
            around = self.neighbors(j)
            for i in around:
                for k in around:
                    if i != k:
                        out.append((i, j, k))
        return sorted(out)

    def assert_running_intersection(self):
        n = len(self.cliques)
        for i in range(n):
            for j in range(i + 1, n):
                lam = self.cliques[i] & self.cliques[j]
                if not lam:
                    continue
                for v in self.tree_path(i, j):
                    if not lam <= self.cliques[v]:
                        raise GraphError(
                            "running intersection fails on cliques "
                            "%d..%d at %d" % (i, j, v)
                        )


def build_join_tree(g):
    """Join tree for a connected chordal graph.

    Spanning tree over the clique overlap graph, heaviest overlaps
    first with canonical tie-breaks; the running intersection property
    of the result is asserted, not assumed.
    """
    cliques = maximal_cliques(g)
    n = len(cliques)
    candidates = []
    for i in range(n):
        for j in range(i + 1, n):
            overlap = len(cliques[i] & cliques[j])
            if overlap:
                candidates.append((-overlap, i, j))
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    picked = []
    for _, i, j in sorted(candidates):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            picked.append((i, j))
    if len(picked) != n - 1:
        raise GraphError("skeleton is not connected")
    tree = JoinTree(g, cliques, picked)
    tree.assert_running_intersection()
    return tree


# -- tree transformations -----------------------------------------------


def transform_tree_helper(t):
    """Rewire overlap-redundant triples until none are left.

    A triple i -> j ?- k whose i-k and j-k overlaps agree and sit
    inside the i-j overlap can trade the j-k edge for an i-k edge
    without breaking the running intersection; doing so exhaustively
    also removes every collider from the tree.
    """
    out = t.copy()
    queue = list(out.triples())
    while queue:
        i, j, k = queue.pop(0)
        if not (out.gamma[(i, j)] and not out.gamma[(j, k)]):
            continue
        lam_ij = out.cliques[i] & out.cliques[j]
        lam_jk = out.cliques[j] & out.cliques[k]
        lam_ik = out.cliques[i] & out.cliques[k]
        if not (lam_ik == lam_jk and lam_jk <= lam_ij):
            continue
        before = set(out.triples())
        out.remove_edge(j, k)
        out.add_edge(i, k)
        after = set(out.triples())
        gone = before - after
        queue = [trip for trip in queue if trip not in gone]
        queue.extend(sorted(after - before))
    out.assert_running_intersection()
    return out


def _undirected_runs(t, start, banned):
    """Simple undirected continuations out of `start`, one per stop.

    Yields node tuples of length >= 1 (the extension past `start`),
    every edge on them undirected, avoiding `banned` nodes.
    """
    stack = [(start, [])]
    while stack:
        cur, ext = stack.pop()
        for u in t.neighbors(cur):
            if u in banned or u in ext:
                continue
            if not t.undirected(cur, u):
                continue
            longer = ext + [u]
            yield tuple(longer)
            stack.append((u, longer))


def _stretches(t):
    """Triples (a, b, ext): a directed edge a -> b, then an undirected
    run ext of one or more further cliques."""
    for (i, j), state in sorted(t.edges.items()):
        if state == "none":
            continue
        a, b = (i, j) if state == "fwd" else (j, i)
        for ext in _undirected_runs(t, b, {a, b}):
            yield a, b, ext


def _into_anchor_paths(t, c0):
    """Paths whose undirected stretch runs on, directed, into c0."""
    out = []
    for a, b, ext in _stretches(t):
        head = (a, b) + ext
        u = ext[-1]
        if u == c0:
            out.append(head)
            continue
        if c0 in head:
            continue
        tail = t.tree_path(u, c0)
        if set(tail[1:]) & set(head):
            continue
        if all(
            t.directed_from(tail[s], tail[s + 1])
            for s in range(len(tail) - 1)
        ):
            out.append(head + tail[1:])
    return out


def _capped_stretch_paths(t):
    """Paths whose undirected stretch is capped by a backward edge."""
    out = []
    for a, b, ext in _stretches(t):
        head = (a, b) + ext
        u = ext[-1]
        for z in t.neighbors(u):
            if z not in head and t.directed_from(z, u):
                out.append(head + (z,))
    return out


def relevant_paths(t, c0):
    """Tree paths that keep the tree from being anchored at clique c0.

    Both families start with a directed edge into an undirected
    stretch: in one the stretch continues along directed edges into c0
    itself, in the other a directed edge caps the stretch from beyond.
    """
    return sorted(set(_into_anchor_paths(t, c0)) | set(_capped_stretch_paths(t)))


def transform_tree(t, c0):
    """Reshape a join tree until it is anchored at clique c0.

    Farthest-first processing of the offending paths, each step
    trading the path's first edge for a shortcut past its second
    clique; ties on distance break by the smaller path tuple.
    """
    out = transform_tree_helper(t)
    pending = relevant_paths(out, c0)
    while pending:
        path = sorted(
            pending, key=lambda p: (-out.distance(p[0], c0), p)
        )[0]
        p1, p2, p3 = path[0], path[1], path[2]
        out.remove_edge(p1, p2)
        out.add_edge(p1, p3)
        if not out.directed_from(p1, p3):
            raise GraphError(
                "shortcut %d-%d did not come out directed" % (p1, p3)
            )
        out = transform_tree_helper(out)
        pending = relevant_paths(out, c0)
    return out


def is_anchored(t, c0):
    """No undirected stretch of the tree feeds forward into c0."""
    return not _into_anchor_paths(t, c0)


def _longest_undirected_path(t):
    """Longest fully undirected tree path, smallest tuple on ties."""
    best = None

    def consider(path):
        nonlocal best
        if (
            best is None
            or len(path) > len(best)
            or (len(path) == len(best) and path < best)
        ):
            best = path

    for i, j in t.undirected_edges():
        consider((i, j))
        consider((j, i))
        for a, b in ((i, j), (j, i)):
            for ext in _undirected_runs(t, b, {a, b}):
                consider((a, b) + ext)
    return best


def orient_tree(t, c0):
    """Fully direct an anchored join tree without touching its past.

    Undirected edges fan out from each undirected component's unique
    source: a clique that is already an ancestor of c0 (c0 itself
    included) or already has a parent. Components with no source are
    seeded from the far end of their longest undirected path first.
    The anchor's ancestor set is asserted unchanged afterward.
    """
    out = transform_tree(t, c0)
    anchor_ancestors = out.ancestors(c0)
    while out.undirected_edges():
        progressed = False
        anc = out.ancestors(c0)
        for i, j in out.undirected_edges():
            qi = i in anc or bool(out.parents(i))
            qj = j in anc or bool(out.parents(j))
            if qi and qj:
                raise GraphError(
                    "tree edge %d-%d has sources at both ends" % (i, j)
                )
            if qi or qj:
                if qi:
                    out.set_direction(i, j)
                else:
                    out.set_direction(j, i)
                progressed = True
                break
        if progressed:
            continue
        # no component has a source; seed from a longest path's far end
        path = _longest_undirected_path(out)
        for s in range(len(path) - 1, 0, -1):
            out.set_direction(path[s], path[s - 1])
    if out.ancestors(c0) != anchor_ancestors:
        raise GraphError("orienting the tree changed the anchor's ancestry")
    for v in range(len(out.cliques)):
        if len(out.parents(v)) > 1:
            raise GraphError("directed join tree has a collider at %d" % v)
    return out


# -- pushing tree orientations onto the graph ----------------------------


def apply_tree_orientations(g, t):
    """Orient clique-boundary edges of g along the directed tree.

    For every ancestor pair of cliques, overlap nodes point directed
    edges at the rest of the descendant clique.
    """
    for a in range(len(t.cliques)):
        below = sorted(t.descendants(a) - {a})
        for b in below:
            ca, cb = t.cliques[a], t.cliques[b]
            for u in sorted(ca & cb):
                for w in sorted(cb - ca):
                    g = g.orient(u, w, ARROW)
                    g = g.orient(w, u, TAIL)
    return g


# -- orienting within a clique -------------------------------------------


def _sink_orientation(sub, a, b):
    """DAG-orient a clique of directed and circle edges with a --> b.

    Sink elimination: repeatedly retire a node without outgoing
    directed edges, pointing its circle edges into it; b is retired at
    the first opportunity and a never before b, which puts a before b
    in the implied order.
    """
    g = sub
    remaining = set(g.nodes)
    b_done = False

    def is_sink(v):
        return not any(
            g.mark(v, w) == ARROW and g.mark(w, v) == TAIL
            for w in g.adj(v) if w in remaining
        )

    while remaining:
        sinks = sorted((v for v in remaining if is_sink(v)), key=g.index)
        if b in sinks and not b_done:
            pick = b
            b_done = True
        else:
            pool = [v for v in sinks if b_done or v != a]
            if not pool:
                raise NoSuchMag(
                    "clique cannot be ordered with %s before %s" % (a, b)
                )
            pick = pool[0]
        for u in sorted(remaining - {pick}, key=g.index):
            if g.has_edge(u, pick) and g.mark(u, pick) == CIRC:
                g = g.orient(u, pick, ARROW)
                g = g.orient(pick, u, TAIL)
        remaining.remove(pick)
    return g


_CLOSE_RULES = ("R2", "R8")


def _commit_and_close(g, x, y, at_x, at_y):
    """Orient the x-y edge as requested and close under R2 and R8.

    A new directed edge can force further directed edges, through
    parents of its tail end among others: first an arrowhead by R2,
    then a tail by R8. Left as circles those marks would be swept into
    arrowheads and close an almost directed cycle. A conflict while
    closing means no member carries the requested marks.
    """
    try:
        if at_y == ARROW:
            g = g.orient(x, y, ARROW)
        if at_x == ARROW:
            g = g.orient(y, x, ARROW)
        if at_x == TAIL:
            g = g.orient(y, x, TAIL)
        if at_y == TAIL:
            g = g.orient(x, y, TAIL)
        return close_under(g, _CLOSE_RULES)
    except (ConflictError, RuleConflict) as exc:
        raise NoSuchMag(str(exc))


def sweep_circles(g):
    """Every remaining circle becomes an arrowhead."""
    for x, y in g.edges():
        if g.mark(x, y) == CIRC:
            g = g.orient(x, y, ARROW)
        if g.mark(y, x) == CIRC:
            g = g.orient(y, x, ARROW)
    return g


def orient_clique_to_mag(g, clique, x, y, mode):
    """Fully orient one clique of g with the x-y edge as requested.

    mode is "dir" (x --> y), "rev" (x <-- y) or "bidir" (x <-> y).
    Directed requests on cliques free of extra arrowheads go through
    sink elimination and yield a DAG; anything else goes through the
    completion-plus-sweep route. Raises NoSuchMag for requests that
    contradict committed marks.
    """
    nodes = sorted(clique, key=g.index)
    for i, u in enumerate(nodes):
        for w in nodes[i + 1:]:
            if not g.has_edge(u, w):
                raise GraphError("%s and %s are not adjacent" % (u, w))
    sub = induced_subgraph(g, nodes)
    at_x, at_y = {
        "dir": (TAIL, ARROW),
        "rev": (ARROW, TAIL),
        "bidir": (ARROW, ARROW),
    }[mode]
    if sub.mark(y, x) not in (CIRC, at_x) or sub.mark(x, y) not in (CIRC, at_y):
        raise NoSuchMag(
            "edge %s-%s already carries marks ruling the request out" % (x, y)
        )
    extra_heads = any(
        sub.mark(u, w) == ARROW and sub.mark(w, u) != TAIL
        for u in sub.nodes for w in sub.adj(u)
    )
    if mode in ("dir", "rev") and not extra_heads:
        a, b = (x, y) if mode == "dir" else (y, x)
        return _sink_orientation(sub, a, b)
    sub = _commit_and_close(sub, x, y, at_x, at_y)
    return sweep_circles(sub)


# -- sampling a MAG from a class ------------------------------------------


def eligibility_issue(g):
    """Why g cannot host the tree pipeline directly, or None."""
    if not is_ancestral(g):
        return "not ancestral"
    if not is_chordal(g):
        return "skeleton not chordal"
    if minimal_collider_paths(g):
        return "has minimal collider paths"
    if not is_maximal_pmg(g):
        return "not maximal"
    return None


def _components(g):
    """Connected node sets of the skeleton, canonically ordered."""
    seen = set()
    out = []
    for v in g.nodes:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            cur = stack.pop()
            for u in g.adj(cur):
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(sorted(comp, key=g.index))
    return out


def _circle_hosts(g):
    """Pipeline hosts for an ineligible connected graph g.

    Nodes are grouped by circle-circle connectivity. Each group hosts
    its full induced subgraph when that is eligible (knowledge may have
    directed former circle edges inside the group, and the pipeline
    needs to see those marks), else the bare circle subgraph when
    chordal. Leftover groups fall to the sweep and final validation.
    """
    base = circle_component(g)
    hosts = []
    for comp in _components(base):
        if len(comp) < 2:
            continue
        patch = induced_subgraph(g, comp)
        if eligibility_issue(patch) is None:
            hosts.append(patch)
            continue
        circles = induced_subgraph(base, comp)
        if is_chordal(circles):
            hosts.append(circles)
    return hosts


def _merge_marks(out, piece):
    """Copy committed marks of piece onto circle marks of out.

    Arrowheads land before tails so the tail-facing-circle guard in
    orient never trips halfway through an edge.
    """
    pending = []
    for u, w in piece.edges():
        for s, e in ((u, w), (w, u)):
            if out.mark(s, e) == CIRC and piece.mark(s, e) != CIRC:
                pending.append((piece.mark(s, e) != ARROW, s, e))
    for _, s, e in sorted(pending):
        out = out.orient(s, e, piece.mark(s, e))
    return out


def _anchor_index(cliques, x, y):
    """First clique holding both target endpoints."""
    for i, c in enumerate(cliques):
        if x in c and y in c:
            return i
    raise GraphError("no clique holds both %s and %s" % (x, y))


def _sample_component(host, target):
    """Tree pipeline on one eligible connected host.

    target is None or (x, y, mark-at-x, mark-at-y); the anchor clique
    is the first one containing the target edge, whose within-clique
    marks the tree orientations leave untouched.
    """
    tree = build_join_tree(host)
    if target is not None:
        x, y, at_x, at_y = target
        c0 = _anchor_index(tree.cliques, x, y)
    else:
        c0 = 0
    tree = orient_tree(tree, c0)
    gp = apply_tree_orientations(host, tree)
    if target is not None:
        if gp.mark(y, x) not in (CIRC, at_x) or gp.mark(x, y) not in (CIRC, at_y):
            raise NoSuchMag(
                "tree orientations overrode the %s-%s request" % (x, y)
            )
        gp = _commit_and_close(gp, x, y, at_x, at_y)
    return sweep_circles(gp)


_MODES = {
    "dir": (TAIL, ARROW),
    "rev": (ARROW, TAIL),
    "bidir": (ARROW, ARROW),
}


def _mode_pieces(x, y, at_x, at_y):
    """The request as knowledge pieces (a bidirected one is a pair)."""
    if (at_x, at_y) == (ARROW, ARROW):
        return bidirected_pieces(x, y)
    return [Knowledge(x, y, at_x, at_y)]


def _all_hosts(g):
    """Pipeline hosts across every connected component of g."""
    hosts = []
    for comp in _components(g):
        sub = induced_subgraph(g, comp)
        if not sub.has_circles():
            continue
        if eligibility_issue(sub) is None:
            hosts.append(sub)
        else:
            hosts.extend(_circle_hosts(sub))
    return hosts


def _finish_circles(g, arrows):
    """Resolve every leftover circle outside the pipeline hosts.

    The default realization turns circle-arrow circles into tails and
    directs circle-circle edges along node order; with arrows set,
    every circle becomes an arrowhead instead. Neither is guaranteed,
    the caller validates the outcome.
    """
    for u, w in g.edges():
        at_u = g.mark(w, u)
        at_w = g.mark(u, w)
        if at_u != CIRC and at_w != CIRC:
            continue
        if arrows:
            if at_u == CIRC:
                g = g.orient(w, u, ARROW)
            if at_w == CIRC:
                g = g.orient(u, w, ARROW)
        elif at_u == CIRC and at_w == CIRC:
            g = g.orient(u, w, ARROW)
            g = g.orient(w, u, TAIL)
        elif at_u == CIRC:
            g = g.orient(w, u, TAIL)
        else:
            g = g.orient(u, w, TAIL)
    return g


def _member_issue(out, h, x, y, at_x, at_y):
    """Why out is not a member of h's class with the requested marks."""
    if (out.mark(y, x), out.mark(x, y)) != (at_x, at_y):
        return "requested marks did not survive the construction"
    if not is_ancestral(out):
        return "construction produced a non-ancestral graph"
    if not is_maximal(out):
        return "construction produced a non-maximal graph"
    if minimal_collider_paths(out) != minimal_collider_paths(h):
        return "construction changed the minimal collider paths"
    return None


def sample_mag(g, x, y, mode):
    """A MAG represented by g with the x-y edge oriented as requested.

    mode is "dir" (x --> y), "rev" (x <-- y) or "bidir" (x <-> y).
    A target edge inside a pipeline host rides the join tree; one
    outside every host is folded in as a knowledge piece (full rule
    closure) before the hosts run. Leftover circles get a default
    realization, tails first, arrowheads second, and the result must
    pass ancestrality, maximality, an unchanged set of minimal
    collider paths and the requested marks, else NoSuchMag.
    """
    if mode not in _MODES:
        raise GraphError("unknown mode %r" % (mode,))
    if not g.has_edge(x, y):
        raise NoSuchMag("no edge between %s and %s" % (x, y))
    try:
        h = close_under(g, ALL_RULES)
    except RuleConflict as exc:
        raise NoSuchMag("input orientations are inconsistent: %s" % exc)
    if not is_ancestral(h):
        raise NoSuchMag("input graph is not ancestral")
    at_x, at_y = _MODES[mode]
    if h.mark(y, x) not in (CIRC, at_x) or h.mark(x, y) not in (CIRC, at_y):
        raise NoSuchMag(
            "edge %s-%s already carries marks ruling the request out" % (x, y)
        )
    merged = h
    target = (x, y, at_x, at_y)
    target_done = (h.mark(y, x), h.mark(x, y)) == (at_x, at_y)
    hosts = _all_hosts(h)
    if not target_done and not any(
        host.has_node(x) and host.has_node(y) and host.has_edge(x, y)
        for host in hosts
    ):
        res = add_bg_knowledge(h, _mode_pieces(x, y, at_x, at_y))
        if not res.ok:
            raise NoSuchMag(str(res.reason))
        merged = res.graph
        target_done = True
        hosts = _all_hosts(merged)
    for host in hosts:
        here = (
            not target_done
            and host.has_node(x) and host.has_node(y)
            and host.has_edge(x, y)
        )
        piece = _sample_component(host, target if here else None)
        if here:
            target_done = True
        merged = _merge_marks(merged, piece)
    try:
        # host choices force marks across host boundaries (a new
        # directed edge pulls arrowheads via R2 and tails via R8);
        # leftover circles must see those before any default applies
        merged = close_under(merged, ALL_RULES)
    except RuleConflict as exc:
        raise NoSuchMag(str(exc))
    issue = "no leftover realization"
    for arrows in (False, True):
        out = _finish_circles(merged, arrows)
        issue = _member_issue(out, h, x, y, at_x, at_y)
        if issue is None:
            return out
    raise NoSuchMag(issue)
