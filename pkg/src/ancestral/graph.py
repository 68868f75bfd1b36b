"""Core mixed-graph structure with tail/arrowhead/circle edge marks.

A graph holds at most one edge per node pair. Each edge carries one mark
at each endpoint, so directed (-->), bidirected (<->) and partially
oriented (o->, o-o) edges are all the same structure with different
marks. Tail-tail (undirected) edges are rejected everywhere: they
encode selection effects, which are out of scope. Tail-circle states
are also unreachable; a tail may only be placed opposite an arrowhead.

Graphs are immutable. orient() returns a new graph and raises
ConflictError when asked to overwrite a committed (non-circle) mark
with a different one.
"""

import re

TAIL = "tail"
ARROW = "arrow"
CIRC = "circ"

MARKS = (TAIL, ARROW, CIRC)

# Edge tokens used by the text format. The first character is the mark
# at the left node, the last the mark at the right node. There is no
# token with a tail at both ends, and none with a tail facing a circle.
TOKEN_MARKS = {
    "o-o": (CIRC, CIRC),
    "o->": (CIRC, ARROW),
    "<-o": (ARROW, CIRC),
    "-->": (TAIL, ARROW),
    "<--": (ARROW, TAIL),
    "<->": (ARROW, ARROW),
}
MARKS_TOKEN = {marks: tok for tok, marks in TOKEN_MARKS.items()}

_NODE_RE = re.compile(r"^[A-Za-z0-9_]+$")


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    pass


class ConflictError(GraphError):
    """Attempt to overwrite a committed edge mark with a different one."""


class MixedGraph:
    """Immutable partial mixed graph over a fixed, ordered node set."""

    __slots__ = ("nodes", "_index", "_adj", "_mark")

    def __init__(self, nodes, edges=()):
        """edges: iterable of (x, y, mark_at_x, mark_at_y)."""
        self.nodes = tuple(nodes)
        self._index = {v: i for i, v in enumerate(self.nodes)}
        if len(self._index) != len(self.nodes):
            raise GraphError("duplicate node name")
        self._adj = {v: [] for v in self.nodes}
        self._mark = {}
        for x, y, mx, my in edges:
            self._add_edge(x, y, mx, my)
        for v in self.nodes:
            self._adj[v] = tuple(sorted(self._adj[v], key=self._index.__getitem__))

    def _add_edge(self, x, y, mx, my):
        if x not in self._index or y not in self._index:
            raise GraphError("unknown node in edge %s-%s" % (x, y))
        if x == y:
            raise GraphError("self loop at %s" % x)
        if (x, y) in self._mark:
            raise GraphError("duplicate edge %s-%s" % (x, y))
        for m in (mx, my):
            if m not in MARKS:
                raise GraphError("bad mark %r" % (m,))
        if mx == TAIL and my != ARROW or my == TAIL and mx != ARROW:
            raise GraphError("tail must face an arrowhead on %s-%s" % (x, y))
        self._mark[(x, y)] = my
        self._mark[(y, x)] = mx
        self._adj[x].append(y)
        self._adj[y].append(x)

    # -- queries ------------------------------------------------------

    def index(self, v):
        return self._index[v]

    def has_node(self, v):
        return v in self._index

    def has_edge(self, x, y):
        return (x, y) in self._mark

    def mark(self, x, y):
        """Mark at y on the edge between x and y."""
        try:
            return self._mark[(x, y)]
        except KeyError:
            raise GraphError("no edge %s-%s" % (x, y)) from None

    def adj(self, v):
        """Neighbors of v in canonical node order."""
        return self._adj[v]

    def edges(self):
        """Node pairs (x, y) with x before y in declaration order."""
        out = [(x, y) for (x, y) in self._mark if self._index[x] < self._index[y]]
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def edge_count(self):
        return len(self._mark) // 2

    def is_directed_edge(self, x, y):
        """True for x --> y."""
        return self._mark.get((y, x)) == TAIL and self._mark.get((x, y)) == ARROW

    def is_bidirected_edge(self, x, y):
        return self._mark.get((y, x)) == ARROW and self._mark.get((x, y)) == ARROW

    def parents(self, v):
        return tuple(w for w in self._adj[v] if self.is_directed_edge(w, v))

    def children(self, v):
        return tuple(w for w in self._adj[v] if self.is_directed_edge(v, w))

    def spouses(self, v):
        """Nodes joined to v by a bidirected edge."""
        return tuple(w for w in self._adj[v] if self.is_bidirected_edge(v, w))

    def has_circles(self):
        return any(m == CIRC for m in self._mark.values())

    # -- construction -------------------------------------------------

    def orient(self, x, y, mark):
        """New graph with `mark` at y on the x-y edge.

        No-ops (mark already equal) return self. Overwriting a committed
        mark with a different one raises ConflictError. Placing a tail
        while the far end is still a circle is rejected: set the
        arrowhead first so every intermediate graph stays well formed.
        """
        cur = self.mark(x, y)
        if cur == mark:
            return self
        if cur != CIRC:
            raise ConflictError(
                "mark at %s on %s-%s is %s, cannot set %s" % (y, x, y, cur, mark)
            )
        if mark == TAIL and self._mark[(y, x)] != ARROW:
            raise ConflictError(
                "tail at %s on %s-%s needs an arrowhead at %s first" % (y, x, y, x)
            )
        g = MixedGraph.__new__(MixedGraph)
        g.nodes = self.nodes
        g._index = self._index
        g._adj = self._adj
        g._mark = dict(self._mark)
        g._mark[(x, y)] = mark
        return g

    def with_edge_marks(self, x, y, mx, my):
        """New graph with both marks of an existing x-y edge replaced."""
        g = self
        if my == ARROW or mx == ARROW:
            if my == ARROW:
                g = g.orient(x, y, ARROW)
            if mx == ARROW:
                g = g.orient(y, x, ARROW)
        if my in (TAIL, CIRC) and g.mark(x, y) != my:
            g = g.orient(x, y, my)
        if mx in (TAIL, CIRC) and g.mark(y, x) != mx:
            g = g.orient(y, x, mx)
        return g

    # -- value semantics ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.nodes == other.nodes and self._mark == other._mark

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.nodes, frozenset(self._mark.items())))

    def __repr__(self):
        toks = []
        for x, y in self.edges():
            toks.append("%s %s %s" % (x, edge_token(self, x, y), y))
        return "MixedGraph(%s | %s)" % (" ".join(self.nodes), ", ".join(toks))


def edge_token(g, x, y):
    pair = (g.mark(y, x), g.mark(x, y))
    try:
        return MARKS_TOKEN[pair]
    except KeyError:
        raise GraphError("edge %s-%s has no printable token" % (x, y)) from None


def parse_pmg(text):
    """Parse the edge-list text format.

    First significant line: `nodes: A B C`. Then one edge per line,
    `X <token> Y` with token in o-o, o->, <-o, -->, <--, <->. `#`
    starts a comment, blank lines are skipped.
    """
    nodes = None
    edges = []
    seen = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if nodes is None:
            if not line.startswith("nodes:"):
                raise ParseError("line %d: expected `nodes:` header" % ln)
            names = line[len("nodes:"):].split()
            if not names:
                raise ParseError("line %d: empty node list" % ln)
            for v in names:
                if not _NODE_RE.match(v):
                    raise ParseError("line %d: bad node name %r" % (ln, v))
                if v in seen:
                    raise ParseError("line %d: duplicate node %r" % (ln, v))
                seen.add(v)
            nodes = names
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError("line %d: expected `X token Y`" % ln)
        x, tok, y = fields
        if tok not in TOKEN_MARKS:
            raise ParseError(
                "line %d: unknown edge token %r (valid: %s)"
                % (ln, tok, " ".join(sorted(TOKEN_MARKS)))
            )
        if x not in seen or y not in seen:
            raise ParseError("line %d: undeclared node in %r" % (ln, line))
        mx, my = TOKEN_MARKS[tok]
        edges.append((x, y, mx, my))
    if nodes is None:
        raise ParseError("missing `nodes:` header")
    try:
        return MixedGraph(nodes, edges)
    except GraphError as e:
        raise ParseError(str(e)) from None


def render_pmg(g):
    lines = ["nodes: " + " ".join(g.nodes)]
    for x, y in g.edges():
        lines.append("%s %s %s" % (x, edge_token(g, x, y), y))
    return "\n".join(lines) + "\n"


# -- ancestry -------------------------------------------------------------


def ancestors(g, v):
    """Nodes with a directed path to v, v included."""
    out = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for p in g.parents(w):
            if p not in out:
                out.add(p)
                stack.append(p)
    return out


def descendants(g, v):
    """Nodes reachable from v by a directed path, v included."""
    out = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for c in g.children(w):
            if c not in out:
                out.add(c)
                stack.append(c)
    return out


def ancestors_of_set(g, vs):
    out = set()
    for v in vs:
        out |= ancestors(g, v)
    return out


def _strong_path_nodes(g, w, x, allowed):
    """Nodes on some possibly directed path from w to x, or None.

    The defining condition is global: no edge of g may join two path
    nodes with an arrowhead at the one earlier on the path. Each DFS
    extension is therefore checked against the whole prefix.
    """
    stack = [[w]]
    while stack:
        path = stack.pop()
        v = path[-1]
        for u in g.adj(v):
            if u not in allowed or u in path:
                continue
            ok = True
            for p in path:
                if g.has_edge(p, u) and g.mark(u, p) == ARROW:
                    ok = False
                    break
            if not ok:
                continue
            if u == x:
                return path + [u]
            stack.append(path + [u])
    return None


def possible_ancestors(g, v):
    """Nodes with a possibly directed path to v, v included.

    Edge-wise reachability (never leave a node against an arrowhead)
    only overapproximates the path condition, so candidates it finds
    are confirmed by an exact search. Suffixes of a qualifying path
    qualify too, so every node of a found path is confirmed at once.
    """
    weak = {v}
    stack = [v]
    while stack:
        w = stack.pop()
        for u in g.adj(w):
            if u not in weak and g.mark(w, u) != ARROW:
                weak.add(u)
                stack.append(u)
    confirmed = {v}
    for w in g.nodes:
        if w in weak and w not in confirmed:
            found = _strong_path_nodes(g, w, v, weak)
            if found:
                confirmed.update(found)
    return confirmed


def possible_ancestors_of_set(g, vs):
    out = set()
    for v in vs:
        out |= possible_ancestors(g, v)
    return out


# -- ancestrality ---------------------------------------------------------


def ancestral_violation(g):
    """None, or a witness that g is not ancestral.

    Returns ("directed", cycle) for a directed cycle and
    ("almost", (x, y)) for x <-> y with x an ancestor of y, where the
    witness tuple lists the offending nodes.
    """
    color = {}

    def visit(v, trail):
        color[v] = 1
        trail.append(v)
        for c in g.children(v):
            if color.get(c) == 1:
                return trail[trail.index(c):] + [c]
            if c not in color:
                cyc = visit(c, trail)
                if cyc:
                    return cyc
        trail.pop()
        color[v] = 2
        return None

    for v in g.nodes:
        if v not in color:
            cyc = visit(v, [])
            if cyc:
                return ("directed", tuple(cyc))
    for x, y in g.edges():
        if g.is_bidirected_edge(x, y):
            if x in ancestors(g, y) - {y}:
                return ("almost", (x, y))
            if y in ancestors(g, x) - {x}:
                return ("almost", (y, x))
    return None


def is_ancestral(g):
    return ancestral_violation(g) is None


def find_len3_cycle(g):
    """A directed or almost directed cycle on three nodes, or None.

    Looks for x --> y --> z with z --> x or z <-> x. For graphs closed
    under the composition rules this is an exact ancestrality test; in
    general it is only a necessary one.
    """
    for x in g.nodes:
        for y in g.children(x):
            for z in g.children(y):
                if z == x:
                    continue
                if g.is_directed_edge(z, x):
                    return ("directed", (x, y, z))
                if g.is_bidirected_edge(z, x):
                    return ("almost", (x, y, z))
    return None


# -- subgraphs ------------------------------------------------------------


def skeleton(g):
    """Adjacent pairs, canonically ordered."""
    return frozenset(g.edges())


def circle_edges(g):
    """The circle-circle edges of g, canonically ordered."""
    return [
        (x, y) for (x, y) in g.edges()
        if g.mark(x, y) == CIRC and g.mark(y, x) == CIRC
    ]


def circle_component(g):
    """Subgraph of g holding exactly the circle-circle edges."""
    return MixedGraph(
        g.nodes, [(x, y, CIRC, CIRC) for (x, y) in circle_edges(g)]
    )


def induced_subgraph(g, keep):
    keep = set(keep)
    nodes = [v for v in g.nodes if v in keep]
    edges = [
        (x, y, g.mark(y, x), g.mark(x, y))
        for (x, y) in g.edges()
        if x in keep and y in keep
    ]
    return MixedGraph(nodes, edges)


def noncircle_marks(g):
    """Committed marks as a set of ((x, y), mark-at-y) pairs."""
    out = set()
    for x, y in g.edges():
        if g.mark(x, y) != CIRC:
            out.add(((x, y), g.mark(x, y)))
        if g.mark(y, x) != CIRC:
            out.add(((y, x), g.mark(y, x)))
    return out


def same_skeleton(g1, g2):
    return set(g1.nodes) == set(g2.nodes) and skeleton(g1) == skeleton(g2)
