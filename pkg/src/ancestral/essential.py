"""Class representations of ancestral graphs and expert knowledge.

A maximal ancestral graph stands for the distribution class reachable
from DAGs with hidden variables. Its equivalence class is represented
by a partial mixed graph whose committed marks are exactly the marks
shared by every class member; circles are the free positions. Expert
knowledge arrives as per-edge statements which are folded in one at a
time, each followed by a rule closure, and the result can be audited by
verify_completeness: every remaining circle must still be realizable
both ways among valid settlements.
"""

from dataclasses import dataclass

from . import paths, rules
from .graph import (
    ARROW,
    CIRC,
    TAIL,
    GraphError,
    MixedGraph,
    ancestors,
    circle_edges,
    find_len3_cycle,
    noncircle_marks,
    same_skeleton,
    skeleton,
)

# -- knowledge pieces -------------------------------------------------------

KNOW_TOKENS = {
    "-->": (TAIL, ARROW),
    "<--": (ARROW, TAIL),
    "*->": (None, ARROW),
    "<-*": (ARROW, None),
}
_GLYPH_AT_X = {ARROW: "<", TAIL: "-", None: "*"}
_GLYPH_AT_Y = {ARROW: ">", TAIL: "-", None: "*"}


@dataclass(frozen=True)
class Knowledge:
    """One statement about the x-y edge: the marks it prescribes.

    at_x / at_y are TAIL, ARROW or None (no claim about that end). The
    four expressible statements are x --> y, x <-- y, x *-> y (an
    arrowhead at y) and x <-* y (an arrowhead at x). A bidirected claim
    is the pair of the last two.
    """

    x: str
    y: str
    at_x: object
    at_y: object

    def token(self):
        return _GLYPH_AT_X[self.at_x] + "-" + _GLYPH_AT_Y[self.at_y]

    def __str__(self):
        return "%s %s %s" % (self.x, self.token(), self.y)

    def orients(self):
        """(u, v, mark-at-v) triples, arrowheads first."""
        out = []
        if self.at_y is not None:
            out.append((self.x, self.y, self.at_y))
        if self.at_x is not None:
            out.append((self.y, self.x, self.at_x))
        out.sort(key=lambda t: 0 if t[2] == ARROW else 1)
        return out


def directed(x, y):
    """x --> y."""
    return Knowledge(x, y, TAIL, ARROW)


def arrow_at(x, y):
    """x *-> y: an arrowhead at y, no claim at x."""
    return Knowledge(x, y, None, ARROW)


def bidirected_pieces(x, y):
    """x <-> y as the two arrowhead statements it abbreviates."""
    return [arrow_at(x, y), arrow_at(y, x)]


def parse_knowledge(text, g=None):
    """Knowledge file: one `X token Y` per line, tokens -->, <--, *->,
    <-*. `#` comments and blank lines are skipped."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise GraphError("line %d: expected `X token Y`" % ln)
        x, tok, y = fields
        if tok not in KNOW_TOKENS:
            raise GraphError(
                "line %d: unknown knowledge token %r (valid: %s)"
                % (ln, tok, " ".join(sorted(KNOW_TOKENS)))
            )
        if g is not None and not (g.has_node(x) and g.has_node(y)):
            raise GraphError("line %d: unknown node in %r" % (ln, line))
        mx, my = KNOW_TOKENS[tok]
        out.append(Knowledge(x, y, mx, my))
    return out


# -- latent projection -------------------------------------------------------


def dag_to_mag(dag, latents=()):
    """Project a DAG onto its observed nodes.

    Two observed nodes are adjacent iff the DAG joins them by an edge
    or by an inducing path relative to the latent set. An endpoint gets
    a tail iff it is a DAG-ancestor of the other endpoint.
    """
    latents = set(latents)
    for v in latents:
        if not dag.has_node(v):
            raise GraphError("unknown latent node %r" % (v,))
    for x, y in dag.edges():
        if not (dag.is_directed_edge(x, y) or dag.is_directed_edge(y, x)):
            raise GraphError("dag_to_mag input must be a DAG")
    anc = {v: ancestors(dag, v) for v in dag.nodes}
    observed = [v for v in dag.nodes if v not in latents]
    edges = []
    for i, a in enumerate(observed):
        for b in observed[i + 1:]:
            if dag.has_edge(a, b) or paths.has_inducing_path(
                dag, a, b, latents=latents
            ):
                ma = TAIL if a in anc[b] else ARROW
                mb = TAIL if b in anc[a] else ARROW
                edges.append((a, b, ma, mb))
    return MixedGraph(observed, edges)


# -- class representation ----------------------------------------------------


def mag_to_essential(m):
    """Partial mixed graph whose committed marks are the class
    invariants of m: arrowheads of minimal collider paths, closed under
    the construction rules."""
    g = MixedGraph(m.nodes, [(x, y, CIRC, CIRC) for x, y in m.edges()])
    for p in paths.minimal_collider_paths(m):
        for i in range(1, len(p) - 1):
            g = g.orient(p[i - 1], p[i], ARROW)
            g = g.orient(p[i + 1], p[i], ARROW)
    return rules.close_under(g, rules.CONSTRUCTION_RULES)


# -- background knowledge -----------------------------------------------------


def admissibility_issue(g, k):
    """None if the piece can be folded into g, else a reason string.

    A piece is admissible when its edge exists and every mark it
    prescribes is currently a circle or already as prescribed.
    """
    for v in (k.x, k.y):
        if not g.has_node(v):
            return "unknown node %s" % v
    if not g.has_edge(k.x, k.y):
        return "no edge between %s and %s" % (k.x, k.y)
    for u, v, m in k.orients():
        cur = g.mark(u, v)
        if cur not in (CIRC, m):
            return "mark at %s on %s-%s is %s, piece %s needs %s" % (
                v,
                k.x,
                k.y,
                cur,
                k,
                m,
            )
    return None


def is_admissible(g, k):
    return admissibility_issue(g, k) is None


@dataclass
class AddResult:
    """Outcome of folding knowledge into a graph.

    On failure, `graph` is the state just before the rejected piece,
    `failed`/`failed_index`/`reason` identify it. `trace` holds every
    orientation applied, knowledge marks included (rule id "K").
    """

    graph: MixedGraph
    trace: list
    failed: object = None
    failed_index: object = None
    reason: object = None

    @property
    def ok(self):
        return self.failed is None


def add_bg_knowledge(g, pieces, rule_ids=rules.KNOWLEDGE_RULES):
    """Fold pieces in order; after each, close under the rules.

    Inadmissible pieces (and rule conflicts, which only inconsistent
    knowledge can cause) fail the whole call.
    """
    trace = []
    for i, k in enumerate(pieces):
        reason = admissibility_issue(g, k)
        if reason is not None:
            return AddResult(g, trace, k, i, reason)
        before = g
        try:
            for u, v, m in k.orients():
                if g.mark(u, v) != m:
                    g = g.orient(u, v, m)
                    trace.append(
                        rules.Command(u, v, m, "K", (str(i), str(k)))
                    )
            g = rules.close_under(g, rule_ids, trace)
        except GraphError as e:
            return AddResult(before, trace, k, i, str(e))
    return AddResult(g, trace)


# -- settlement checks ---------------------------------------------------------


def is_valid_extension(g, g2):
    """g2 commits g's frontier without breaking anything the class
    structure fixes: same skeleton, g's marks kept, every circle-arrow
    edge of g committed, no 3-cycles, no new unshielded collider, no
    new discriminated collider, closed under every rule."""
    if g2.nodes != g.nodes or not same_skeleton(g, g2):
        return False
    if not noncircle_marks(g) <= noncircle_marks(g2):
        return False
    for cs, as_ in _circle_arrow_edges(g):
        if g2.mark(as_, cs) == CIRC:
            return False
    if find_len3_cycle(g2) is not None:
        return False
    if not _collider_structure_kept(g, g2):
        return False
    return rules.is_closed_under(g2, rules.ALL_RULES)


def _collider_structure_kept(g, g2):
    """No unshielded collider and no discriminated collider of g2 is
    new relative to g."""
    if not paths.unshielded_colliders(g2) <= paths.unshielded_colliders(g):
        return False
    for p in paths.iter_discriminating_paths(g2, collider_only=True):
        qprev, qk, b = p[-3], p[-2], p[-1]
        if g.mark(qprev, qk) != ARROW or g.mark(b, qk) != ARROW:
            return False
    return True


def _circle_arrow_edges(g):
    """(circle-side, arrow-side) pairs of the o-> edges, canonical."""
    out = []
    for x, y in g.edges():
        mx, my = g.mark(y, x), g.mark(x, y)
        if mx == CIRC and my == ARROW:
            out.append((x, y))
        elif mx == ARROW and my == CIRC:
            out.append((y, x))
    return out


def _settle(g, base, seed):
    """A valid settlement of `base` containing `seed`, or None.

    Folds the seed in, then walks the surviving circle-arrow edges of g
    depth-first, trying --> then <-> for each; closures prune the
    search. Leaves are accepted by is_valid_extension against g.
    """
    res = add_bg_knowledge(base, seed)
    if not res.ok:
        return None
    return _settle_rec(g, res.graph)


def _settle_rec(g, h):
    pending = None
    for cs, as_ in _circle_arrow_edges(g):
        if h.mark(as_, cs) == CIRC:
            pending = (cs, as_)
            break
    if pending is None:
        return h if is_valid_extension(g, h) else None
    cs, as_ = pending
    for seed in ([directed(cs, as_)], bidirected_pieces(cs, as_)):
        res = add_bg_knowledge(h, seed)
        if res.ok:
            wit = _settle_rec(g, res.graph)
            if wit is not None:
                return wit
    return None


def _gc_marks(g, wit):
    """Committed marks of wit on the circle-circle edges of g."""
    out = set()
    for x, y in circle_edges(g):
        for u, v in ((x, y), (y, x)):
            m = wit.mark(u, v)
            if m != CIRC:
                out.add(((u, v), m))
    return frozenset(out)


def verify_completeness(g, g_prime, pieces=(), with_report=False):
    """Audit g_prime as a representation of g's class narrowed by pieces.

    First confirms g_prime can be an output at all: same skeleton,
    g's committed marks and the pieces' marks all present, closed
    under every rule.  Dropping a single committed mark from a real
    output breaks one of these (the rule that derived the mark
    re-fires on the remainder).  Then every circle-arrow edge of g
    that is still undecided in g_prime must settle both as --> and as
    <->; marks forced on the circle fabric by every such settlement
    must already be present in g_prime or themselves settle the other
    way; and g_prime must not have broken ancestrality or the
    collider structure of g.
    """
    report = {"edges": [], "residue": [], "final": None}

    def done(v):
        return (v, report) if with_report else v

    if g_prime.nodes != g.nodes or not same_skeleton(g, g_prime):
        report["final"] = "different skeleton"
        return done(False)
    if not noncircle_marks(g) <= noncircle_marks(g_prime):
        report["final"] = "a committed mark of the base graph is missing"
        return done(False)
    for p in pieces:
        for u, v, m in p.orients():
            if g_prime.mark(u, v) != m:
                report["final"] = "knowledge mark %s missing at %s on %s-%s" % (
                    m, v, u, v)
                return done(False)
    if not rules.is_closed_under(g_prime, rules.ALL_RULES):
        report["final"] = "orientations are not closed under the rules"
        return done(False)

    a_edges = [
        (cs, as_)
        for cs, as_ in _circle_arrow_edges(g)
        if g_prime.has_edge(cs, as_) and g_prime.mark(as_, cs) == CIRC
    ]
    gclist = []
    for cs, as_ in a_edges:
        for label, seed in (
            ("-->", [directed(cs, as_)]),
            ("<->", bidirected_pieces(cs, as_)),
        ):
            wit = _settle(g, g_prime, seed)
            report["edges"].append(
                {"edge": [cs, as_], "orient": label, "ok": wit is not None}
            )
            if wit is None:
                report["final"] = "unrealizable: %s %s %s" % (cs, label, as_)
                return done(False)
            gclist.append(_gc_marks(g, wit))
    if gclist:
        inv_final = frozenset.intersection(*gclist)
        residue = inv_final - _gc_marks(g, g_prime)
        for (u, v), m in sorted(
            residue, key=lambda e: (g.index(e[0][0]), g.index(e[0][1]), e[1])
        ):
            # test the complementary commitment of this mark at v
            comp = directed(v, u) if m == ARROW else arrow_at(u, v)
            wit = _settle(g, g_prime, [comp])
            report["residue"].append(
                {"edge": [u, v], "mark": m, "complement_ok": wit is not None}
            )
            if wit is None:
                report["final"] = "forced mark %s at %s on %s-%s" % (m, v, u, v)
                return done(False)
    if find_len3_cycle(g_prime) is not None:
        report["final"] = "three-node cycle"
        return done(False)
    if not _collider_structure_kept(g, g_prime):
        report["final"] = "collider structure changed"
        return done(False)
    report["final"] = "ok"
    return done(True)
