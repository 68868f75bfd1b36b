"""Mark orientation rules and their fixpoint closure.

Each rule inspects a graph and emits orientation commands for marks
that are still circles. Arrowhead commands of an instance precede its
tail command so intermediate graphs never hold a tail facing a circle.
closeUnder applies rules in a fixed order and re-fires until nothing
changes; rule soundness makes the result order-independent, which the
tests check empirically rather than assume.
"""

from dataclasses import dataclass

from .graph import ARROW, CIRC, TAIL, ConflictError
from . import paths


@dataclass(frozen=True)
class Command:
    x: str
    y: str
    mark: str  # placed at y on the x-y edge
    rule: str
    witness: tuple

    def as_dict(self):
        return {
            "rule": self.rule,
            "x": self.x,
            "y": self.y,
            "mark": self.mark,
            "witness": list(self.witness),
        }


class RuleConflict(ConflictError):
    """Two rules (or a rule and a prior mark) disagree on one mark."""

    def __init__(self, command, current):
        self.command = command
        self.current = current
        super().__init__(
            "%s wants %s at %s on %s-%s but it is %s"
            % (command.rule, command.mark, command.y, command.x, command.y, current)
        )


def _directed_pair(g, x, y, rule, witness):
    """Commands to orient x --> y (skipping already-set marks)."""
    out = []
    if g.mark(x, y) == CIRC:
        out.append(Command(x, y, ARROW, rule, witness))
    if g.mark(y, x) == CIRC:
        out.append(Command(y, x, TAIL, rule, witness))
    return out


def fire_r1(g):
    """a *-> b o-* c with a, c non-adjacent: orient b --> c."""
    out = []
    for b in g.nodes:
        for a in g.adj(b):
            if g.mark(a, b) != ARROW:
                continue
            for c in g.adj(b):
                if c == a or g.has_edge(a, c):
                    continue
                if g.mark(c, b) != CIRC:
                    continue
                out.extend(_directed_pair(g, b, c, "R1", (a, b, c)))
    return _dedupe(out)


def fire_r2(g):
    """a --> b *-> c or a *-> b --> c, with a *-o c: orient a *-> c."""
    out = []
    for a in g.nodes:
        for c in g.adj(a):
            if g.mark(a, c) != CIRC:
                continue
            for b in g.adj(a):
                if b == c or not g.has_edge(b, c):
                    continue
                chain1 = g.is_directed_edge(a, b) and g.mark(b, c) == ARROW
                chain2 = g.mark(a, b) == ARROW and g.is_directed_edge(b, c)
                if chain1 or chain2:
                    out.append(Command(a, c, ARROW, "R2", (a, b, c)))
                    break
    return _dedupe(out)


def fire_r3(g):
    """a *-> b <-* c, a *-o d o-* c, a, c non-adjacent, d *-o b:
    orient d *-> b."""
    out = []
    for b in g.nodes:
        for d in g.adj(b):
            if g.mark(d, b) != CIRC:
                continue
            hit = None
            for a in g.adj(b):
                if a == d or g.mark(a, b) != ARROW:
                    continue
                for c in g.adj(b):
                    if c == a or c == d or g.mark(c, b) != ARROW:
                        continue
                    if g.index(a) >= g.index(c) or g.has_edge(a, c):
                        continue
                    if not (g.has_edge(a, d) and g.mark(a, d) == CIRC):
                        continue
                    if not (g.has_edge(c, d) and g.mark(c, d) == CIRC):
                        continue
                    hit = (a, b, c, d)
                    break
                if hit:
                    break
            if hit:
                out.append(Command(d, b, ARROW, "R3", hit))
    return _dedupe(out)


def fire_r4(g):
    """Relaxed discriminating path into qk with qk o-* b: orient qk --> b."""
    out = []
    for p in paths.iter_almost_discriminating_paths(g):
        qk, b = p[-2], p[-1]
        if g.mark(b, qk) == CIRC:
            out.extend(_directed_pair(g, qk, b, "R4", p))
    return _dedupe(out)


def fire_r4d(g):
    """Discriminating path into qk with qk o-* b: orient qk --> b."""
    out = []
    for p in paths.iter_discriminating_paths(g):
        qk, b = p[-2], p[-1]
        if g.mark(b, qk) == CIRC:
            out.extend(_directed_pair(g, qk, b, "R4D", p))
    return _dedupe(out)


def fire_r8(g):
    """a --> b --> c with a o-> c: orient a --> c."""
    out = []
    for a in g.nodes:
        for c in g.adj(a):
            if g.mark(c, a) != CIRC or g.mark(a, c) != ARROW:
                continue
            for b in g.adj(a):
                if b == c:
                    continue
                if g.is_directed_edge(a, b) and g.is_directed_edge(b, c):
                    out.append(Command(c, a, TAIL, "R8", (a, b, c)))
                    break
    return _dedupe(out)


def fire_r9(g):
    """a o-> c plus an unshielded possibly directed path a, b, ..., c
    with b, c non-adjacent: orient a --> c."""
    out = []
    for a in g.nodes:
        for c in g.adj(a):
            if g.mark(c, a) != CIRC or g.mark(a, c) != ARROW:
                continue
            for p in paths.iter_unshielded_pd_paths(g, a, c, min_edges=2):
                if not g.has_edge(p[1], c):
                    out.append(Command(c, a, TAIL, "R9", (a, p[1], c)))
                    break
    return _dedupe(out)


def fire_r10(g):
    """a o-> c, b --> c <-- d, and unshielded possibly directed paths
    from a to b and to d whose first steps differ and are non-adjacent:
    orient a --> c."""
    out = []
    for a in g.nodes:
        for c in g.adj(a):
            if g.mark(c, a) != CIRC or g.mark(a, c) != ARROW:
                continue
            pa = [w for w in g.parents(c) if w != a]
            hit = None
            for b in pa:
                for d in pa:
                    if b == d:
                        continue
                    mus1 = _pd_first_nodes(g, a, b)
                    if not mus1:
                        continue
                    mus2 = _pd_first_nodes(g, a, d)
                    for m1 in mus1:
                        for m2 in mus2:
                            if m1 != m2 and not g.has_edge(m1, m2):
                                hit = (a, c, b, d, m1, m2)
                                break
                        if hit:
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit:
                out.append(Command(c, a, TAIL, "R10", hit))
    return _dedupe(out)


def _pd_first_nodes(g, a, dst):
    """First steps of unshielded possibly directed paths from a to dst."""
    return sorted(
        {p[1] for p in paths.iter_unshielded_pd_paths(g, a, dst, min_edges=1)},
        key=g.index,
    )


def fire_r11(g):
    """On four nodes a, b, c, d: edges a-b, a-c, b *-> c, c --> d,
    a o-* d, and no b-d edge: orient a --> d."""
    out = []
    for c in g.nodes:
        for d in g.children(c):
            for b in g.adj(c):
                if b == d or g.mark(b, c) != ARROW or g.has_edge(b, d):
                    continue
                for a in g.adj(d):
                    if a in (b, c):
                        continue
                    if g.mark(d, a) != CIRC:
                        continue
                    if g.has_edge(a, b) and g.has_edge(a, c):
                        out.extend(_directed_pair(g, a, d, "R11", (a, b, c, d)))
    return _dedupe(out)


def fire_r12(g):
    """Chain v1 o-o v2 o-o ... o-* vi (unshielded) with vi --> w <-> v1:
    place an arrowhead at v1 on the v1-v2 edge."""
    out = []
    for v1 in g.nodes:
        for w in g.spouses(v1):
            for vi in g.parents(w):
                if vi == v1:
                    continue
                hit = _circle_chain_to(g, v1, vi, exclude={w})
                if hit:
                    out.append(
                        Command(hit[1], v1, ARROW, "R12", (v1, hit[1], vi, w))
                    )
    return _dedupe(out)


def _circle_chain_to(g, start, target, exclude):
    """Unshielded path start o-o ... o-o x o-* target (>= 2 edges), or None.

    All edges are circle-circle except the last, which only needs a
    circle at its near end.
    """
    stack = [(start,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        for u in g.adj(last):
            if u in path or u in exclude:
                continue
            if len(path) >= 2 and g.has_edge(path[-2], u):
                continue
            if g.mark(u, last) != CIRC:
                continue
            if u == target:
                if len(path) >= 2:
                    return path + (u,)
                continue
            if g.mark(last, u) == CIRC:
                stack.append(path + (u,))
    return None


def fire_r13(g):
    """a o-* b with c <-> a <-> d, an unshielded path
    c <-o v1 o-o ... o-o vk o-> d avoiding a and b, and unshielded
    possibly directed paths from a through b to every vi: place an
    arrowhead at a on the a-b edge."""
    out = []
    for a in g.nodes:
        sps = g.spouses(a)
        if len(sps) < 2:
            continue
        for b in g.adj(a):
            if g.mark(b, a) != CIRC:
                continue
            reach = _pd_reach_via(g, a, b)
            hit = None
            for i, c in enumerate(sps):
                for d in sps[i + 1:]:
                    if b in (c, d):
                        continue
                    chain = _r13_chain(g, c, d, exclude={a, b}, reach=reach)
                    if chain:
                        hit = (a, b, c, d) + chain
                        break
                if hit:
                    break
            if hit:
                out.append(Command(b, a, ARROW, "R13", hit))
    return _dedupe(out)


def _r13_chain(g, c, d, exclude, reach):
    """Unshielded path c <-o v1 o-o ... o-o vk o-> d, k >= 2, with every
    vi in `reach`. Returns the interior tuple or None."""
    stack = []
    for v1 in g.adj(c):
        if v1 in exclude or v1 == d:
            continue
        if g.mark(v1, c) == ARROW and g.mark(c, v1) == CIRC and v1 in reach:
            stack.append((c, v1))
    while stack:
        path = stack.pop()
        last = path[-1]
        for u in g.adj(last):
            if u in path or u in exclude:
                continue
            if g.has_edge(path[-2], u):
                continue
            if u == d:
                if len(path) >= 3 and g.mark(d, last) == CIRC and g.mark(
                    last, d
                ) == ARROW:
                    return path[1:]
                continue
            if u not in reach:
                continue
            if g.mark(u, last) == CIRC and g.mark(last, u) == CIRC:
                stack.append(path + (u,))
    return None


def _pd_reach_via(g, a, b):
    """Nodes at the end of some unshielded possibly directed path that
    leaves a through b. Prefixes of qualifying paths qualify, so this
    is a prefix-closed DFS collecting every visited endpoint."""
    out = set()
    if not g.has_edge(a, b) or g.mark(b, a) == ARROW:
        return out
    out.add(b)
    stack = [(a, b)]
    while stack:
        path = stack.pop()
        last = path[-1]
        for u in g.adj(last):
            if u in path:
                continue
            if g.has_edge(path[-2], u):
                continue
            ok = True
            for p in path:
                if g.has_edge(p, u) and g.mark(u, p) == ARROW:
                    ok = False
                    break
            if not ok:
                continue
            out.add(u)
            stack.append(path + (u,))
    return out


def _dedupe(cmds):
    """Sort by witness, drop duplicates of the same (target, mark).

    Same-target commands with different marks are kept: applying them
    must surface a RuleConflict, not silently pick one.
    """
    cmds = sorted(cmds, key=lambda c: (c.witness, c.mark != ARROW, c.x, c.y))
    seen = set()
    out = []
    for c in cmds:
        key = (c.x, c.y, c.mark)
        if key in seen:
            continue
        seen.add(key)
        out.append(c)
    return out


FIRERS = {
    "R1": fire_r1,
    "R2": fire_r2,
    "R3": fire_r3,
    "R4": fire_r4,
    "R4D": fire_r4d,
    "R8": fire_r8,
    "R9": fire_r9,
    "R10": fire_r10,
    "R11": fire_r11,
    "R12": fire_r12,
    "R13": fire_r13,
}

# Rule set completing an equivalence class representation from scratch.
CONSTRUCTION_RULES = ("R1", "R2", "R3", "R4D", "R8", "R9", "R10")
# Rule set run after each accepted background-knowledge piece.
KNOWLEDGE_RULES = ("R1", "R2", "R4", "R8", "R10", "R11", "R12", "R13")
# Everything a fully settled graph must be closed under.
ALL_RULES = ("R1", "R2", "R3", "R4", "R8", "R9", "R10", "R11", "R12", "R13")


def fire(g, rule):
    """Commands of one rule whose target mark is still a circle."""
    return FIRERS[rule](g)


def close_under(g, rule_ids, trace=None):
    """Least fixpoint of the given rules.

    Applies command lists rule by rule, re-firing until a full sweep
    changes nothing. A command targeting a mark some earlier command
    already committed differently raises RuleConflict. `trace`, if
    given, is a list extended with the applied commands.
    """
    changed = True
    while changed:
        changed = False
        for rule in rule_ids:
            for cmd in fire(g, rule):
                cur = g.mark(cmd.x, cmd.y)
                if cur == cmd.mark:
                    continue
                if cur != CIRC:
                    raise RuleConflict(cmd, cur)
                g = g.orient(cmd.x, cmd.y, cmd.mark)
                if trace is not None:
                    trace.append(cmd)
                changed = True
    return g


def is_closed_under(g, rule_ids):
    """No rule in rule_ids has anything left to orient."""
    return all(not fire(g, rule) for rule in rule_ids)


def trace_jsonl(commands):
    import json

    return "\n".join(json.dumps(c.as_dict()) for c in commands) + (
        "\n" if commands else ""
    )
