"""
Orientation cascades triggered by expert statements
===================================================

Three fixtures where one or two expert statements cascade through the
orientation rules. Each prints the trace of rule firings and the final
graph.
"""

from ancestral.essential import add_bg_knowledge, parse_knowledge
from ancestral.graph import parse_pmg, render_pmg

# a circle chain capped by a fresh bidirected edge forces an arrowhead
# back at the chain's start
KITE = """nodes: A B C D
A o-o B
A o-> C
A o-o D
B o-> C
D o-> C
"""

# two arrowheads landing at A leave only one realizable mark at A on
# the A-B edge: the detour over E and F rules out the tail
FAN = """nodes: A B C D E F
A o-o B
A o-> C
A o-> D
B o-> C
B o-> D
B o-o E
B o-o F
C <-> D
E o-> C
E o-o F
F o-> D
"""

# one arrowhead at A cascades through an adjacency gap, an induced
# four-node pattern, and a collider detour, orienting three more edges
WHEEL = """nodes: A B C D E
A o-> B
A o-> D
A o-> E
C o-> B
C o-> D
C o-> E
B o-o E
D o-o E
"""

for name, text, ktext in [
    ("kite", KITE, "D --> C\nC *-> B"),
    ("fan", FAN, "C *-> A\nD *-> A"),
    ("wheel", WHEEL, "A <-* D"),
]:
    g = parse_pmg(text)
    res = add_bg_knowledge(g, parse_knowledge(ktext, g))
    print("=== %s + %s ===" % (name, ktext.replace("\n", ", ")))
    for c in res.trace:
        print("  %-4s sets %s at %s on %s-%s  (witness %s)"
              % (c.rule, c.mark, c.y, c.x, c.y, ", ".join(c.witness)))
    print(render_pmg(res.graph))
