"""
Drawing class members with a chosen edge orientation
====================================================

For every open edge of a restricted class summary, ask for a member
that realizes each of the three shapes. Requests the class cannot
serve are refused; everything served is checked against the
brute-force enumeration.
"""

from ancestral.graph import CIRC, parse_pmg, render_pmg
from ancestral.jointree import NoSuchMag, sample_mag
from ancestral.oracle import enumerate_mags
from ancestral.graph import noncircle_marks

SUMMARY = """nodes: A B C D
A o-o B
A o-o C
B o-> C
C --> D
A --> D
"""

g = parse_pmg(SUMMARY)
print("summary:")
print(render_pmg(g))

# the oracle pool: every MAG carrying the summary's committed marks
committed = noncircle_marks(g)
pool = [m for m in enumerate_mags(g) if committed <= noncircle_marks(m)]

for x, y in g.edges():
    if CIRC not in (g.mark(y, x), g.mark(x, y)):
        continue  # committed edge, nothing to choose
    for mode in ("dir", "rev", "bidir"):
        try:
            m = sample_mag(g, x, y, mode)
        except NoSuchMag as e:
            print("%s-%s %-5s refused: %s" % (x, y, mode, e))
            continue
        shape = next(
            line for line in render_pmg(m).splitlines()
            if line.startswith("%s " % x) and line.endswith(" %s" % y)
        )
        print("%s-%s %-5s -> %s   (member: %s)"
              % (x, y, mode, shape,
                 "; ".join(render_pmg(m).splitlines()[1:])))
        assert any(m == p for p in pool)
