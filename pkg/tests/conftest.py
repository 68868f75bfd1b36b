"""Shared fixture graphs and the brute-force class oracle helper.

The graphs here are small enough for exhaustive enumeration, so every
expected value in the tests can be recomputed from first principles.
"""

import random

import pytest

from ancestral.graph import MixedGraph, parse_pmg
from ancestral.essential import Knowledge, dag_to_mag
from ancestral.oracle import (
    enumerate_mags,
    essential_by_intersection,
    markov_equivalent,
)
from ancestral.graph import noncircle_marks


# Ground-truth DAG with two latent sources, its projection onto the
# observed nodes, the class summary, and the summary after asserting
# an arrowhead at C on B-C.
PIPE_DAG = """nodes: A B C D L1 L2
L1 --> B
L1 --> A
B --> A
A --> C
B --> C
C --> D
A --> L2
L2 --> D
"""

PIPE_MAG = """nodes: A B C D
B --> A
A --> C
B --> C
C --> D
A --> D
"""

PIPE_ESSENTIAL = """nodes: A B C D
A o-o B
A o-o C
B o-o C
C o-o D
A o-o D
"""

PIPE_RESTRICTED = """nodes: A B C D
A o-o B
A o-o C
B o-> C
C --> D
A --> D
"""

# 4-node graph where committing D --> C and an arrowhead at B forces
# the arrowhead at B on A-B through a circle path ending in the new
# bidirected edge.
KITE4 = """nodes: A B C D
A o-o B
A o-> C
A o-o D
B o-> C
D o-> C
"""

KITE4_DONE = """nodes: A B C D
A o-> B
A o-> C
A o-o D
B <-> C
D --> C
"""

# 6-node graph where two asserted arrowheads at A force the arrowhead
# at A on A-B through a bidirected pair plus a capped circle detour.
FAN6 = """nodes: A B C D E F
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

FAN6_DONE = """nodes: A B C D E F
A <-o B
A <-> C
A <-> D
B o-> C
B o-> D
B o-o E
B o-o F
C <-> D
E o-> C
E o-o F
F o-> D
"""

# 5-node graph where one asserted arrowhead at A cascades through an
# adjacency gap, an induced-subgraph pattern, and a collider detour.
WHEEL5 = """nodes: A B C D E
A o-> B
A o-> D
A o-> E
C o-> B
C o-> D
C o-> E
B o-o E
D o-o E
"""

WHEEL5_DONE = """nodes: A B C D E
A --> B
A <-> D
A o-> E
C --> B
C o-> D
C o-> E
E --> B
D o-o E
"""

# All-circle chordal graph with a hub; a single directed edge into the
# hub fans out over every hub spoke.
HUB6 = """nodes: A B C D E F
A o-o B
A o-o F
B o-o C
B o-o F
C o-o D
C o-o F
D o-o F
E o-o F
"""

HUB6_DONE = """nodes: A B C D E F
A <-- F
A o-o B
B <-- F
B o-o C
C <-- F
C o-o D
D <-- F
E --> F
"""

# Chain of circle edges hanging off a directed hub; handy because the
# class is small and every variant edge is inside one clique chain.
CHAIN6 = """nodes: A B C D E F
E --> F
F --> A
F --> B
F --> C
F --> D
A o-o B
B o-o C
C o-o D
"""

# Eligible one-component graph with a committed edge into the circle
# fabric; regression for closing requested marks under the
# directed-edge rules before sweeping.
PATCH5 = """nodes: A B C E F
A o-o C
E --> A
A o-o F
B o-o C
B o-o E
B o-o F
C o-o E
C o-o F
E o-o F
"""

# Ineligible component whose circle fabric splits into hosts; the
# A-C edge lies outside every host.
SPLIT6 = """nodes: A B C D E F
A o-> C
A o-> D
A o-> F
B <-> F
C o-o D
C <-o E
C o-> F
E o-> F
D <-o E
"""

# Two hosts whose choices interact across the gap between them;
# regression for closing the merged graph before defaulting circles.
BRIDGE5 = """nodes: A C D E F
A o-> D
A o-o E
A o-> F
C --> D
C o-o E
C o-> F
D <-o E
D o-o F
E o-> F
"""

TWO_NODE = """nodes: A B
A o-o B
"""


def class_of(g):
    """Members of the unique Markov equivalence pool whose summary is g.

    Enumerates every MAG on g's skeleton that carries g's committed
    marks, buckets them by Markov equivalence, and returns the one
    bucket whose mark-intersection summary equals g.
    """
    want = noncircle_marks(g)
    pool = [m for m in enumerate_mags(g) if want <= noncircle_marks(m)]
    buckets = []
    for m in pool:
        for bucket in buckets:
            if markov_equivalent(m, bucket[0]):
                bucket.append(m)
                break
        else:
            buckets.append([m])
    hits = [b for b in buckets if essential_by_intersection(b) == g]
    assert len(hits) == 1, "fixture is not a class summary"
    return hits[0]


def random_dag(nodes, p, rng):
    """DAG over a shuffled copy of nodes with forward-edge density p."""
    order = list(nodes)
    rng.shuffle(order)
    edges = []
    for i, x in enumerate(order):
        for y in order[i + 1:]:
            if rng.random() < p:
                edges.append((x, y, "tail", "arrow"))
    return MixedGraph(sorted(nodes), edges)


def random_mag(nodes, p, rng, max_edges=9):
    """Random latent-projection MAG, or None when the draw is unusable."""
    dag = random_dag(nodes, p, rng)
    if not 0 < len(dag.edges()) <= max_edges:
        return None
    sources = [v for v in dag.nodes if not dag.parents(v)]
    latents = [v for v in sources if rng.random() < 0.4]
    if len(latents) == len(dag.nodes):
        return None
    m = dag_to_mag(dag, latents=latents)
    if not m.edges():
        return None
    return m


@pytest.fixture
def rng():
    return random.Random(20250814)


def _graph_fixture(name, text):
    @pytest.fixture(name=name)
    def fix():
        return parse_pmg(text)

    return fix


for _name, _text in [
    ("pipe_dag", PIPE_DAG),
    ("pipe_mag", PIPE_MAG),
    ("pipe_essential", PIPE_ESSENTIAL),
    ("pipe_restricted", PIPE_RESTRICTED),
    ("kite4", KITE4),
    ("kite4_done", KITE4_DONE),
    ("fan6", FAN6),
    ("fan6_done", FAN6_DONE),
    ("wheel5", WHEEL5),
    ("wheel5_done", WHEEL5_DONE),
    ("hub6", HUB6),
    ("hub6_done", HUB6_DONE),
    ("chain6", CHAIN6),
    ("patch5", PATCH5),
    ("split6", SPLIT6),
    ("bridge5", BRIDGE5),
    ("two_node", TWO_NODE),
]:
    globals()[_name] = _graph_fixture(_name, _text)
