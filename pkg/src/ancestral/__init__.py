"""Ancestral-graph equivalence classes under expert edge-mark knowledge."""

from .graph import (
    ARROW,
    CIRC,
    TAIL,
    ConflictError,
    GraphError,
    MixedGraph,
    ParseError,
    ancestors,
    circle_component,
    circle_edges,
    descendants,
    find_len3_cycle,
    induced_subgraph,
    is_ancestral,
    parse_pmg,
    possible_ancestors,
    render_pmg,
    skeleton,
)
from .paths import (
    is_maximal,
    is_maximal_pmg,
    m_separated,
    minimal_collider_paths,
)
from .rules import close_under, fire, is_closed_under
from .essential import (
    AddResult,
    Knowledge,
    add_bg_knowledge,
    arrow_at,
    bidirected_pieces,
    dag_to_mag,
    directed,
    is_admissible,
    mag_to_essential,
    parse_knowledge,
    verify_completeness,
)
from .oracle import (
    enumerate_mags,
    essential_by_intersection,
    markov_equivalent,
    mec,
    restrict,
    restricted_essential,
)
from .jointree import (
    JoinTree,
    NoSuchMag,
    NotChordal,
    build_join_tree,
    gamma_witness,
    is_chordal,
    maximal_cliques,
    orient_clique_to_mag,
    sample_mag,
)

__version__ = "0.1.0"
