"""Path machinery: m-separation, collider paths, discrimination,
inducing paths, maximality."""

import random
from itertools import combinations

from ancestral.graph import parse_pmg
from ancestral.paths import (
    discriminated_collider_triples,
    has_inducing_path,
    is_collider_path,
    is_maximal,
    is_maximal_pmg,
    is_minimal_collider_path,
    is_unshielded_path,
    iter_almost_discriminating_paths,
    iter_discriminating_paths,
    m_separated,
    m_separated_walk,
    minimal_collider_paths,
    unshielded_colliders,
)

from conftest import PIPE_DAG, PIPE_MAG, SPLIT6, WHEEL5_DONE, random_mag


def test_m_separation_on_projected_graph():
    m = parse_pmg(PIPE_MAG)
    assert m_separated(m, "B", "D", {"A", "C"})
    assert not m_separated(m, "B", "D", {"C"})
    assert not m_separated(m, "B", "D", set())


def test_m_separation_matches_latent_ground_truth():
    # projecting out the latent sources must preserve every separation
    # statement among the observed nodes
    dag = parse_pmg(PIPE_DAG)
    m = parse_pmg(PIPE_MAG)
    obs = list(m.nodes)
    for x, y in combinations(obs, 2):
        rest = [v for v in obs if v not in (x, y)]
        for r in range(len(rest) + 1):
            for z in combinations(rest, r):
                assert m_separated(dag, x, y, set(z)) == m_separated(
                    m, x, y, set(z))


def test_path_and_walk_criteria_agree(rng):
    trials = 0
    while trials < 40:
        m = random_mag("ABCDE", 0.5, rng)
        if m is None:
            continue
        trials += 1
        for x, y in combinations(m.nodes, 2):
            rest = [v for v in m.nodes if v not in (x, y)]
            for r in range(len(rest) + 1):
                for z in combinations(rest, r):
                    assert m_separated(m, x, y, set(z)) == m_separated_walk(
                        m, x, y, set(z))


def test_collider_path_predicates():
    g = parse_pmg("nodes: A B C D\nA o-> B\nB <-> C\nC <-o D\nA --> C\n")
    assert is_collider_path(g, ("A", "B", "C", "D"))
    assert not is_collider_path(g, ("B", "A", "C"))  # circle at A on A-B
    assert is_unshielded_path(g, ("B", "A", "C")) is False  # B-C adjacent
    assert is_minimal_collider_path(g, ("A", "B", "C", "D")) is False  # A-C chord


def test_minimal_collider_paths_fixture():
    assert sorted(minimal_collider_paths(parse_pmg(SPLIT6))) == [
        ("A", "C", "E"),
        ("A", "D", "E"),
        ("A", "F", "B"),
        ("A", "F", "E"),
        ("B", "F", "C"),
        ("B", "F", "E"),
    ]
    assert minimal_collider_paths(parse_pmg(PIPE_MAG)) == []


def test_unshielded_colliders():
    g = parse_pmg("nodes: A B C\nA o-> B\nC o-> B\n")
    assert unshielded_colliders(g) == {("A", "B", "C")}
    shielded = parse_pmg("nodes: A B C\nA o-> B\nC o-> B\nA o-o C\n")
    assert unshielded_colliders(shielded) == frozenset()


def test_discriminating_paths():
    g = parse_pmg(
        "nodes: X Q1 Q2 Y\n"
        "X --> Q2\nX o-> Q1\nQ1 <-> Q2\nQ1 --> Y\nQ2 <-> Y\n"
    )
    assert ("X", "Q1", "Q2", "Y") in set(iter_discriminating_paths(g))
    assert discriminated_collider_triples(g) == {("Q1", "Q2", "Y")}
    # without the parent edge Q1 --> Y nothing discriminates
    h = parse_pmg(
        "nodes: X Q1 Q2 Y\nX --> Q2\nX o-> Q1\nQ1 <-> Q2\nQ2 <-> Y\n")
    assert list(iter_discriminating_paths(h)) == []


def test_almost_discriminating_path():
    # circle marks next to committed colliders keep the path relevant
    # even though one interior triple is not a committed collider
    g = parse_pmg(WHEEL5_DONE)
    assert ("D", "A", "E", "C", "B") in set(iter_almost_discriminating_paths(g))


def test_inducing_paths_through_latents():
    dag = parse_pmg(PIPE_DAG)
    lat = frozenset(["L1", "L2"])
    assert has_inducing_path(dag, "A", "D", latents=lat)
    assert has_inducing_path(dag, "A", "B", latents=lat)
    assert not has_inducing_path(dag, "B", "D", latents=lat)


def test_maximality():
    assert is_maximal(parse_pmg(PIPE_MAG))
    # ancestral graph with an inducing path between non-adjacent ends
    nm = parse_pmg(
        "nodes: A B C D E F\n"
        "A <-> B\nB <-> C\nC <-> D\nB --> E\nE --> D\nC --> F\nF --> A\n"
    )
    assert not is_maximal(nm)


def test_maximal_pmg_sees_possible_inducing_paths():
    # all-circle triangle chain: every committed version is maximal
    g = parse_pmg("nodes: A B C D\nA o-o B\nB o-o C\nC o-o D\nA o-o C\n")
    assert is_maximal_pmg(g)
    # a single unshielded collider is never a possible inducing path
    assert is_maximal_pmg(parse_pmg("nodes: A B C\nA o-> B\nC o-> B\n"))
    # two bidirected interiors with circle detours back to the ends
    h = parse_pmg(
        "nodes: A B C D E F\n"
        "A <-> B\nB <-> C\nC <-> D\nB o-o E\nE o-o D\nC o-o F\nF o-o A\n"
    )
    assert not is_maximal_pmg(h)
