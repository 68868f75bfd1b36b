"""Unit tests for the orientation rules and their fixpoint closure.

Each rule gets a minimal graph where it fires (asserting the exact
commands) and a near-miss where one precondition is broken and it
stays silent.
"""

import json
import random

import pytest

from ancestral.graph import ARROW, TAIL, ConflictError, parse_pmg
from ancestral import rules
from ancestral.rules import Command, RuleConflict


def cmds(rule, g):
    return rules.fire(g, rule)


def test_r1_fires_and_orders_arrowhead_first():
    g = parse_pmg("nodes: A B C\nA o-> B\nB o-o C")
    out = cmds("R1", g)
    assert out == [
        Command("B", "C", ARROW, "R1", ("A", "B", "C")),
        Command("C", "B", TAIL, "R1", ("A", "B", "C")),
    ]


def test_r1_silent_when_triple_shielded():
    g = parse_pmg("nodes: A B C\nA o-> B\nB o-o C\nA o-o C")
    assert cmds("R1", g) == []


def test_r1_duplicate_targets_collapse():
    g = parse_pmg("nodes: A B C E\nA o-> B\nE o-> B\nB o-o C")
    out = cmds("R1", g)
    assert [(c.x, c.y, c.mark) for c in out] == [
        ("B", "C", ARROW),
        ("C", "B", TAIL),
    ]
    assert all(c.witness == ("A", "B", "C") for c in out)


def test_r2_fires_on_directed_chain():
    g = parse_pmg("nodes: A B C\nA --> B\nB <-> C\nA o-o C")
    assert cmds("R2", g) == [
        Command("A", "C", ARROW, "R2", ("A", "B", "C"))
    ]


def test_r2_silent_without_a_directed_link():
    g = parse_pmg("nodes: A B C\nA o-> B\nB <-> C\nA o-o C")
    assert cmds("R2", g) == []


def test_r3_fires_on_shielded_collider_with_circle_hub():
    g = parse_pmg(
        "nodes: A B C D\nA o-> B\nC o-> B\nA o-o D\nC o-o D\nD o-o B"
    )
    assert cmds("R3", g) == [
        Command("D", "B", ARROW, "R3", ("A", "B", "C", "D"))
    ]


def test_r3_silent_when_collider_parents_adjacent():
    g = parse_pmg(
        "nodes: A B C D\nA o-> B\nC o-> B\nA o-o D\nC o-o D\nD o-o B\n"
        "A o-o C"
    )
    assert cmds("R3", g) == []


def test_r4d_fires_on_discriminating_path():
    g = parse_pmg(
        "nodes: X Q1 Q2 Y\nX --> Q2\nX o-> Q1\nQ1 <-> Q2\nQ1 --> Y\n"
        "Q2 o-> Y"
    )
    assert cmds("R4D", g) == [
        Command("Y", "Q2", TAIL, "R4D", ("X", "Q1", "Q2", "Y"))
    ]


def test_r4d_silent_when_endpoints_adjacent():
    g = parse_pmg(
        "nodes: X Q1 Q2 Y\nX --> Q2\nX o-> Q1\nQ1 <-> Q2\nQ1 --> Y\n"
        "Q2 o-> Y\nX o-o Y"
    )
    assert cmds("R4D", g) == []


def test_r4_fires_on_relaxed_discriminating_path():
    g = parse_pmg(
        "nodes: A B C D E\nA --> B\nA <-> D\nA o-> E\nC o-> B\nC o-> D\n"
        "C o-> E\nE --> B\nD o-o E"
    )
    out = cmds("R4", g)
    assert Command("B", "C", TAIL, "R4", ("D", "A", "E", "C", "B")) in out
    # The plain variant needs hard colliders along the path and stays out.
    assert cmds("R4D", g) == []


def test_r8_fires_on_directed_two_step():
    g = parse_pmg("nodes: A B C\nA --> B\nB --> C\nA o-> C")
    assert cmds("R8", g) == [
        Command("C", "A", TAIL, "R8", ("A", "B", "C"))
    ]


def test_r8_silent_without_second_directed_edge():
    g = parse_pmg("nodes: A B C\nA --> B\nB o-> C\nA o-> C")
    assert cmds("R8", g) == []


def test_r9_fires_on_unshielded_roundabout_path():
    g = parse_pmg("nodes: A B C D\nA o-> C\nA o-o B\nB o-o D\nD o-o C")
    assert cmds("R9", g) == [
        Command("C", "A", TAIL, "R9", ("A", "B", "C"))
    ]


def test_r9_silent_when_path_shielded():
    g = parse_pmg(
        "nodes: A B C D\nA o-> C\nA o-o B\nB o-o D\nD o-o C\nB o-o C"
    )
    assert cmds("R9", g) == []


def test_r10_fires_on_two_disjoint_routes_into_collider():
    g = parse_pmg(
        "nodes: A B C D\nA o-> C\nB --> C\nD --> C\nA o-o B\nA o-o D"
    )
    assert cmds("R10", g) == [
        Command("C", "A", TAIL, "R10", ("A", "C", "B", "D", "B", "D"))
    ]


def test_r10_silent_when_first_steps_adjacent():
    g = parse_pmg(
        "nodes: A B C D\nA o-> C\nB --> C\nD --> C\nA o-o B\nA o-o D\n"
        "B o-o D"
    )
    assert cmds("R10", g) == []


def test_r11_fires_on_quad():
    g = parse_pmg(
        "nodes: A B C D\nA o-o B\nA o-o C\nB o-> C\nC --> D\nA o-o D"
    )
    assert cmds("R11", g) == [
        Command("A", "D", ARROW, "R11", ("A", "B", "C", "D")),
        Command("D", "A", TAIL, "R11", ("A", "B", "C", "D")),
    ]


def test_r11_silent_when_b_and_d_adjacent():
    g = parse_pmg(
        "nodes: A B C D\nA o-o B\nA o-o C\nB o-> C\nC --> D\nA o-o D\n"
        "B o-o D"
    )
    assert cmds("R11", g) == []


def test_r12_fires_through_circle_chain():
    g = parse_pmg(
        "nodes: A B C D\nA o-o B\nA o-o D\nA o-> C\nB <-> C\nD --> C"
    )
    assert cmds("R12", g) == [
        Command("A", "B", ARROW, "R12", ("B", "A", "D", "C"))
    ]


def test_r12_needs_at_least_two_chain_edges():
    g = parse_pmg("nodes: A B C D\nA o-> C\nB <-> C\nD --> C\nB o-o D")
    assert cmds("R12", g) == []


R13_BASE = (
    "nodes: A B C D E F\nA o-o B\nA <-> C\nA <-> D\nB o-> C\nB o-> D\n"
    "B o-o E\nB o-o F\nC <-> D\nE o-> C\nE o-o F\nF o-> D"
)


def test_r13_fires_between_sibling_pair():
    g = parse_pmg(R13_BASE)
    assert cmds("R13", g) == [
        Command("B", "A", ARROW, "R13", ("A", "B", "C", "D", "E", "F"))
    ]


def test_r13_silent_without_connecting_chain():
    g = parse_pmg(R13_BASE.replace("\nE o-o F", ""))
    assert cmds("R13", g) == []


def test_r13_silent_when_chain_not_reachable_through_b():
    # Arrowhead at B on B-E blocks every possibly directed route from A
    # through B to the chain interior, so the rule must stay silent.
    g = parse_pmg(R13_BASE.replace("B o-o E", "B <-o E"))
    assert cmds("R13", g) == []


def test_close_under_cascades_to_fixpoint_with_trace():
    g = parse_pmg("nodes: A B C D\nA o-> B\nB o-o C\nC o-o D")
    trace = []
    h = rules.close_under(g, ("R1",), trace=trace)
    assert h == parse_pmg("nodes: A B C D\nA o-> B\nB --> C\nC --> D")
    assert [c.rule for c in trace] == ["R1"] * 4
    assert rules.is_closed_under(h, rules.ALL_RULES)
    assert not rules.is_closed_under(g, ("R1",))


def test_close_under_is_idempotent():
    g = parse_pmg(R13_BASE)
    h = rules.close_under(g, rules.ALL_RULES)
    assert rules.close_under(h, rules.ALL_RULES) == h


@pytest.mark.parametrize(
    "text",
    [
        "nodes: A B C D\nA o-> B\nB o-o C\nC o-o D",
        R13_BASE,
        "nodes: A B C D E\nA --> B\nA <-> D\nA o-> E\nC o-> B\n"
        "C o-> D\nC o-> E\nE --> B\nD o-o E",
        "nodes: A B C D\nA o-o B\nA o-> C\nA o-o D\nB <-> C\nD o-> C",
    ],
)
def test_closure_order_independent(text):
    g = parse_pmg(text)
    want = rules.close_under(g, rules.ALL_RULES)
    shuffler = random.Random(7)
    for _ in range(6):
        order = list(rules.ALL_RULES)
        shuffler.shuffle(order)
        assert rules.close_under(g, tuple(order)) == want


def test_conflicting_commands_raise():
    g = parse_pmg("nodes: A B C D\nA o-> B\nB o-o C\nD o-> C")
    with pytest.raises(RuleConflict) as exc:
        rules.close_under(g, ("R1",))
    assert isinstance(exc.value, ConflictError)
    assert "wants" in str(exc.value)


def test_trace_jsonl_round_trips():
    g = parse_pmg("nodes: A B C\nA o-> B\nB o-o C")
    trace = []
    rules.close_under(g, ("R1",), trace=trace)
    text = rules.trace_jsonl(trace)
    lines = text.splitlines()
    assert len(lines) == len(trace) == 2
    first = json.loads(lines[0])
    assert first == {
        "rule": "R1",
        "x": "B",
        "y": "C",
        "mark": "arrow",
        "witness": ["A", "B", "C"],
    }
    assert rules.trace_jsonl([]) == ""
