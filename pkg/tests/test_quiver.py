from dataclasses import replace
from itertools import combinations

import networkx as nx
import pytest

from coradical import coradical_blocks
from errors import DivisibilityViolation, InputFormatError, MissingTrivialVertex
from quiver import (
    DYNKIN,
    EUCLIDEAN,
    NEITHER,
    LinkQuiver,
    classify_graph,
    corepresentation_type,
    decide,
    diagram_name,
    link_quiver,
    link_quiver_dot,
    one_sided_invariants,
    outgoing_case,
    separated_components,
    separated_quiver,
    separated_quiver_dot,
    shape_class,
    tits_matrix,
    verdict_from_quiver,
    write_dot,
)


def _multigraph(n, edges):
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def _named_graphs():
    named = {f"A{n}": (DYNKIN, _multigraph(n, [(i, i + 1) for i in range(n - 1)])) for n in range(1, 6)}
    named["D4"] = (DYNKIN, _multigraph(4, [(0, 1), (0, 2), (0, 3)]))
    named["D5"] = (DYNKIN, _multigraph(5, [(0, 1), (1, 2), (2, 3), (2, 4)]))
    named["~A0"] = (EUCLIDEAN, _multigraph(1, [(0, 0)]))
    named["~A1"] = (EUCLIDEAN, _multigraph(2, [(0, 1), (0, 1)]))
    for n in range(3, 6):
        named[f"~A{n - 1}"] = (EUCLIDEAN, _multigraph(n, [(i, (i + 1) % n) for i in range(n)]))
    named["~D4"] = (EUCLIDEAN, _multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]))
    return named


def _small_multigraphs():
    """Connected multigraphs on at most five vertices, up to isomorphism.

    Simple connected graphs from the atlas, each also with one doubled edge
    or one loop added.
    """
    found = []

    def keep(g):
        for other in found:
            if other.number_of_edges() == g.number_of_edges() and nx.is_isomorphic(other, g):
                return
        found.append(g)

    for simple in nx.graph_atlas_g()[1:]:
        n = simple.number_of_nodes()
        if n > 5 or not nx.is_connected(simple):
            continue
        base = nx.MultiGraph(simple)
        keep(base)
        for u, v in simple.edges():
            doubled = nx.MultiGraph(base)
            doubled.add_edge(u, v)
            keep(doubled)
        for v in simple.nodes():
            looped = nx.MultiGraph(base)
            looped.add_edge(v, v)
            keep(looped)
    return found


def _oracle(g, named):
    for name, (kind, reference) in named.items():
        if (reference.number_of_nodes() == g.number_of_nodes()
                and reference.number_of_edges() == g.number_of_edges()
                and nx.is_isomorphic(reference, g)):
            return name, kind
    return None, NEITHER


def test_tits_form_matches_named_diagrams():
    named = _named_graphs()
    graphs = _small_multigraphs()
    assert len(graphs) > 100
    seen = set()
    for g in graphs:
        name, kind = _oracle(g, named)
        assert classify_graph(g) == kind, (name, sorted(g.edges()))
        assert diagram_name(g) == name, sorted(g.edges())
        assert shape_class(diagram_name(g)) == kind
        if name:
            seen.add(name)
    assert seen == set(named)


def test_tits_matrix_counts_loops_and_multi_edges():
    matrix = tits_matrix(2, ((0, 0), (0, 1), (0, 1)))
    assert matrix.tolist() == [[0, -2], [-2, 2]]


def test_exceptional_shapes_are_named():
    e6 = _multigraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
    assert diagram_name(e6) == "E6"
    assert classify_graph(e6) == DYNKIN
    d5_tilde = _multigraph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    assert diagram_name(d5_tilde) == "~D5"
    assert classify_graph(d5_tilde) == EUCLIDEAN


@pytest.mark.parametrize(
    "into_count, dims, expected",
    [
        (0, [], "Finite"),
        (1, [1], "Finite"),
        (1, [4], "TameCandidate(ii)"),
        (1, [9], "Wild(iii)"),
        (2, [1, 1], "TameCandidate(i)"),
        (2, [1], "TameCandidate(i)"),
        (2, [4], "Wild(ii)"),
        (3, [1], "Wild(i)"),
    ],
)
def test_decision_table(into_count, dims, expected):
    assert str(decide(into_count, dims)) == expected


def test_outgoing_cases():
    assert outgoing_case(1, {"C": 4}) == "i"
    assert outgoing_case(2, {"kg": 1}) == "ii"
    assert outgoing_case(2, {"kg": 1, "kh": 1}) == "iii"
    assert outgoing_case(3, {"kg": 1}) is None


def test_loop_at_trivial_vertex_is_finite():
    q = LinkQuiver(vertices=[("k1", 1)], arrows={("k1", "k1"): 1}, trivial="k1")
    verdict = verdict_from_quiver(q)
    assert verdict.kind == "Finite"
    assert verdict.evidence["separated_consistent"]
    assert [c["diagram"] for c in separated_components(q)] == ["A2"]


def test_three_arrows_into_trivial_vertex_are_wild():
    q = LinkQuiver(vertices=[("k1", 1), ("kg", 1)], arrows={("kg", "k1"): 3, ("k1", "kg"): 3}, trivial="k1")
    verdict = verdict_from_quiver(q)
    assert str(verdict) == "Wild(i)"
    assert verdict.to_dict()["label"] == "Wild(i)"
    assert verdict.evidence["divisibility"] == {"k1": True, "kg": True}


def test_invariants_need_the_trivial_vertex():
    q = LinkQuiver(vertices=[("kg", 1)], arrows={("kg", "kg"): 1})
    with pytest.raises(MissingTrivialVertex):
        one_sided_invariants(q)


def test_quiver_json_validation():
    q = LinkQuiver(vertices=[("k1", 1), ("C", 2)], arrows={("C", "k1"): 1, ("k1", "C"): 0}, trivial="k1")
    assert ("k1", "C") not in q.arrows
    assert LinkQuiver.from_json(q.to_json()) == q
    with pytest.raises(InputFormatError):
        LinkQuiver(vertices=[("k1", 1), ("k1", 1)])
    with pytest.raises(InputFormatError):
        LinkQuiver(vertices=[("k1", 1)], arrows={("k1", "kg"): 1})
    with pytest.raises(InputFormatError):
        LinkQuiver.from_json({"arrows": []})


def test_separated_quiver_is_bipartite():
    q = LinkQuiver(vertices=[("k1", 1), ("kg", 1)], arrows={("kg", "k1"): 2, ("k1", "kg"): 2}, trivial="k1")
    g = separated_quiver(q)
    assert g.number_of_nodes() == 4
    assert g.number_of_edges() == 4
    assert nx.is_bipartite(g)
    assert sorted(c["class"] for c in separated_components(q)) == [EUCLIDEAN, EUCLIDEAN]


def test_dot_output(tmp_path):
    q = LinkQuiver(vertices=[("k1", 1), ("C", 2)], arrows={("C", "k1"): 1, ("k1", "C"): 1}, trivial="k1")
    text = link_quiver_dot(q)
    assert text.startswith('digraph "link_quiver" {')
    assert '"C" -> "k1" [multiplicity=1, label="1"];' in text
    assert '"C" [label="C (4)"];' in text
    sep = separated_quiver_dot(q)
    assert sep.startswith('graph "separated_quiver" {')
    assert "k1'" in sep
    path = write_dot(q, tmp_path / "dot" / "q.dot", separated=True)
    assert (tmp_path / "dot" / "q.dot").read_text() == sep
    assert path.endswith("q.dot")


def test_sweedler_is_finite(sweedler):
    q = link_quiver(sweedler.hopf)
    assert q.trivial == "k1"
    assert q.arrows == {("kg", "k1"): 1, ("k1", "kg"): 1}
    assert verdict_from_quiver(q).kind == "Finite"


def test_case_ii_is_a_tame_candidate(case_ii):
    verdict = corepresentation_type(case_ii.hopf)
    assert str(verdict) == "TameCandidate(i)"
    assert verdict.evidence["invariants"]["into_count"] == 2
    assert verdict.evidence["link_indecomposable"]


def test_dual_dihedral_is_a_tame_candidate(d8star):
    verdict = corepresentation_type(d8star.hopf)
    assert str(verdict) == "TameCandidate(ii)"
    assert verdict.evidence["invariants"]["source_dims"] == {"C": 4}
    assert verdict.evidence["outgoing_case"] == "i"


@pytest.mark.parametrize(
    "name, expected",
    [("case-iii", "TameCandidate(i)"), ("q8star", "TameCandidate(ii)")],
)
def test_catalog_verdicts_see_a_euclidean_component(catalog, name, expected):
    verdict = corepresentation_type(catalog(name).hopf)
    assert str(verdict) == expected
    classes = {c["class"] for c in verdict.evidence["separated_components"]}
    assert EUCLIDEAN in classes
    assert NEITHER not in classes


def test_component_of_the_trivial_vertex():
    q = LinkQuiver(
        vertices=[("k1", 1), ("kg", 1), ("kh", 1), ("C", 2)],
        arrows={("kg", "k1"): 1, ("C", "kh"): 1},
        trivial="k1",
    )
    assert q.component_of_trivial() == ["k1", "kg"]
    assert not q.is_link_indecomposable()
    with pytest.raises(MissingTrivialVertex):
        LinkQuiver(vertices=[("kg", 1)]).component_of_trivial()


def test_wrong_comatrix_size_breaks_divisibility(sweedler):
    blocks = coradical_blocks(sweedler.hopf)
    assert [b.label for b in blocks] == ["k1", "kg"]
    inflated = [replace(blocks[0], comatrix_dim=2), blocks[1]]
    with pytest.raises(DivisibilityViolation):
        link_quiver(sweedler.hopf, blocks=inflated)
