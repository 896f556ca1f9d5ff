import random
from fractions import Fraction

import pytest

from rwgraphs.diagrams import (
    ChordDiagram,
    DiagramVector,
    _halves,
    chord_basis,
    close_lines,
    enumerate_diagrams,
    format_diagram,
    forget_to_graph,
    juxtapose,
    normal_form,
    parse_diagram,
    signature,
    stu_candidates,
    stu_equal,
    stu_reduce,
    stu_rewrite,
    stu_terms,
)
from rwgraphs.graphs import THETA, GraphError, GraphVector
from rwgraphs.wheels import Wheel, polywheel_close

POSITIVE_CHORD = "circle E: (1,2); edges: 2-1"


# gl_N weight system on pure chord diagrams of one circle: each chord is an
# untwisted band on a disc and the value is N^(boundary components).  It is
# invariant under reflection, so it does not see the STU mirror convention.

def _boundary_components(d):
    (_, _, cyc), = d.circles()
    where = {v: i for i, v in enumerate(cyc)}
    m = len(cyc)
    partner = {}
    for a, b, k in d.edges:
        if not k:
            partner[where[a]], partner[where[b]] = where[b], where[a]
    seen, count = set(), 0
    for i in range(m):
        if i in seen:
            continue
        count += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = (partner[j] + 1) % m
    return count


def gl_weight(v, N=7):
    total = Fraction(0)
    for d, c in v.terms.items():
        assert not d.internal() and not d.bare
        total += c * _halves(d)[2] * N ** _boundary_components(d)
    return total


def _chords(k, line=False):
    word = "line" if line else "circle"
    ids = ",".join(str(i) for i in range(1, 2 * k + 1))
    legs = ", ".join(f"{2 * i}-{2 * i - 1}" for i in range(1, k + 1))
    return parse_diagram(f"{word} E: ({ids})" + (f"; edges: {legs}" if k else ""))


def geometric(d):
    """``d`` rescaled so that it is the diagram with every external vertex
    ordered (incoming arc, outgoing arc, leg)."""
    return DiagramVector.of(d, _halves(d)[2])


# --- parsing --------------------------------------------------------------

def test_round_trip_of_enumerated_diagrams():
    for k in range(4):
        for line in (False, True):
            for d in enumerate_diagrams(k, line=line):
                assert DiagramVector.of(parse_diagram(format_diagram(d))) == DiagramVector.of(d)


@pytest.mark.parametrize("text,fragment", [
    ("circle E: (1,1)", "twice"),
    ("circle E: (1); line F: (1); edges: 1-2", "two circles"),
    ("circle E: (1,2); edges: 1-2, 1-2", "external vertex 1 has degree 2"),
    ("circle E: (1,2); edges: 1-3, 2-3", "internal vertex 3 has degree 2"),
    ("sphere E: (1)", "expected"),
    ("circle E: (a)", "bad vertex"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_diagram(text)


def test_bare_and_line_skeletons():
    d = parse_diagram("line E: (); circle F: ()")
    assert d.n == 0 and d.bare == ("E|", "F") and d.lines() == ["E"]
    assert _chords(2, line=True).lines() == ["E"]


def test_validation_of_raw_diagrams():
    with pytest.raises(GraphError):
        ChordDiagram(2, ((0, 1, "E"), (1, 0, "E")))
    with pytest.raises(GraphError):
        ChordDiagram(1, ((0, 0, ""),), sign=3)


# --- enumeration and the 4T quotient --------------------------------------

def test_enumeration_counts():
    assert [len(enumerate_diagrams(k)) for k in range(5)] == [1, 1, 4, 15, 104]
    assert [len(enumerate_diagrams(k, line=True)) for k in range(4)] == [1, 1, 5, 41]


@pytest.mark.parametrize("line", [False, True])
def test_chord_quotient_dimensions(line):
    # framed chord diagrams modulo 4T: 1, 2, 3, 6
    dims = [len(chord_basis(signature(_chords(k, line))).basis) for k in range(1, 5)]
    assert dims == [1, 2, 3, 6]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_normal_form_preserves_gl_weight(k):
    for d in chord_basis(signature(_chords(k))).expansion:
        v = DiagramVector.of(d)
        assert gl_weight(normal_form(v)) == gl_weight(v)


def test_stu_rewrite_orders_agree_under_gl_weight():
    rng = random.Random(11)
    for k in range(1, 4):
        for d in enumerate_diagrams(k):
            v = DiagramVector.of(d)
            a = stu_rewrite(v)
            b = stu_rewrite(v, lambda _d, c: rng.choice(c))
            assert gl_weight(a) == gl_weight(b) == gl_weight(stu_reduce(v))


# --- single moves ----------------------------------------------------------

def test_stu_on_y_diagram():
    y = parse_diagram("circle E: (1,2,3); edges: 1-4, 2-4, 3-4")
    cands = stu_candidates(y)
    assert len(cands) == 3
    expansions = []
    for x, t in cands:
        e = DiagramVector()
        for coef, term in stu_terms(y, x, t):
            e.add_term(term, coef)
        assert all(not d.internal() for d in e.terms)
        expansions.append(e)
    # the three expansions agree modulo 4T, and their gl weights agree exactly
    assert stu_equal(expansions[0], expansions[1]) and stu_equal(expansions[1], expansions[2])
    assert len({gl_weight(e) for e in expansions}) == 1


def test_stu_terms_rejects_wrong_pair():
    y = parse_diagram("circle E: (1,2,3); edges: 1-4, 2-4, 3-4")
    with pytest.raises(GraphError):
        stu_terms(y, 0, 1)


def test_closed_component_is_reduced_by_graph_homology():
    with_dumbbell = parse_diagram(POSITIVE_CHORD + ", 3-3, 4-4, 3-4")
    assert not stu_reduce(DiagramVector.of(with_dumbbell))
    with_theta = DiagramVector.of(parse_diagram(POSITIVE_CHORD + ", 3-4, 3-4, 3-4"))
    assert stu_reduce(with_theta) == with_theta


# --- lines, closure, forgetting --------------------------------------------

def test_juxtaposition_on_chords_and_empty_line():
    one = DiagramVector.of(_chords(1, line=True))
    empty = DiagramVector.of(parse_diagram("line E: ()"))
    assert juxtapose(one, empty) == one == juxtapose(empty, one)
    # the edge-picture sign is not multiplicative over chords; the geometric one is
    two = juxtapose(one, one)
    assert two == geometric(_chords(2, line=True)) == -DiagramVector.of(_chords(2, line=True))


def test_juxtaposition_label_mismatch():
    a = DiagramVector.of(parse_diagram("line E: ()"))
    b = DiagramVector.of(parse_diagram("line F: ()"))
    with pytest.raises(GraphError, match="label mismatch"):
        juxtapose(a, b)


def test_closing_a_line():
    v = close_lines(DiagramVector.of(_chords(2, line=True)))
    assert v == DiagramVector.of(_chords(2))


def test_positive_chord_forgets_to_theta():
    g = forget_to_graph(parse_diagram(POSITIVE_CHORD))
    assert GraphVector.of(g) == GraphVector.of(THETA)
    g = forget_to_graph(parse_diagram("circle E: (1,2); edges: 1-2"))
    assert GraphVector.of(g) == -GraphVector.of(THETA)
    with pytest.raises(GraphError, match="bare"):
        forget_to_graph(parse_diagram("circle E: ()"))


def test_bold_two_wheel_is_the_positive_chord():
    v = polywheel_close([Wheel(2, bold=True)])
    assert all(not d.internal() for d in v.terms)
    assert stu_reduce(v) == v == DiagramVector.of(parse_diagram(POSITIVE_CHORD))
    total = GraphVector()
    for d, c in v.terms.items():
        total = total + GraphVector.of(forget_to_graph(d), c)
    assert total == GraphVector.of(THETA)
