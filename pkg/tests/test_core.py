from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import instances
from ilsreconf.core import (
    ILSInstance,
    InfeasibleError,
    ParseError,
    PathWitness,
    evaluate,
    flip_variable,
    format_assignment,
    hamming,
    join_paths,
    parse_assignment,
    parse_instance,
    parse_path,
    serialize_instance,
    serialize_path,
    validate_path,
)


def test_parse_example3_text():
    inst = parse_instance("2 2 2\n1 -1 >= 0\n-1 1 >= 0\n")
    assert (inst.m, inst.n, inst.d) == (2, 2, 2)
    assert inst.A == ((1, -1), (-1, 1))
    assert inst.b == (0, 0)


def test_parse_empty_system_accepts_everything():
    inst = parse_instance("0 1 1\n")
    assert inst.m == 0
    assert inst.is_feasible((0,)) and inst.is_feasible((1,))


def test_parse_rational_coefficient_and_comments():
    inst = parse_instance("# a comment\n1 2 2\n1 1/2 >= 1\n")
    assert inst.A[0] == (Fraction(1), Fraction(1, 2))


def test_parse_reduces_to_lowest_terms():
    inst = parse_instance("1 1 3\n4/6 >= 2/4\n")
    assert inst.A[0][0] == Fraction(2, 3) and inst.b[0] == Fraction(1, 2)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("2 2\n", 1),
        ("1 2 2\n1 >= 0\n", 2),
        ("1 2 2\n1 x >= 0\n", 2),
        ("1 1 0\n1 >= 0\n", 1),
        ("1 1 1\n1 1/0 >= 0\n", None),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    if lineno is not None:
        assert err.value.lineno == lineno


def test_parse_wrong_row_count():
    with pytest.raises(ParseError):
        parse_instance("2 1 1\n1 >= 0\n")


def test_evaluate_examples(eq3, chain22):
    rep = evaluate(eq3, (1, 1))
    assert rep.feasible and rep.slacks == (0, 0) and rep.violated_rows == ()
    rep = evaluate(eq3, (1, 2))
    assert not rep.feasible and rep.violated_rows == (0,)
    rep = evaluate(chain22, (2, 0))
    assert not rep.feasible and rep.violated_rows == (1,)


def test_evaluate_rejects_bad_points(eq3):
    with pytest.raises(ValueError):
        evaluate(eq3, (1, 2, 3))
    with pytest.raises(ValueError):
        evaluate(eq3, (3, 0))


def test_flip_single_row():
    inst = ILSInstance.from_rows([[-1]], [-1], 1)
    flipped, _ = flip_variable(inst, 1)
    assert flipped.A == ((1,),) and flipped.b == (0,)


def test_flip_point_and_involution():
    inst = ILSInstance.from_rows([[1, -1, 2]], [0], 3)
    once, pts = flip_variable(inst, 2, [(0, 0, 0)])
    assert pts == [(0, 3, 0)]
    twice, back = flip_variable(once, 2, pts)
    assert twice == inst and back == [(0, 0, 0)]


def test_flip_index_out_of_range(eq3):
    with pytest.raises(IndexError):
        flip_variable(eq3, 3)


@settings(max_examples=150, deadline=None)
@given(instances(), st.data())
def test_flip_preserves_feasibility(case, data):
    inst, _ = case
    j = data.draw(st.integers(1, inst.n))
    x = tuple(data.draw(st.lists(st.integers(0, inst.d), min_size=inst.n, max_size=inst.n)))
    flipped, (y,) = flip_variable(inst, j, [x])
    assert flipped.is_feasible(y) == inst.is_feasible(x)


@settings(max_examples=150, deadline=None)
@given(instances())
def test_serialize_round_trip(case):
    inst, _ = case
    assert parse_instance(serialize_instance(inst)) == inst


def test_coord_range_is_the_feasible_interval(chain22):
    assert chain22.coord_range((1, 1), 0) == (1, 2)
    assert chain22.coord_range((1, 1), 1) == (0, 1)


def test_assignment_and_path_formats():
    assert parse_assignment("0 2 1") == (0, 2, 1)
    assert format_assignment((0, 2, 1)) == "0 2 1"
    with pytest.raises(ParseError):
        parse_assignment("0 1", 3)
    path = PathWitness(((0, 0), (1, 0), (1, 1)))
    assert parse_path(serialize_path(path)) == path


def test_validate_path(chain22):
    good = PathWitness(((0, 0), (1, 0), (1, 1)))
    assert validate_path(chain22, good, (0, 0), (1, 1))
    assert not validate_path(chain22, good, (0, 0), (2, 2))
    jump = PathWitness(((0, 0), (1, 1)))
    assert not validate_path(chain22, jump)
    bad = PathWitness(((0, 0), (0, 1)))
    assert not validate_path(chain22, bad)


def test_single_vertex_path_has_length_zero():
    p = PathWitness(((1, 1),))
    assert p.length == 0 and p.start == p.end == (1, 1)


def test_join_paths_drops_repeated_junctions():
    p = join_paths([(0, 0), (1, 0)], [(1, 0), (1, 1)])
    assert p.steps == ((0, 0), (1, 0), (1, 1))
    assert hamming((0, 0), (1, 1)) == 2


def test_infeasible_error_is_value_error():
    assert issubclass(InfeasibleError, ValueError)
