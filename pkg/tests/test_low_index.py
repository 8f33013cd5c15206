import pytest

from ilsreconf import oracle
from ilsreconf.core import ILSInstance, PreconditionError, validate_path
from ilsreconf.generators import random_in_regime
from ilsreconf.low_index import (
    COND_I,
    COND_II,
    elimination_ordering,
    has_p1,
    normalize_p1,
    prefix_path,
    replay_ordering,
    z_less_one_path,
)


def test_orderings():
    pos = ILSInstance.from_rows([[1, 2], [3, 1]], [1, 1], 2)
    o = elimination_ordering(pos)
    assert o.order == (0, 1) and o.kinds == (COND_II, COND_II)
    assert replay_ordering(pos, o)
    assert elimination_ordering(ILSInstance.from_rows([[1, -1], [-1, 1]], [0, 0], 2)) is None
    o = elimination_ordering(ILSInstance.from_rows([[3]], [1], 2))
    assert o.order == (0,)


def test_normalize_all_positive():
    form = normalize_p1(ILSInstance.from_rows([[1, 2], [3, 1]], [1, 1], 2))
    assert form.flipped == {0, 1}
    assert all(a < 0 for row in form.instance.A for a in row)
    assert has_p1(form.instance)


def test_normalize_keeps_p1_input(cube3):
    horn_p1 = ILSInstance.from_rows([[-1, 1, 0], [-1, -1, 1]], [0, -1], 2)
    assert normalize_p1(horn_p1).instance == horn_p1
    assert normalize_p1(cube3).flipped == frozenset()


def test_normalize_rejects_index_one(eq3):
    with pytest.raises(PreconditionError):
        normalize_p1(eq3)


def test_prefix_path():
    assert prefix_path((1, 0, 1), (0, 0, 0)) == [(1, 0, 1), (0, 0, 1), (0, 0, 1), (0, 0, 0)]


def test_path_examples(cube3):
    p = z_less_one_path(cube3, (1, 0, 1), (0, 1, 0))
    assert validate_path(cube3, p, (1, 0, 1), (0, 1, 0)) and p.length <= 6
    single = ILSInstance.from_rows([[-1]], [-5], 5)
    p = z_less_one_path(single, (0,), (5,))
    assert p.steps == ((0,), (5,))
    assert z_less_one_path(cube3, (1, 1, 0), (1, 1, 0)).length == 0


def test_path_rejects_index_one(eq3):
    with pytest.raises(PreconditionError):
        z_less_one_path(eq3, (0, 0), (0, 0))


def test_low_index_connected_and_short(rng):
    for _ in range(150):
        n = rng.randint(1, 4)
        inst, s = random_in_regime(rng, "LessThanOne", n, rng.randint(1, 3), rng.randint(1, 6))
        assert elimination_ordering(inst) is not None
        assert replay_ordering(inst, elimination_ordering(inst))
        st = oracle.graph_stats(inst)
        assert st.component_count == 1
        t = rng.choice(oracle.state_space(inst).feasible_points())
        p = z_less_one_path(inst, s, t)
        assert validate_path(inst, p, s, t) and p.length <= 2 * n
