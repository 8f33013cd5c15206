import pytest

from ilsreconf import ils1, oracle
from ilsreconf.core import ILSInstance, PreconditionError, validate_path
from ilsreconf.generators import gen_affine_gadget, gen_chain, random_in_regime
from ilsreconf.index_lp import HALF


def test_partition_example3(eq3):
    part = ils1.compute_qh_partition(eq3)
    assert part.Q == {0, 1} and part.H == set() and part.flipped == set()
    assert part.S == ()


def test_partition_three_variable_system(three_var):
    part = ils1.compute_qh_partition(three_var)
    assert part.Q == {0, 1} and part.H == {2} and part.flipped == {2}


def test_partition_pure_horn_with_explicit_alpha():
    inst = ILSInstance.from_rows([[-1, 1, 0], [0, -1, 1], [-1, -1, 0]], [0, 0, -3], 2)
    part = ils1.compute_qh_partition(inst, alpha=[1, 1, 1])
    assert part.Q == set() and part.H == {0, 1, 2}
    assert part.S == (0, 1, 2)
    assert ils1.qh_violations(part.normalized, part.Q, part.H) == []


def test_partition_rejects_index_above_one():
    with pytest.raises(PreconditionError):
        ils1.compute_qh_partition(gen_affine_gadget())


def test_partition_rejects_bad_alpha(eq3):
    with pytest.raises(ValueError, match="row cost"):
        ils1.partition_from_alpha(eq3, [HALF, 1])  # row 2: positive H entry beside a Q entry
    assert ils1.partition_from_alpha(eq3, [HALF, HALF]).Q == {0, 1}
    assert ils1.partition_from_alpha(eq3, [1, 1]).H == {0, 1}  # the system is Horn too


def test_solve_examples(three_var):
    for a in range(3):
        for b in range(3):
            s, t = (0, 0, a), (2, 2, b)
            if three_var.is_feasible(s) and three_var.is_feasible(t):
                assert ils1.solve_ils1(three_var, s, t) == (False, None)
    inst = gen_chain(3, 2)
    ok, path = ils1.solve_ils1(inst, (0, 0, 0), (2, 2, 2))
    assert ok and validate_path(inst, path, (0, 0, 0), (2, 2, 2)) and path.length == 6
    ok, path = ils1.solve_ils1(inst, (1, 1, 1), (1, 1, 1))
    assert ok and path.length == 0


def test_solve_agrees_with_oracle(rng):
    for _ in range(150):
        inst, s = random_in_regime(rng, "ExactlyOne", rng.randint(2, 4), rng.randint(1, 3), rng.randint(2, 6), unit=False)
        st = oracle.graph_stats(inst)
        pts = oracle.state_space(inst).feasible_points()
        t = rng.choice(pts)
        ok, path = ils1.solve_ils1(inst, s, t)
        assert ok == (st.component_index(s) == st.component_index(t))
        if ok:
            part = ils1.compute_qh_partition(inst)
            assert validate_path(inst, path, s, t)
            assert path.length <= 4 * inst.d * len(part.H) + inst.d * len(part.Q)
