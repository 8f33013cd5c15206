import pytest

from ilsreconf import oracle
from ilsreconf.core import InfeasibleError
from ilsreconf.generators import gen_affine_gadget, gen_chain, gen_hypercube, random_in_regime
from ilsreconf.solve import check_result, solve


def test_dispatch_by_regime(eq3, chain22, cube3):
    r = solve(cube3, (0, 0, 0), (1, 1, 1))
    assert r.method_used == "zlt1" and r.answer and r.z == 0
    r = solve(chain22, (0, 0), (2, 2))
    assert r.method_used == "unit" and r.answer and r.compressed is not None
    assert solve(eq3, (0, 0), (2, 2)).answer is False
    r = solve(gen_affine_gadget(), (1, 0, 0), (0, 1, 0))
    assert r.method_used == "oracle" and r.answer is False


def test_non_unit_index_one_uses_ils1():
    from ilsreconf.core import ILSInstance

    inst = ILSInstance.from_rows([[2, -1], [-1, 2]], [0, 0], 3)
    r = solve(inst, (0, 0), (3, 3))
    assert r.method_used == "ils1"
    assert r.answer == oracle.bfs_reachable(inst, (0, 0), (3, 3))[0]


def test_explicit_methods_agree(chain22):
    for method in ("horn", "tvpi", "ils1", "unit", "oracle"):
        r = solve(chain22, (0, 0), (2, 2), method=method)
        assert r.answer and check_result(chain22, (0, 0), (2, 2), r)
        assert r.path().length >= 4


def test_budget_gives_undecided():
    r = solve(gen_affine_gadget(), (1, 0, 0), (0, 1, 0), max_states=2)
    assert r.answer is None and "budget" in r.note


def test_errors(eq3):
    with pytest.raises(ValueError):
        solve(eq3, (0, 0), (1, 1), method="magic")
    with pytest.raises(InfeasibleError):
        solve(eq3, (0, 1), (1, 1))


def test_large_unit_chain_is_fast():
    d = 10**6
    r = solve(gen_chain(3, d), (0, 0, 0), (d, d, d))
    assert r.answer and r.length == 3 * d
    assert check_result(gen_chain(3, d), (0, 0, 0), (d, d, d), r)


def test_auto_matches_oracle(rng):
    for regime, lo in (("LessThanOne", 1), ("ExactlyOne", 2), ("GreaterThanOne", 3)):
        for _ in range(40):
            inst, s = random_in_regime(rng, regime, rng.randint(lo, 4), rng.randint(1, 3), rng.randint(1, 6))
            t = rng.choice(oracle.state_space(inst).feasible_points())
            r = solve(inst, s, t)
            assert r.answer == solve(inst, s, t, method="oracle").answer
            assert check_result(inst, s, t, r)
