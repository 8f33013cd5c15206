import pytest

from ilsreconf import horn, oracle, tvpi, unit
from ilsreconf.core import ILSInstance, PreconditionError, validate_path
from ilsreconf.generators import gen_chain, gen_equality_chain, random_horn, random_in_regime, random_tvpi
from ilsreconf.unit import CompressedPath, Move


def test_is_unit(eq3):
    assert unit.is_unit(gen_chain(3, 2)) and unit.is_unit(eq3)
    assert not unit.is_unit(ILSInstance.from_rows([[2, -1]], [0], 2))
    assert unit.is_unit(ILSInstance.from_rows([[0, 0]], [0], 2))


def test_move_format_round_trip():
    path = CompressedPath((5, 5, 0), (Move((0, 1), (-1, -1), 3), Move((2,), (1,), 2)))
    text = path.serialize()
    assert text == "U={1,2} dir={-,-} p=3\nU={3} dir={+} p=2\n"
    back = unit.parse_compressed(text, (5, 5, 0))
    assert back == path and back.end == (2, 2, 2) and back.length == 8


def test_unit_horn_trace_on_chain():
    inst = gen_chain(2, 100)
    tr = unit.unit_horn_trace(inst, (100, 100))
    assert tr.minimum == (0, 0)
    assert tr.path.moves[0] == Move((1, 0), (-1, -1), 100)
    assert tr.iterations <= 3
    assert unit.validate_compressed(inst, tr.path, (100, 100), (0, 0))


def test_unit_horn_fixed_points():
    inst = gen_equality_chain(5)
    tr = unit.unit_horn_trace(inst, (5, 5))
    assert tr.minimum == (5, 5) and tr.path.moves == ()
    m, path = unit.unit_horn_min(gen_chain(3, 4), (0, 0, 0))
    assert m == (0, 0, 0) and path.length == 0


def test_unit_horn_rejects_non_unit():
    with pytest.raises(PreconditionError):
        unit.unit_horn_min(ILSInstance.from_rows([[2, -1]], [0], 2), (0, 0))


def test_unit_horn_matches_descent(rng):
    for _ in range(150):
        n = rng.randint(1, 4)
        inst, s = random_horn(rng, n, rng.randint(1, 4), rng.randint(1, 5), unit=True)
        tr = unit.unit_horn_trace(inst, s)
        assert tr.minimum == horn.descend_to_min(inst, s)[0]
        assert tr.iterations <= n + 1
        assert unit.validate_compressed(inst, tr.path, s, tr.minimum)
        assert validate_path(inst, tr.path.expand(), s, tr.minimum)


def test_utvpi_examples():
    inst = gen_chain(2, 1000)
    ok, path = unit.utvpi_reconfigure(inst, (0, 0), (1000, 1000))
    assert ok and path.length == 2000 and path.moves[0].repeat == 1000
    assert unit.validate_compressed(inst, path, (0, 0), (1000, 1000))
    assert unit.utvpi_reconfigure(gen_equality_chain(1000), (0, 0), (1000, 1000)) == (False, None)
    ok, path = unit.utvpi_reconfigure(inst, (3, 3), (3, 3))
    assert ok and path.length == 0


def test_utvpi_agrees_with_tvpi_and_oracle(rng):
    for _ in range(150):
        n = rng.randint(1, 4)
        inst, s = random_tvpi(rng, n, rng.randint(1, 3), rng.randint(1, 5), unit=True)
        t = rng.choice(oracle.state_space(inst).feasible_points())
        ok, path = unit.utvpi_reconfigure(inst, s, t)
        assert ok == tvpi.tvpi_reconfigure(inst, s, t)[0] == oracle.bfs_reachable(inst, s, t)[0]
        if ok:
            assert unit.validate_compressed(inst, path, s, t)
            assert validate_path(inst, path.expand(), s, t)


def test_validate_compressed_rejects_bad_paths():
    inst = gen_chain(2, 3)
    assert unit.validate_compressed(inst, CompressedPath((0, 0), (Move((0, 1), (1, 1), 3),)), (0, 0), (3, 3))
    bad = CompressedPath((0, 0), (Move((1, 0), (1, 1), 2),))  # raises x2 above x1
    assert not unit.validate_compressed(inst, bad)
    over = CompressedPath((0, 0), (Move((0, 1), (1, 1), 4),))  # leaves the domain
    assert not unit.validate_compressed(inst, over)


def test_unit_ils1_examples():
    # chain rows on Q = {1, 2}, a Horn row on H = {3}
    inst = ILSInstance.from_rows([[1, -1, 0], [-1, 1, 0], [-1, 0, 1], [0, 0, -1]], [0, -1, 0, -3], 3)
    ok, path = unit.unit_ils1_solve(inst, (0, 0, 0), (2, 1, 3))
    assert ok == oracle.bfs_reachable(inst, (0, 0, 0), (2, 1, 3))[0]
    assert ok and unit.validate_compressed(inst, path, (0, 0, 0), (2, 1, 3))
    eq = ILSInstance.from_rows([[1, -1, 0], [-1, 1, 0], [0, 0, 1]], [0, 0, 0], 2)
    assert unit.unit_ils1_solve(eq, (0, 0, 1), (2, 2, 1)) == (False, None)
    assert unit.unit_ils1_solve(eq, (1, 1, 1), (1, 1, 1))[0]


def test_unit_ils1_agrees_with_oracle(rng):
    for _ in range(150):
        inst, s = random_in_regime(rng, "ExactlyOne", rng.randint(2, 4), rng.randint(1, 3), rng.randint(2, 6), unit=True)
        t = rng.choice(oracle.state_space(inst).feasible_points())
        ok, path = unit.unit_ils1_solve(inst, s, t)
        assert ok == oracle.bfs_reachable(inst, s, t)[0]
        if ok:
            assert unit.validate_compressed(inst, path, s, t)
