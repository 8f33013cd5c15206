import pytest
from hypothesis import given, settings

from conftest import instances
from ilsreconf import _pykernels, accel

needs_ext = pytest.mark.skipif(not accel.HAVE_EXT, reason="compiled kernels not built")


def _mask(inst, use_ext):
    rows = inst.int_rows
    return accel.feasible_mask([r[0] for r in rows], [r[1] for r in rows], inst.n, inst.d, use_ext=use_ext)


def test_weights_and_decode_are_lexicographic():
    w = _pykernels.weights(3, 2)
    assert w == [9, 3, 1]
    assert _pykernels.decode(5, 3, 2) == [0, 1, 2]


@settings(max_examples=100, deadline=None)
@given(instances(max_n=4, max_d=3, max_m=4))
def test_python_mask_matches_direct_evaluation(case):
    inst, _ = case
    mask = _mask(inst, False)
    for idx, ok in enumerate(mask):
        x = _pykernels.decode(idx, inst.n, inst.d)
        assert bool(ok) == inst.is_feasible(x)


@needs_ext
@settings(max_examples=150, deadline=None)
@given(instances(max_n=4, max_d=3, max_m=4))
def test_compiled_kernels_match_fallback(case):
    inst, point = case
    n, d = inst.n, inst.d
    mask_py, mask_cy = _mask(inst, False), _mask(inst, True)
    assert bytes(mask_py) == bytes(mask_cy)
    src = sum(v * w for v, w in zip(point, _pykernels.weights(n, d)))
    dp, pp = accel.bfs_tree(mask_py, n, d, src, use_ext=False)
    dc, pc = accel.bfs_tree(mask_py, n, d, src, use_ext=True)
    assert list(dp) == list(dc) and list(pp) == list(pc)
    lp, cp = accel.component_labels(mask_py, n, d, use_ext=False)
    lc, cc = accel.component_labels(mask_py, n, d, use_ext=True)
    assert cp == cc and list(lp) == list(lc)
    assert list(accel.degrees(mask_py, n, d, use_ext=False)) == list(accel.degrees(mask_py, n, d, use_ext=True))
    assert accel.eccentricity(mask_py, n, d, src, use_ext=False) == accel.eccentricity(mask_py, n, d, src, use_ext=True)


@needs_ext
def test_huge_coefficients_use_the_fallback():
    big = 1 << 70
    coeffs, rhs = [[big, -big]], [0]
    assert bytes(accel.feasible_mask(coeffs, rhs, 2, 2, use_ext=True)) == bytes(_pykernels.feasible_mask(coeffs, rhs, 2, 2))


def test_forcing_missing_extension_raises(monkeypatch):
    monkeypatch.setattr(accel, "HAVE_EXT", False)
    with pytest.raises(RuntimeError):
        accel.degrees(bytearray(b"\x01"), 1, 0, use_ext=True)
