"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``ILS_PURE_PYTHON=1`` to force the fallback. Rows whose 64-bit evaluation
could overflow are always routed to the fallback, which uses Python integers.
"""

import os

from ilsreconf import _pykernels

HAVE_EXT = False
_ext = None
if os.environ.get("ILS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ilsreconf import _kernels as _ext

        HAVE_EXT = True
    except ImportError:
        _ext = None

BACKEND = "cython" if HAVE_EXT else "python"
_LIMIT = 1 << 62


def _fits(coeffs, rhs, n, d):
    for row, b in zip(coeffs, rhs):
        if sum(abs(c) for c in row) * d + abs(b) >= _LIMIT:
            return False
    return True


def _impl(use_ext=None):
    if use_ext is None:
        use_ext = HAVE_EXT
    if use_ext and not HAVE_EXT:
        raise RuntimeError("compiled kernels are not built")
    return _ext if use_ext else _pykernels


def feasible_mask(coeffs, rhs, n, d, use_ext=None):
    impl = _impl(use_ext)
    if impl is _ext and not _fits(coeffs, rhs, n, d):
        impl = _pykernels
    return impl.feasible_mask(coeffs, rhs, n, d)


def bfs_tree(mask, n, d, src, target=-1, use_ext=None):
    return _impl(use_ext).bfs_tree(mask, n, d, src, target)


def component_labels(mask, n, d, use_ext=None):
    return _impl(use_ext).component_labels(mask, n, d)


def degrees(mask, n, d, use_ext=None):
    return _impl(use_ext).degrees(mask, n, d)


def eccentricity(mask, n, d, src, use_ext=None):
    return _impl(use_ext).eccentricity(mask, n, d, src)


weights = _pykernels.weights
decode = _pykernels.decode
