"""Time the compiled solution-graph kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Every kernel is run on the same inputs by both backends and the outputs are
compared before timings are reported.
"""

import argparse
import random
import sys
import time

from ilsreconf import accel
from ilsreconf.generators import gen_chain, gen_diameter_family, random_general


def _cases():
    rng = random.Random(0)
    yield "chain n=6 d=9", gen_chain(6, 9)
    yield "diameter n=6 d=2", gen_diameter_family(6, 2).instance
    inst, _ = random_general(rng, 8, 4, 6, slack=6)
    yield "random n=8 d=4 m=6", inst


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not accel.HAVE_EXT:
        print("compiled kernels are not built; run `python setup.py build_ext --inplace`")
        return 1

    print(f"{'instance':<22}{'kernel':<18}{'states':>10}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, inst in _cases():
        rows = inst.int_rows
        coeffs, rhs = [r[0] for r in rows], [r[1] for r in rows]
        n, d = inst.n, inst.d
        mask = accel.feasible_mask(coeffs, rhs, n, d, use_ext=False)
        src = next(i for i, ok in enumerate(mask) if ok)
        kernels = {
            "feasible_mask": lambda ext: bytes(accel.feasible_mask(coeffs, rhs, n, d, use_ext=ext)),
            "bfs_tree": lambda ext: [list(a) for a in accel.bfs_tree(mask, n, d, src, use_ext=ext)],
            "component_labels": lambda ext: (lambda r: (list(r[0]), r[1]))(accel.component_labels(mask, n, d, use_ext=ext)),
            "degrees": lambda ext: list(accel.degrees(mask, n, d, use_ext=ext)),
        }
        for kname, fn in kernels.items():
            tp, outp = _best(lambda: fn(False), args.repeat)
            tc, outc = _best(lambda: fn(True), args.repeat)
            if outp != outc:
                print(f"MISMATCH in {kname} on {name}")
                return 1
            print(f"{name:<22}{kname:<18}{len(mask):>10}{tp:>11.4f}{tc:>11.4f}{tp / max(tc, 1e-9):>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
