"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

from portcgd import _pykernels as py
from portcgd.canon import encode, tables
from portcgd.corpus import grid_torus, icosahedron
from portcgd.dynamics import evolve, subdivision_rule
from portcgd.pachner import canonical_sphere

try:
    from portcgd import _ckernels as cy
except ImportError:
    cy = None


def workloads():
    return [
        ("icosahedron", icosahedron()),
        ("torus 6x6", grid_torus(6, 6)),
        ("sphere2 subdivided x3", evolve(subdivision_rule(2), canonical_sphere(2), 3)),
        ("sphere3 subdivided x2", evolve(subdivision_rule(3), canonical_sphere(3), 2)),
    ]


def calls(mod, enc, T):
    def bfs():
        for root in range(enc.nv):
            mod.bfs_code(enc.nbr, enc.nq, enc.glu, enc.lab, enc.P, enc.nv, root, T.ident, True, T, None)

    def classes():
        mod.hinge_classes(enc.nbr, enc.nq, enc.glu, enc.pmask, enc.P, enc.nv, T)

    def hinge():
        mod.longest_hinge(enc.nbr, enc.nq, enc.glu, enc.pmask, enc.P, enc.nv, T, 4)

    return [("bfs_code (all roots)", bfs), ("hinge_classes", classes), ("longest_hinge", hinge)]


def best_time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if cy is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'graph':24} {'kernel':22} {'vertices':>8} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, g in workloads():
        enc = encode(g)
        T = tables(enc.P)
        pure = calls(py, enc, T)
        fast = calls(cy, enc, T) if cy is not None else [(k, None) for k, _ in pure]
        for (kernel, fp), (_, fc) in zip(pure, fast):
            tp = best_time(fp, args.repeat)
            if fc is None:
                print(f"{name:24} {kernel:22} {enc.nv:8d} {tp * 1e3:9.2f}ms {'-':>10} {'-':>8}")
                continue
            tc = best_time(fc, args.repeat)
            print(f"{name:24} {kernel:22} {enc.nv:8d} {tp * 1e3:9.2f}ms {tc * 1e3:9.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
