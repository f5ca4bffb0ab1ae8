"""Compare the compiled and numpy particle kernels.

    python benchmarks/bench_kernels.py [--particles N] [--repeat R]
"""
import argparse
import timeit

import numpy as np

from hddlogic import _pykernels

try:
    from hddlogic import _ckernels
except ImportError:
    _ckernels = None


def make_inputs(n, cells, per_cell, seed=0):
    rng = np.random.default_rng(seed)
    cos1 = np.cos(np.pi / 2 - rng.uniform(0, np.pi, n))
    cos2 = np.cos(np.pi / 2 - rng.uniform(0, np.pi, (cells, per_cell)))
    dirs = rng.choice(np.array([-1, 1], dtype=np.int8), cells)
    return cos1, np.ascontiguousarray(cos2), dirs


def bench(backend, cos1, cos2, dirs, repeat):
    signs1 = np.ones(cos1.size, dtype=np.int8)
    signs2 = np.ones(cos2.shape, dtype=np.int8)

    def sweep():
        # one physics-sweep row: reset, opposed pass, net magnetization
        signs1.fill(1)
        backend.apply_field(cos1, signs1, 0.8660254037844386, -1)
        backend.net_magnetization(cos1, signs1)

    def track_pass():
        signs2.fill(-1)
        backend.apply_field_cells(cos2, signs2, 1.0, dirs)
        backend.apply_field_cells(cos2, signs2, 0.8660254037844386, -dirs)
        backend.net_magnetization_cells(cos2, signs2)

    return {
        "sweep row": min(timeit.repeat(sweep, number=1, repeat=repeat)),
        "MC track (2 passes)": min(timeit.repeat(track_pass, number=1, repeat=repeat)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--particles", type=int, default=10**6)
    parser.add_argument("--cells", type=int, default=34)
    parser.add_argument("--per-cell", type=int, default=10_000)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    inputs = make_inputs(args.particles, args.cells, args.per_cell)
    results = {"numpy": bench(_pykernels, *inputs, args.repeat)}
    if _ckernels is not None:
        results["cython"] = bench(_ckernels, *inputs, args.repeat)
    else:
        print("compiled kernels not built; showing numpy only")

    print(f"{'kernel':<22}" + "".join(f"{name:>12}" for name in results) + f"{'speedup':>10}")
    for row in results["numpy"]:
        times = [results[name][row] for name in results]
        line = f"{row:<22}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
