"""Compiled versus pure-Python kernels on the two hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import timeit

from eraserpda._kernels import _pykernel
from eraserpda.construction import build_B
from eraserpda.sampling import structured_samples

try:
    from eraserpda._kernels import _ckernel
except ImportError:
    _ckernel = None


def erase_inputs(rng, n=20_000):
    return [([rng.choice((-1, -1, 1, 2, 3)) for _ in range(rng.randint(10, 60))], rng.randint(1, 3))
            for _ in range(n)]


def search_inputs(rng, n=2_000):
    pda = build_B()
    comp = pda.compiled()
    q0, z0 = comp["sid"][pda.initial], comp["zid"][pda.bottom]
    words = [tuple(comp["aid"][a] for a in e) for e in structured_samples(rng, n)]
    return comp["table"], comp["finals"], q0, z0, words


def run_erase(kernel, inputs):
    for codes, e in inputs:
        kernel.erase_pass(codes, e)


def run_search(kernel, args):
    table, finals, q0, z0, words = args
    for w in words:
        kernel.search(table, finals, q0, z0, w, 512, 2_000_000, None, False)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    cases = [("erase_pass x20000", run_erase, erase_inputs(rng)),
             ("search B x2000", run_search, search_inputs(rng))]
    kernels = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    if _ckernel is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    print(f"{'case':<20}" + "".join(f"{name:>12}" for name, _ in kernels) + ("     speedup" if _ckernel else ""))
    for label, fn, data in cases:
        times = [min(timeit.repeat(lambda: fn(k, data), number=1, repeat=args.repeat)) for _, k in kernels]
        row = f"{label:<20}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
