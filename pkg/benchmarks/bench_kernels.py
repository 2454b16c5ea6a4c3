"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from mcgdim import _kernels
from mcgdim._kernels import _python
from mcgdim.criterion import check_criterion
from mcgdim.groups import from_spec
from mcgdim.verifiers import verify_lambda_bounds

try:
    from mcgdim._kernels import _native
except ImportError:
    _native = None


def _lattice(spec):
    G = from_spec(spec)
    return lambda impl: impl.all_subgroups(G.flat, G.order)


def _closure(spec):
    G = from_spec(spec)
    gens = list(range(1, G.order, max(1, G.order // 4)))
    return lambda impl: [impl.subgroup_closure(G.flat, G.order, [x]) for x in range(G.order)] + [
        impl.subgroup_closure(G.flat, G.order, gens)
    ]


def _multisets(weights, budget):
    return lambda impl: impl.bounded_multisets(weights, budget, -1)


def _words(weights, budget):
    return lambda impl: impl.dihedral_words(weights, budget)


KERNELS = ("bounded_multisets", "dihedral_words", "subgroup_closure", "all_subgroups")


def _end_to_end(run):
    # swap the backend the library modules call through
    def go(impl):
        saved = {k: getattr(_kernels, k) for k in KERNELS}
        try:
            for k in KERNELS:
                setattr(_kernels, k, getattr(impl, k))
            return run()
        finally:
            for k, v in saved.items():
                setattr(_kernels, k, v)

    return go


CASES = [
    ("lattice S5", _lattice("S5")),
    ("lattice D32", _lattice("D32")),
    ("lattice C2^6", _lattice("C2xC2xC2xC2xC2xC2")),
    ("lattice S4xC2xC2", _lattice("S4xC2xC2")),
    ("closure S5", _closure("S5")),
    ("multisets", _multisets([240, 320, 360, 384, 400, 420, 440, 450, 460], 3000)),
    ("dihedral words", _words([120, 160, 180, 192, 200, 210], 1100)),
    ("criterion g=10", _end_to_end(lambda: check_criterion(10).to_json())),
    ("lambda audit cap 200", _end_to_end(lambda: verify_lambda_bounds(None, 200))),
]


def timed(fn, impl, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(impl)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _native is None:
        print("compiled extension not built; only the fallback is available", file=sys.stderr)
        return 1
    print(f"{'case':<26}{'python s':>12}{'native s':>12}{'speedup':>10}")
    for name, fn in CASES:
        tp, rp = timed(fn, _python, args.repeat)
        tn, rn = timed(fn, _native, args.repeat)
        if rp != rn:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:<26}{tp:>12.4f}{tn:>12.4f}{tp / tn:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
