"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from verlinde_bricks import _fallback

try:
    from verlinde_bricks import _native
except ImportError:
    _native = None


def cases():
    rng = random.Random(0)
    order = 4 << 6
    xs, ys, zs = ([rng.randrange(order) for _ in range(100_000)] for _ in range(3))
    pairs = [(rng.randrange(order), rng.randrange(order)) for _ in range(100_000)]
    return [
        ("e_mul x 1e5 (g=3)", lambda m: [m.e_mul_packed(x, y, 3) for x, y in pairs]),
        ("random associativity 1e5 (g=3)", lambda m: m.associativity_failure(xs, ys, zs, 3)),
        ("exhaustive associativity (g=1)", lambda m: m.exhaustive_associativity(1)),
        ("form census (g=4)", lambda m: m.form_census(4)),
        ("form census (g=5)", lambda m: m.form_census(5)),
    ]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _native is None:
        print("compiled extension not available; only the fallback can be timed", file=sys.stderr)
    print(f"{'kernel':34} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat))
        if _native is None:
            print(f"{name:34} {py:11.4f} {'-':>11} {'-':>8}")
            continue
        assert fn(_native) == fn(_fallback), name
        cy = min(timeit.repeat(lambda: fn(_native), number=1, repeat=args.repeat))
        print(f"{name:34} {py:11.4f} {cy:11.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
