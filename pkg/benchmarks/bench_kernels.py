"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints calls per second for each kernel and backend and the speedup.
"""
import argparse
import time

import numpy as np

from shortcutnav import kernels
from shortcutnav.world import AGENT_RADIUS, CELL, make_house


def _rate(fn, calls, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in calls:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return len(calls) / best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--n", type=int, default=2000, help="calls per kernel")
    args = p.parse_args(argv)

    house = make_house(3)
    kind = house.layout.kind
    rng = np.random.default_rng(0)
    pts = rng.uniform(0.3, 5.7, (args.n, 4))
    heads = rng.uniform(0, 360, args.n)
    ray_calls = [(kind, house.wall_color, house.obj_grid, house.obj_small, x, y, h, 0, 15, 90.0, 10.0, CELL)
                 for (x, y, _, _), h in zip(pts, heads)]
    seg_calls = [(kind, x0, y0, x1, y1, CELL) for x0, y0, x1, y1 in pts]
    sweep_calls = [(kind, x0, y0, x0 + 0.25, y0, AGENT_RADIUS, CELL, 0.05) for x0, y0, _, _ in pts]
    src = house.success_mask(0)
    bfs_calls = [(house.layout.passable, src, CELL)] * max(1, args.n // 100)

    backends = kernels.backends()
    print(f"selected backend: {kernels.BACKEND}")
    print(f"{'kernel':<14}" + "".join(f"{b:>14}" for b in backends) + f"{'speedup':>10}")
    for name, calls in (("cast_rays", ray_calls), ("segment_clear", seg_calls),
                        ("sweep_clear", sweep_calls), ("bfs_field", bfs_calls)):
        rates = {b: _rate(getattr(m, name), calls, args.repeat) for b, m in backends.items()}
        speed = rates["cython"] / rates["python"] if "cython" in rates else float("nan")
        print(f"{name:<14}" + "".join(f"{r:>12.0f}/s" for r in rates.values()) + f"{speed:>9.1f}x")


if __name__ == "__main__":
    main()
