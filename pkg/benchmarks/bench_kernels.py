"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the Riemann-Roch grid used by the acceptance suite (all alpha, beta in
[-10, 10], twists in [-5, 5]^2, c in 0..4) and a batch of Chow ring products,
and checks that both backends return identical values.
"""

import argparse
import random
import time

from ruledfano import kernels


def rr_grid(mod):
    out = []
    for c in range(5):
        for a in range(-10, 11):
            for b in range(-10, 11):
                out.append(mod.twisted_chi12_grid(c, 2, 2, 3, a, b, 0, -5, 5, -5, 5))
    return out


def ring_products(mod, pairs):
    return [mod.ring_mul(x, y, c) for x, y, c in pairs]


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(0)
    pairs = [(tuple(rng.randint(-50, 50) for _ in range(6)),
              tuple(rng.randint(-50, 50) for _ in range(6)), rng.randint(0, 4))
             for _ in range(100000)]

    results = {}
    for name in kernels.available_backends():
        mod = kernels.backend_module(name)
        t_grid, grid = best_of(lambda: rr_grid(mod), args.repeat)
        t_mul, prods = best_of(lambda: ring_products(mod, pairs), args.repeat)
        results[name] = (grid, prods)
        print(f"{name:>8}: rr grid (266805 points) {t_grid * 1e3:8.1f} ms, "
              f"100k ring_mul {t_mul * 1e3:8.1f} ms")
    values = list(results.values())
    if len(values) > 1:
        same = all(v == values[0] for v in values[1:])
        print("backends agree" if same else "BACKENDS DISAGREE")
        return 0 if same else 1
    print("only one backend available")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
