"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Sizes match what a training run calls: one environment step, farthest-point
sampling of 20 and 60 landmarks from a 2000-point pool, and a shortest path
over 22- and 62-node dense graphs.
"""

import argparse
import timeit

import numpy as np

from lesp import envs, kernels


def cases(be):
    spec = envs.make("four_rooms")
    rng = np.random.default_rng(0)
    pool = rng.normal(size=(2000, 2))
    graphs = {}
    for n in (22, 62):
        w = np.where(rng.random((n, n)) < 0.3, rng.uniform(0, 30, (n, n)), np.inf)
        np.fill_diagonal(w, np.inf)
        graphs[n] = w
    state = (2.5, 2.5, 0.3, -0.2)
    return {
        "maze_step": (lambda: be.maze_step(*state, 0.7, -0.4, spec.walls, spec.width, spec.height,
                                           spec.accel, spec.friction, spec.v_max), 20000),
        "fps 2000x2 k=20": (lambda: be.fps_indices(pool, 20, 0), 50),
        "fps 2000x2 k=60": (lambda: be.fps_indices(pool, 60, 0), 20),
        "dijkstra n=22": (lambda: be.dijkstra(graphs[22], 21, 20), 2000),
        "dijkstra n=62": (lambda: be.dijkstra(graphs[62], 61, 60), 500),
    }


def best_per_call(fn, number, repeat):
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if kernels.compiled_backend is None:
        print("compiled kernels not built; only the Python fallback is available")
    py = cases(kernels.python_backend)
    cc = cases(kernels.compiled_backend) if kernels.compiled_backend else {}
    print(f"{'kernel':18s} {'python us':>11s} {'compiled us':>12s} {'speedup':>8s}")
    for name, (fn, number) in py.items():
        t_py = best_per_call(fn, number, args.repeat) * 1e6
        if name in cc:
            t_cc = best_per_call(cc[name][0], number, args.repeat) * 1e6
            print(f"{name:18s} {t_py:11.2f} {t_cc:12.2f} {t_py / t_cc:7.1f}x")
        else:
            print(f"{name:18s} {t_py:11.2f} {'-':>12s} {'-':>8s}")


if __name__ == "__main__":
    main()
