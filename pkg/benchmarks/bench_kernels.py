"""Compare the pure Python and compiled counting kernels on fixed workloads.

Run from a checkout with the package installed:

    python3 benchmarks/bench_kernels.py

Each workload is counted once per backend (results must agree) and then
timed over several repetitions, keeping the best time.  Workload sizes
are chosen so the pure backend takes measurable but bounded time.
"""

import time

from homcount import canonical, kernels
from homcount.canonical import canonical_key
from homcount.counting import aut_count, hom_count, vesurj_count, vsurj_count
from homcount.graphs import (
    Graph,
    biclique,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
)

REPEAT = 3


def clear_caches():
    canonical.canonical_form.cache_clear()


def workload_hom():
    return hom_count(cycle_graph(9), complete_graph(4))


def workload_vsurj():
    return vsurj_count(cycle_graph(9), complete_graph(4))


def workload_vesurj():
    return vesurj_count(path_graph(10), biclique(3, 1))


def workload_aut():
    return aut_count(disjoint_union(cycle_graph(5), cycle_graph(5)))


def workload_canonical():
    g = Graph(
        8,
        loops=frozenset({1, 4}),
        edges=frozenset(
            {(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)}
        ),
    )
    return canonical_key(g).hex()


WORKLOADS = [
    ("hom C9 -> K4", workload_hom),
    ("vsurj C9 -> K4", workload_vsurj),
    ("vesurj P10 -> star(3)", workload_vesurj),
    ("aut C5 + C5", workload_aut),
    ("canonical key, 8 vertices", workload_canonical),
]


def timed(fn):
    best = None
    for _ in range(REPEAT):
        clear_caches()
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "fast" not in backends:
        print("compiled kernel not built; timing pure backend only")
    header = f"{'workload':<28} " + " ".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn in WORKLOADS:
        times = {}
        results = {}
        for backend in backends:
            with kernels.use_backend(backend):
                clear_caches()
                results[backend] = fn()
                times[backend] = timed(fn)
        if len({str(v) for v in results.values()}) != 1:
            raise SystemExit(f"backend results disagree on {name}: {results}")
        row = f"{name:<28} " + " ".join(f"{times[b] * 1000:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f" {times['pure'] / times['fast']:>8.1f}x"
        print(row)
    print("\nresults agreed across backends for every workload")


if __name__ == "__main__":
    main()
