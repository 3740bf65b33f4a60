"""Compare the compiled search kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is built from a real representation, run through both
backends, checked for identical output, and timed (best of N).
"""
import argparse
import random
import time

from quiverstab import kernels, presets
from quiverstab.census import _blocks, _flatten
from quiverstab.linalg import FieldSpec
from quiverstab.quiver import direct_sum, hom_space
from quiverstab.sampling import random_representation
from quiverstab.structure import semisimple_of_class
from quiverstab.subreps import kernel_inputs


def closure_workloads():
    rng = random.Random(0)
    out = []
    for name, dims, p in [("kronecker", (4, 4), 2), ("sl2block", (3, 3), 3), ("a2", (5, 5), 2)]:
        alg = presets.algebra(name)
        while True:
            v = random_representation(alg, FieldSpec(p), rng, max_total=sum(dims), min_total=sum(dims))
            if v.dims == dims:
                break
        _, members, arrows = kernel_inputs(v)
        out.append((f"closed_tuples {name} {dims} F{p}", (members, arrows)))
    return out


def rank_workloads():
    out = []
    for name, alpha, p in [("a2", (3, 0), 2), ("kronecker", (2, 2), 3), ("sl2block", (2, 1), 5)]:
        v = semisimple_of_class(presets.algebra(name), alpha, FieldSpec(p))
        basis, _ = hom_space(v, v)
        out.append((f"full_rank_search count Aut {name} {alpha} F{p}", (p, _flatten(basis), _blocks(v.dims, v.dims), True)))
    obj = presets.objects("sl2block", FieldSpec(3))
    v = direct_sum(obj["P2"], obj["M0"])
    basis, _ = hom_space(v, v)
    out.append(("full_rank_search count Aut P2+M0 F3", (3, _flatten(basis), _blocks(v.dims, v.dims), True)))
    return out


def best_of(fn, args, repeat):
    times, result = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled extension not built; only the Python backend is available")
    rows = []
    for label, inputs in closure_workloads():
        rows.append((label, {k: best_of(m.closed_tuples, inputs, args.repeat) for k, m in impls.items()}))
    for label, inputs in rank_workloads():
        rows.append((label, {k: best_of(m.full_rank_search, inputs, args.repeat) for k, m in impls.items()}))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'python s':>10}  {'cython s':>10}  {'speedup':>8}  agree")
    for label, res in rows:
        py = res["python"][0]
        cy = res.get("cython", (float("nan"), None))[0]
        agree = len({repr(r[1]) for r in res.values()}) == 1
        print(f"{label.ljust(width)}  {py:10.4f}  {cy:10.4f}  {py / cy:8.1f}x  {agree}")


if __name__ == "__main__":
    main()
