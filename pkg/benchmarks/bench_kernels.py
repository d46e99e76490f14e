"""Compare the compiled and pure-Python kernels on the group-algebra workloads.

    python benchmarks/bench_kernels.py --n 5 --repeat 3
"""

import argparse
import time

from whitehouse import _kernels_py as py
from whitehouse.group_algebra import eulerian_idempotents
from whitehouse.linalg import integer_row
from whitehouse.perms import symmetric_group

try:
    from whitehouse import _ckernels as cy
except ImportError:
    cy = None


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def ideal_rows(e):
    G = symmetric_group(e.n)
    rows = []
    for x in range(len(G)):
        row = [0] * len(G)
        col = G.table[:, x]
        for k, v in enumerate(e._num):
            if v:
                row[col[k]] = v
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    G = symmetric_group(n)
    es = eulerian_idempotents(n)
    a, b = es[0], es[1]
    print(f"n={n}, |S_n|={len(G)}, compiled kernels: {'yes' if cy else 'no'}")
    print(f"{'kernel':<28}{'python':>10}{'cython':>10}{'speedup':>9}")

    def row(name, fpy, fcy):
        tp, op = best(fpy, args.repeat)
        if cy is None:
            print(f"{name:<28}{tp:>10.3f}{'-':>10}{'-':>9}")
            return
        tc, oc = best(fcy, args.repeat)
        assert op == oc, f"{name}: backends disagree"
        print(f"{name:<28}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x")

    row("convolve e1*e2", lambda: py.convolve(a._num, b._num, G.table_rows),
        lambda: cy.convolve(a._num, b._num, G.table))
    for j, e in enumerate(es, 1):
        rows = [integer_row(r) for r in ideal_rows(e)]
        row(f"rref right ideal e({j})", lambda: py.rref_int([r[:] for r in rows], len(G)),
            lambda: cy.rref_int([r[:] for r in rows], len(G)))


if __name__ == "__main__":
    main()
