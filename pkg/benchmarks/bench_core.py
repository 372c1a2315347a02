"""Timing comparison of the compiled kernel against its pure-Python twin.

Usage: python3 benchmarks/bench_core.py [--quick]

Times three workloads on both backends and prints a small table:
canonical forms of random graphs, girth plus fixed-length cycle queries on
the shipped cages, and a couple of full generation rows.  Outputs are
cross-checked while timing, so a mismatch aborts the run.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cagekit._core import HAVE_FAST, pure

if HAVE_FAST:
    from cagekit._core import _fast
else:
    _fast = None

from cagekit import graph6
from cagekit.fixtures import data_path
from cagekit.generator import build_moore_tree


class ListStore:
    def __init__(self):
        self.seen = set()

    def insert_if_new(self, form):
        if form in self.seen:
            return False
        self.seen.add(form)
        return True


def random_adj(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def bench_canonical(reps):
    rng = random.Random(7)
    inputs = [(n, random_adj(rng, n, p))
              for n, p in [(12, 0.3), (20, 0.2), (32, 0.15), (48, 0.1)]
              for _ in range(reps)]
    out = {}
    for name, kern in BACKENDS:
        t0 = time.perf_counter()
        forms = [kern.canonical_form(n, adj) for n, adj in inputs]
        out[name] = (time.perf_counter() - t0, forms)
    return "canonical_form x%d" % len(inputs), out


def bench_cycles(reps):
    cages = []
    # the 76-vertex record holder is out: the compiled kernel caps at 64
    for fname in ("gp_9_2.g6", "cubic_g7_36.g6", "lg_petersen.g6"):
        g = graph6.decode(data_path(fname).read_text().strip())
        cages.append((g.order, list(g.adjacency_masks)))
    out = {}
    for name, kern in BACKENDS:
        t0 = time.perf_counter()
        answers = []
        for _ in range(reps):
            for n, adj in cages:
                answers.append(kern.girth_of(n, adj))
                for L in range(3, 11):
                    answers.append(kern.has_cycle_len(n, adj, L))
        out[name] = (time.perf_counter() - t0, answers)
    return "girth + cycle queries x%d" % reps, out


def bench_generate(rows):
    out = {}
    for name, kern in BACKENDS:
        t0 = time.perf_counter()
        forms = []
        for n, k, g in rows:
            mt = build_moore_tree(k, g, n=n)
            adj0 = list(mt.graph.adjacency_masks)
            elig0 = kern.compute_eligible_raw(n, k, g, adj0)
            found = []
            kern.generate_core(n, k, g, adj0, elig0, mt.graph.num_edges,
                               ListStore(), found.append)
            forms.append(sorted(found))
        out[name] = (time.perf_counter() - t0, forms)
    label = "generate " + " ".join("(%d,%d,%d)" % r for r in rows)
    return label, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    if not HAVE_FAST:
        print("compiled kernel not built; nothing to compare against")
        return 1

    reps = 5 if args.quick else 20
    rows = [(10, 3, 3), (12, 3, 4)] if args.quick else [(10, 3, 3), (12, 3, 4), (14, 3, 5)]

    results = [
        bench_canonical(reps),
        bench_cycles(reps * 10),
        bench_generate(rows),
    ]

    print(f"{'workload':<38} {'pure':>9} {'fast':>9} {'speedup':>8}")
    for label, out in results:
        tp, ap_ = out["pure"]
        tf, af = out["fast"]
        if ap_ != af:
            print(f"{label}: OUTPUT MISMATCH between backends", file=sys.stderr)
            return 1
        print(f"{label:<38} {tp:>8.3f}s {tf:>8.3f}s {tp / tf:>7.1f}x")
    return 0


BACKENDS = [("pure", pure), ("fast", _fast)]


if __name__ == "__main__":
    sys.exit(main())
