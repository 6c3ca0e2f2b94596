#!/usr/bin/env python3
"""Writes a synthetic stand-in for one primary-school contact snapshot.

242 vertices (10 classes of children plus 10 teachers), dense-ish contact
inside classes, sparse contact across classes, and a few absent children
with no contacts. Vertex ids are shuffled. Output: MatrixMarket pattern file.
"""
import random
import sys

def main(path, seed=2011):
    rng = random.Random(seed)
    sizes = [24, 23, 23, 23, 23, 23, 23, 24, 23, 23]
    groups, v = [], 0
    for s in sizes:
        groups.append(list(range(v, v + s)))
        v += s
    teachers = list(range(v, v + 10))
    n = v + 10
    assert n == 242
    absent = set(rng.sample(range(v), 12))
    edges = set()
    def add(a, b):
        if a != b and a not in absent and b not in absent:
            edges.add((min(a, b), max(a, b)))
    for g in groups:
        for i, a in enumerate(g):
            for b in g[i + 1:]:
                if rng.random() < 0.18:
                    add(a, b)
    for t, g in zip(teachers, groups):
        for a in g:
            if rng.random() < 0.25:
                add(t, a)
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < 0.003:
                add(a, b)
    relabel = list(range(n))
    rng.shuffle(relabel)
    lines = sorted((relabel[a] + 1, relabel[b] + 1) for a, b in edges)
    with open(path, "w") as f:
        f.write("%%MatrixMarket matrix coordinate pattern symmetric\n")
        f.write("% synthetic primary-school snapshot (see scripts/make_sch_synthetic.py)\n")
        f.write(f"{n} {n} {len(lines)}\n")
        for a, b in lines:
            f.write(f"{max(a, b)} {min(a, b)}\n")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sch_synthetic.mtx")
