#!/usr/bin/env python3
"""Converts locally downloaded FLT and SCH source files into per-snapshot
MatrixMarket files that `biofab --format mm` reads.

Neither dataset is bundled. Obtain them from their publishers (see README),
then run for example

    scripts/prepare_datasets.py sch primaryschool.csv data/sch
    scripts/prepare_datasets.py flt flashtap_matrices/ data/flt --threshold 0.5

sch: whitespace or tab separated contact list, one contact per line as
     `t i j [class_i class_j]` with t in seconds. Contacts are binned into
     one-hour intervals in order of appearance; every snapshot is written over
     the full set of ids seen anywhere in the file, so all snapshots share
     the same vertex count. Output: sch_01.mtx, sch_02.mtx, ...
flt: a directory holding one dense square matrix per time step (one row per
     line, numbers separated by whitespace or commas). Files are taken in
     sorted name order and numbered from 1; an edge is written where the
     absolute entry exceeds --threshold. Output: flt_01.mtx, flt_02.mtx, ...
"""
import argparse
import pathlib
import re
import sys


def write_mm(path, n, edges):
    with open(path, "w") as f:
        f.write("%%MatrixMarket matrix coordinate pattern symmetric\n")
        f.write(f"{n} {n} {len(edges)}\n")
        for a, b in sorted(edges):
            f.write(f"{b + 1} {a + 1}\n")


def sch(src, out):
    contacts, ids = [], set()
    for line in open(src):
        fields = line.split()
        if len(fields) < 3 or not fields[0].isdigit():
            continue
        t, i, j = int(fields[0]), fields[1], fields[2]
        contacts.append((t, i, j))
        ids.update((i, j))
    index = {v: k for k, v in enumerate(sorted(ids, key=lambda s: (len(s), s)))}
    bins = {}
    for t, i, j in contacts:
        a, b = sorted((index[i], index[j]))
        if a != b:
            bins.setdefault(t // 3600, set()).add((a, b))
    for k, hour in enumerate(sorted(bins), start=1):
        write_mm(out / f"sch_{k:02d}.mtx", len(index), bins[hour])
    return len(bins), len(index)


def flt(src, out, threshold):
    files = sorted(p for p in src.iterdir() if p.is_file())
    n = None
    for k, path in enumerate(files, start=1):
        rows = [[float(x) for x in re.split(r"[,\s]+", line.strip()) if x]
                for line in open(path) if line.strip()]
        if any(len(r) != len(rows) for r in rows):
            sys.exit(f"{path}: not a square matrix")
        n = len(rows)
        edges = {(a, b) for a in range(n) for b in range(a + 1, n)
                 if abs(rows[a][b]) > threshold or abs(rows[b][a]) > threshold}
        write_mm(out / f"flt_{k:02d}.mtx", n, edges)
    return len(files), n


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("dataset", choices=["sch", "flt"])
    parser.add_argument("source", type=pathlib.Path)
    parser.add_argument("out", type=pathlib.Path)
    parser.add_argument("--threshold", type=float, default=0.0)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    if args.dataset == "sch":
        count, n = sch(args.source, args.out)
    else:
        count, n = flt(args.source, args.out, args.threshold)
    print(f"wrote {count} snapshots with n={n} to {args.out}")


if __name__ == "__main__":
    main()
