#!/usr/bin/env python3
# Brute-force derivation of the frozen expected values used by the C++ tests.
# Independent of the library: plain basic-solution enumeration over all
# n-subsets of the constraints f(x)+f(y) >= d(x,y), exact Fractions.
import itertools
from fractions import Fraction as F

import sympy


def split_metric_sum(n, sides, weights):
    d = [[F(0)] * n for _ in range(n)]
    for side, w in zip(sides, weights):
        for x in range(n):
            for y in range(n):
                if (x in side) != (y in side):
                    d[x][y] += w
    return d


def tight_span_vertices(d):
    n = len(d)
    rows = [(x, y) for x in range(n) for y in range(x, n)]
    verts = set()
    for subset in itertools.combinations(rows, n):
        covered = {x for r in subset for x in r}
        if len(covered) != n:
            continue
        m = sympy.zeros(n, n)
        b = sympy.zeros(n, 1)
        for i, (x, y) in enumerate(subset):
            m[i, x] += 1
            m[i, y] += 1
            b[i] = sympy.Rational(d[x][y].numerator, d[x][y].denominator)
        if m.rank() < n:
            continue
        f = m.LUsolve(b)
        fv = [F(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in f]
        if all(fv[x] + fv[y] >= d[x][y] for x, y in rows):
            verts.add(tuple(fv))
    return sorted(verts)


def tight_set(d, f):
    n = len(d)
    return {(x, y) for x in range(n) for y in range(x, n) if f[x] + f[y] == d[x][y]}


def rank_of(rows, n):
    if not rows:
        return 0
    m = sympy.zeros(len(rows), n)
    for i, (x, y) in enumerate(rows):
        m[i, x] += 1
        m[i, y] += 1
    return m.rank()


def edges(d, verts):
    n = len(d)
    ts = [tight_set(d, v) for v in verts]
    out = []
    for i, j in itertools.combinations(range(len(verts)), 2):
        if rank_of(sorted(ts[i] & ts[j]), n) == n - 1:
            out.append((i, j))
    return out


def isolation_index(d, side):
    n = len(d)
    a = [x for x in range(n) if x in side]
    b = [x for x in range(n) if x not in side]
    best = None
    for a1, a2 in itertools.product(a, a):
        for b1, b2 in itertools.product(b, b):
            v = max(d[a1][b1] + d[a2][b2], d[a1][b2] + d[a2][b1], d[a1][a2] + d[b1][b2]) - d[a1][a2] - d[b1][b2]
            best = v if best is None else min(best, v)
    return best / 2


def report(name, d):
    vs = tight_span_vertices(d)
    es = edges(d, vs)
    print(f"{name}: vertices={len(vs)} edges={len(es)}")
    return vs, es


if __name__ == "__main__":
    # Octahedral fixture on taxa 1..6 (indices 0..5), unit weights.
    octa = [{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 2, 4}]
    d = split_metric_sum(6, octa, [F(1)] * 4)
    print("octahedral d(1,4) =", d[0][3], " d(1,2) =", d[0][1])
    vs, _ = report("octahedral", d)
    print("  constant-2 point present:", tuple([F(2)] * 6) in vs)
    print("  isolation index of {1,2,3}|{4,5,6}:", isolation_index(d, {0, 1, 2}))
    # Non-uniform octahedral weights: both interior images and vertex count.
    d = split_metric_sum(6, octa, [F(1), F(2), F(3), F(5)])
    report("octahedral weights 1,2,3,5", d)
    # Strictly circular m=2 on 4 points, m=3 on 6 points.
    report("circular m=2", split_metric_sum(4, [{0, 1}, {1, 2}], [F(1)] * 2))
    report("circular m=3", split_metric_sum(6, [{0, 1, 2}, {1, 2, 3}, {2, 3, 4}], [F(1)] * 3))
    # K_{2,3} with unit edges: parts {0,1} and {2,3,4}.
    k23 = [[F(0)] * 5 for _ in range(5)]
    for x in range(5):
        for y in range(5):
            if x != y:
                k23[x][y] = F(1) if ((x < 2) != (y < 2)) else F(2)
    total = [[F(0)] * 5 for _ in range(5)]
    for mask in range(1, 2 ** 4):
        side = {i + 1 for i in range(4) if mask >> i & 1}
        a = isolation_index(k23, side)
        if a > 0:
            print("  K23 split", sorted(side), "index", a)
            for x in range(5):
                for y in range(5):
                    if (x in side) != (y in side):
                        total[x][y] += a
    print("K23 residual zero:", total == k23)
    # Tree metric path 0-1-2 with lengths 1,2: split {1,2}|{0}? non-split {0,2}|{1}.
    path = [[F(0), F(1), F(3)], [F(1), F(0), F(2)], [F(3), F(2), F(0)]]
    print("path isolation {1}:", isolation_index(path, {1}), " {2}:", isolation_index(path, {2}))
