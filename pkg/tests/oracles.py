"""Independent brute-force oracles.

Nothing here calls the rewriting engine, the module code or the
factorization search; the oracles only share the presentation parser.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction

from cellar.algebra_core import parse_presentation
from cellar.scalars import scalar_str


# -- decomposition matrices ----------------------------------------------------

def _rows(n: int, trace: int):
    rows = [v for v in itertools.product(range(3), repeat=n)
            if any(v) and sum(x * x for x in v) <= trace]
    return sorted(rows, reverse=True)


def all_decompositions(n: int, trace: int = 8):
    """Every multiset of nonzero natural rows of length n with no zero column and
    sum of squares at most ``trace``, as (Cartan, D) pairs with D in canonical order."""
    R = _rows(n, trace)
    sq = [sum(x * x for x in r) for r in R]
    out = []
    cover = [0] * n
    gram = [0] * (n * n)
    cur = []

    def rec(start, used):
        if cur and all(cover):
            C = tuple(tuple(gram[i * n + j] for j in range(n)) for i in range(n))
            out.append((C, tuple(cur)))
        for k in range(start, len(R)):
            if used + sq[k] > trace:
                continue
            r = R[k]
            for i in range(n):
                cover[i] += r[i]
                if r[i]:
                    for j in range(n):
                        gram[i * n + j] += r[i] * r[j]
            cur.append(r)
            rec(k, used + sq[k])
            cur.pop()
            for i in range(n):
                cover[i] -= r[i]
                if r[i]:
                    for j in range(n):
                        gram[i * n + j] -= r[i] * r[j]

    rec(0, 0)
    return out


def factorization_table(n: int, trace: int = 8) -> dict:
    """Cartan -> set of admissible D (every column holds an entry 1)."""
    table: dict = defaultdict(set)
    for C, D in all_decompositions(n, trace):
        bucket = table[C]
        if all(any(row[j] == 1 for row in D) for j in range(n)):
            bucket.add(D)
    return table


# -- quotient dimensions by path enumeration ---------------------------------------

class _Elim:
    """Incremental row echelon form over Q or F_p on sparse dict vectors."""

    def __init__(self, p: int | None):
        self.p = p
        self.pivots: dict = {}

    def _norm(self, x):
        return x % self.p if self.p else x

    def _inv(self, x):
        return pow(x, -1, self.p) if self.p else 1 / x

    def add(self, vec: dict) -> bool:
        v = {k: self._norm(c) for k, c in vec.items()}
        v = {k: c for k, c in v.items() if c}
        while v:
            k = min(v)
            if k not in self.pivots:
                inv = self._inv(v[k])
                self.pivots[k] = {j: self._norm(c * inv) for j, c in v.items()}
                return True
            piv, c = self.pivots[k], v[k]
            for j, d in piv.items():
                v[j] = self._norm(v.get(j, 0) - c * d)
                if not v[j]:
                    del v[j]
        return False

    def __len__(self):
        return len(self.pivots)


def _scalar(x, p):
    s = scalar_str(x)
    return int(s) % p if p else Fraction(s)


def quotient_cartan(source, length: int):
    """Cartan matrix of KQ/(I + J^length) (same convention as the package:
    entry [i][j] counts the basis from vertex j to vertex i)."""
    P = parse_presentation(source)
    q = P.quiver
    p = P.field.prime
    arrows = [(a.name, a.source, a.target) for a in q.arrows]
    by_src = defaultdict(list)
    for k, (_, s, _) in enumerate(arrows):
        by_src[s].append(k)
    paths = [(k,) for k in range(len(arrows))]
    frontier = list(paths)
    for _ in range(length - 2):
        nxt = []
        for w in frontier:
            for k in by_src[arrows[w[-1]][2]]:
                nxt.append(w + (k,))
        paths += nxt
        frontier = nxt
    keep = set(paths)

    def trunc(x):
        return {w: c for w, c in x.items() if w in keep}

    rels = []
    for r in P.relations:
        rels.append(trunc({tuple(w): _scalar(c, p) for w, c in r.items()}))
    ends = {w: (arrows[w[0]][1], arrows[w[-1]][2]) for w in paths}
    E = _Elim(p)
    todo = [r for r in rels if r]
    while todo:
        x = todo.pop()
        if not E.add(x):
            continue
        for k, (_, s, t) in enumerate(arrows):
            left = trunc({(k,) + w: c for w, c in x.items() if arrows[w[0]][1] == t})
            right = trunc({w + (k,): c for w, c in x.items() if arrows[w[-1]][2] == s})
            for y in (left, right):
                if y:
                    todo.append(y)
    vs = list(q.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    C = [[int(i == j) for j in range(len(vs))] for i in range(len(vs))]
    for w in paths:
        s, t = ends[w]
        C[idx[t]][idx[s]] += 1
    # pivots are words, one per dependent direction; each relation vector is
    # endpoint-homogeneous so its pivot word carries its endpoints
    for w in E.pivots:
        s, t = ends[w]
        C[idx[t]][idx[s]] -= 1
    return C


def stable_cartan(source, start: int = 2, limit: int = 16):
    """quotient_cartan at the first length where one more step changes nothing."""
    prev = quotient_cartan(source, start)
    for L in range(start + 1, limit + 1):
        cur = quotient_cartan(source, L)
        if cur == prev:
            return cur
        prev = cur
    raise AssertionError("quotient did not stabilise")
