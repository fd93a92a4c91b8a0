"""Left modules over an FDAlgebra and the invariants built from them.

A module is stored by the matrices of the vertex idempotents and of the
algebra's generators (arrows, or radical basis words for a truncation).
Columns are images: ``M[g][i][j]`` is the i-th coordinate of ``g . b_j``.

Conventions.  With left-to-right composition the projective ``A e_i`` is
spanned by the normal words ending at ``i``.  The Cartan matrix has
``C[i][j] = [P_i : L_j]``, the number of normal words from ``j`` to ``i``.
The Gabriel quiver matrix has ``G[i][j]`` = number of arrows ``i -> j``.
"""

from __future__ import annotations

import itertools
import os
import random
from typing import Iterable, Mapping, Sequence

from .algebra_core import FDAlgebra
from .linalg import (Span, coordinates, identity, is_zero_vec, matmul, matvec,
                     nullspace, rank, zeros)


class LeftModule:
    def __init__(self, algebra: FDAlgebra, labels: Sequence[str],
                 idempotents: Mapping[str, list], generators: Mapping[str, list]):
        self.algebra = algebra
        self.field = algebra.field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.idempotents = dict(idempotents)
        self.generators = dict(generators)

    def __repr__(self):
        return "LeftModule(dim=%d)" % self.dim

    def actions(self):
        """Idempotent and generator matrices, in a fixed order."""
        out = [self.idempotents[v] for v in self.algebra.vertices]
        out += [self.generators[g] for g, _ in self.algebra.generators]
        return out

    def radical_actions(self):
        return [self.generators[g] for g, _ in self.algebra.generators]

    def dimension_vector(self) -> dict[str, int]:
        return {v: rank(self.idempotents[v], self.dim, self.field)
                for v in self.algebra.vertices}

    def component_dims(self, vectors) -> dict[str, int]:
        """dim e_v N for the submodule N spanned by vectors."""
        out = {}
        for v in self.algebra.vertices:
            e = self.idempotents[v]
            out[v] = rank([matvec(e, x, self.field) for x in vectors], self.dim, self.field)
        return out

    def check(self) -> bool:
        """Idempotents are orthogonal projectors summing to 1; relations act as 0."""
        f = self.field
        n = self.dim
        total = zeros(f, n, n)
        for v in self.algebra.vertices:
            e = self.idempotents[v]
            if matmul(e, e, f) != e:
                return False
            for u in self.algebra.vertices:
                if u != v and not all(is_zero_vec(r) for r in matmul(e, self.idempotents[u], f)):
                    return False
            total = [[a + b for a, b in zip(r, s)] for r, s in zip(total, e)]
        if n and total != identity(f, n):
            return False
        if self.algebra.truncated:
            return True
        q = self.algebra.quiver
        for rel in self.algebra.presentation.relations:
            acc = zeros(f, n, n)
            for w, c in rel.items():
                m = identity(f, n)
                for i in w:
                    m = matmul(m, self.generators[q.arrows[i].name], f)
                acc = [[a + c * b for a, b in zip(r, s)] for r, s in zip(acc, m)]
            if not all(is_zero_vec(r) for r in acc):
                return False
        return True

    # submodules ---------------------------------------------------------
    def radical(self):
        """Basis of J M."""
        span = Span(self.dim, self.field)
        for g in self.radical_actions():
            for j in range(self.dim):
                span.add([g[i][j] for i in range(self.dim)])
        return span.basis()

    def submodule_closure(self, vectors):
        """Smallest submodule containing the vectors."""
        span = Span(self.dim, self.field)
        todo = list(vectors)
        acts = self.actions()
        while todo:
            x = todo.pop()
            if span.add(x):
                for m in acts:
                    todo.append(matvec(m, x, self.field))
        return span.basis()

    def socle(self):
        """Basis of {m : J m = 0}."""
        rows = []
        for g in self.radical_actions():
            rows.extend(g)
        if not rows:
            return identity(self.field, self.dim)
        return nullspace(rows, self.dim, self.field)

    def subquotient(self, upper, lower=()) -> "LeftModule":
        """The module U/W for submodules W inside U given by spanning vectors."""
        f = self.field
        wspan = Span(self.dim, f, lower)
        comp = []
        full = Span(self.dim, f, wspan.basis())
        for u in upper:
            if full.add(u):
                comp.append(list(u))
        basis = wspan.basis() + comp
        k = len(wspan)

        def mat(m):
            cols = []
            for u in comp:
                c = coordinates(basis, matvec(m, u, f), f)
                if c is None:
                    raise ValueError("spanning set is not a submodule")
                cols.append(c[k:])
            return [[cols[j][i] for j in range(len(comp))] for i in range(len(comp))]

        labels = ["v%d" % i for i in range(len(comp))]
        return LeftModule(self.algebra, labels,
                          {v: mat(m) for v, m in self.idempotents.items()},
                          {g: mat(m) for g, m in self.generators.items()})


def direct_sum(mods: Sequence[LeftModule]) -> LeftModule:
    A = mods[0].algebra
    f = A.field
    n = sum(m.dim for m in mods)

    def block(get):
        out = zeros(f, n, n)
        off = 0
        for m in mods:
            b = get(m)
            for i in range(m.dim):
                for j in range(m.dim):
                    out[off + i][off + j] = b[i][j]
            off += m.dim
        return out

    labels = ["%d.%s" % (k, l) for k, m in enumerate(mods) for l in m.labels]
    return LeftModule(A, labels,
                      {v: block(lambda m: m.idempotents[v]) for v in A.vertices},
                      {g: block(lambda m: m.generators[g]) for g, _ in A.generators})


def module_from_left_ideal(A: FDAlgebra, indices: Sequence[int], labels=None) -> LeftModule:
    """The left module spanned by basis words ``indices`` (a left ideal of A)."""
    pos = {k: i for i, k in enumerate(indices)}
    f = A.field

    def mat(x):
        m = zeros(f, len(indices), len(indices))
        for j, k in enumerate(indices):
            y = A.mul_vec(x, A.unit(k))
            for r, c in enumerate(y):
                if c != 0:
                    if r not in pos:
                        raise ValueError("basis words do not span a left ideal")
                    m[pos[r]][j] = c
        return m

    return LeftModule(A, labels or [A.basis_str(k) for k in indices],
                      {v: mat(A.idempotent(v)) for v in A.vertices},
                      {g: mat(x) for g, x in A.generators})


def projective(A: FDAlgebra, i: str) -> LeftModule:
    """P_i = A e_i, spanned by the normal words ending at i."""
    if i not in A.idempotent_index:
        raise KeyError("unknown vertex %r" % i)
    return module_from_left_ideal(A, [k for k in range(A.dim) if A.tgt[k] == i])


def simple(A: FDAlgebra, i: str) -> LeftModule:
    f = A.field
    return LeftModule(A, ["L_%s" % i],
                      {v: [[f.one if v == i else f.zero]] for v in A.vertices},
                      {g: [[f.zero]] for g, _ in A.generators})


def cartan(A: FDAlgebra) -> list[list[int]]:
    """C[i][j] = [P_i : L_j] = dim e_j A e_i."""
    vs = A.vertices
    return [[A.pair_dimension(j, i) for j in vs] for i in vs]


def radical_series(M: LeftModule) -> list[int]:
    """Dimensions of M, JM, J^2 M, ..., 0."""
    dims = [M.dim]
    cur = identity(M.field, M.dim) if M.dim else []
    while cur:
        span = Span(M.dim, M.field)
        for g in M.radical_actions():
            for x in cur:
                span.add(matvec(g, x, M.field))
        cur = span.basis()
        dims.append(len(cur))
        if len(dims) > M.dim + 2:
            raise RuntimeError("radical is not nilpotent on this module")
    return dims


def socle(M: LeftModule) -> dict[str, int]:
    return M.component_dims(M.socle())


def top(M: LeftModule) -> dict[str, int]:
    full = M.dimension_vector()
    rad = M.component_dims(M.radical())
    return {v: full[v] - rad[v] for v in full}


def is_simple_at(dv: Mapping[str, int], v: str) -> bool:
    return all(d == (1 if u == v else 0) for u, d in dv.items())


def weakly_symmetric(A: FDAlgebra) -> bool:
    """Every projective has simple socle isomorphic to its top."""
    for v in A.vertices:
        P = projective(A, v)
        if not (is_simple_at(top(P), v) and is_simple_at(socle(P), v)):
            return False
    return True


def radical_square(A: FDAlgebra):
    """Spanning vectors of J^2."""
    span = Span(A.dim, A.field)
    for i in A.radical:
        for j in A.radical:
            x = A.table[i][j]
            if x:
                v = A.zero()
                for k, c in x.items():
                    v[k] = c
                span.add(v)
    return span.basis()


def gabriel_quiver(A: FDAlgebra) -> list[list[int]]:
    """G[i][j] = dim of the (i -> j) component of J/J^2, i.e. arrows i -> j."""
    vs = A.vertices
    j2 = radical_square(A)
    out = []
    for s in vs:
        row = []
        for t in vs:
            idx = [k for k in A.radical if A.src[k] == s and A.tgt[k] == t]
            sub = [[x[k] for k in idx] for x in j2]
            row.append(len(idx) - (rank(sub, len(idx), A.field) if idx else 0))
        out.append(row)
    return out


def ext1_symmetric(A: FDAlgebra):
    """(symmetric?, witness pair or None) for the Gabriel quiver matrix."""
    g = gabriel_quiver(A)
    vs = A.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if g[i][j] != g[j][i]:
                return False, (vs[i], vs[j])
    return True, None


def truncate(A: FDAlgebra, S: Iterable[str]) -> FDAlgebra:
    """eAe for e the sum of the idempotents at S."""
    return A.truncate(S)


def _seed() -> int:
    try:
        return int(os.environ.get("CELLAR_SEED", "0"))
    except ValueError:
        return 0


def hom_space(M: LeftModule, N: LeftModule):
    """Basis of Hom_A(M, N) as dim N x dim M matrices."""
    f = M.field
    m, n = M.dim, N.dim
    rows = []
    for X, Y in zip(M.actions(), N.actions()):
        # (phi X - Y phi)[i][j] = sum_k phi[i][k] X[k][j] - sum_k Y[i][k] phi[k][j]
        for i in range(n):
            for j in range(m):
                row = [f.zero] * (n * m)
                for k in range(m):
                    if X[k][j] != 0:
                        row[i * m + k] = row[i * m + k] + X[k][j]
                for k in range(n):
                    if Y[i][k] != 0:
                        row[k * m + j] = row[k * m + j] - Y[i][k]
                if not is_zero_vec(row):
                    rows.append(row)
    if not rows:
        sol = identity(f, n * m)
    else:
        sol = nullspace(rows, n * m, f)
    return [[v[i * m:(i + 1) * m] for i in range(n)] for v in sol]


def module_isomorphic(M: LeftModule, N: LeftModule, seed: int | None = None) -> bool:
    """Is there an invertible A-linear map M -> N?

    Random integer combinations of a Hom basis are tried first (seeded, so the
    answer is reproducible); over a prime field the full coefficient grid is
    searched when it is small enough.
    """
    if M.dim != N.dim or M.dimension_vector() != N.dimension_vector():
        return False
    if M.dim == 0:
        return True
    f = M.field
    basis = hom_space(M, N)
    if not basis:
        return False
    n = M.dim

    def combo(coeffs):
        out = zeros(f, n, n)
        for c, B in zip(coeffs, basis):
            if c != 0:
                out = [[a + c * b for a, b in zip(r, s)] for r, s in zip(out, B)]
        return out

    rng = random.Random(_seed() if seed is None else seed)
    bound = 1000 if f.prime is None else f.prime
    for _ in range(24):
        phi = combo([f(rng.randrange(bound)) for _ in basis])
        if rank(phi, n, f) == n:
            return True
    if f.prime is not None and f.prime ** len(basis) <= 200000:
        for coeffs in itertools.product(f.elements(), repeat=len(basis)):
            if rank(combo(coeffs), n, f) == n:
                return True
        return False
    # deterministic fallback over a small integer grid
    grid = range(-2, 3)
    for count, coeffs in enumerate(itertools.product(grid, repeat=len(basis))):
        if count > 200000:
            break
        if rank(combo([f(c) for c in coeffs]), n, f) == n:
            return True
    return False
