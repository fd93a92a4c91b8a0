"""Cell data and their verification.

A cell datum lists, for each lambda of a finite poset, a square matrix of
algebra elements c^lambda_{s,t}.  The left action of a generator ``a`` on
c_{s,t} is expanded in the cellular basis; (C3) asks that modulo cells
strictly above lambda the result is a combination of c_{u,t} whose
coefficients do not depend on t.  The span of the cells above lambda is
handled as exact coordinates in the cellular basis, which is a basis once
(C1) holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra_core import (FDAlgebra, Involution, PresentationError,
                           check_anti_automorphism, parse_element)
from .linalg import Span, inverse, int_det, matvec, rank, transpose
from .module_theory import (LeftModule, cartan, direct_sum, module_isomorphic,
                            module_from_left_ideal, top)


class DatumError(ValueError):
    pass


def transitive_closure(elements, pairs) -> set:
    less = {(a, b) for a, b in pairs}
    changed = True
    while changed:
        changed = False
        for a, b in list(less):
            for c, d in list(less):
                if b == c and (a, d) not in less:
                    less.add((a, d))
                    changed = True
    return less


class CellDatum:
    def __init__(self, algebra: FDAlgebra, elements: Sequence[str], strict_pairs,
                 tableaux: Mapping[str, int], basis: Mapping[str, list],
                 vertex_map: Mapping[str, str], arrow_map: Mapping[str, dict]):
        self.algebra = algebra
        self.elements = [str(x) for x in elements]
        if len(set(self.elements)) != len(self.elements):
            raise DatumError("duplicate poset element")
        for a, b in strict_pairs:
            if a not in self.elements or b not in self.elements:
                raise DatumError("order pair (%s, %s) names an unknown element" % (a, b))
        self.less = transitive_closure(self.elements, strict_pairs)
        if any(a == b for a, b in self.less):
            raise DatumError("order relation is cyclic")
        self.tableaux = {str(k): int(v) for k, v in tableaux.items()}
        if set(self.tableaux) != set(self.elements) or set(basis) != set(self.elements):
            raise DatumError("tableaux and basis must be given for every poset element")
        total = sum(n * n for n in self.tableaux.values())
        if total != algebra.dim:
            raise DatumError("sum of |T(lambda)|^2 is %d but dim A is %d" % (total, algebra.dim))
        self.basis = {}
        for lam in self.elements:
            n = self.tableaux[lam]
            mat = basis[lam]
            if len(mat) != n or any(len(r) != n for r in mat):
                raise DatumError("basis block of %s must be %dx%d" % (lam, n, n))
            self.basis[lam] = [[dict(x) for x in row] for row in mat]
        self.vertex_map = dict(vertex_map)
        self.arrow_map = dict(arrow_map)
        # flattened cellular basis
        self.cells: list[tuple[str, int, int]] = []
        self.vectors = []
        for lam in self.elements:
            for s in range(self.tableaux[lam]):
                for t in range(self.tableaux[lam]):
                    self.cells.append((lam, s, t))
                    self.vectors.append(algebra.vector(self.basis[lam][s][t]))
        self.cell_index = {c: i for i, c in enumerate(self.cells)}
        self._inv = None

    def less_than(self, a: str, b: str) -> bool:
        return (a, b) in self.less

    def above(self, lam: str) -> set:
        return {b for a, b in self.less if a == lam}

    def minimal(self) -> list[str]:
        return [x for x in self.elements if not any(b == x for _, b in self.less)]

    def maximal(self) -> list[str]:
        return [x for x in self.elements if not any(a == x for a, _ in self.less)]

    def coords(self, vec):
        """Coordinates of an algebra vector in the cellular basis (needs C1)."""
        if self._inv is None:
            if not verify_C1(self):
                raise DatumError("cellular basis is not a basis (C1 fails)")
            self._inv = inverse(transpose(self.vectors), self.algebra.field)
        return matvec(self._inv, vec, self.algebra.field)


def load_cell_datum(text, A: FDAlgebra) -> CellDatum:
    """Read a cell datum file (JSON text or dict) against the algebra A."""
    src = json.loads(text) if isinstance(text, (str, bytes)) else text
    try:
        poset = src["poset"]
        elements = poset["elements"]
        pairs = [tuple(map(str, p)) for p in poset.get("strict_pairs", [])]
        tableaux = src["tableaux"]
        basis = {}
        for lam, mat in src["basis"].items():
            basis[str(lam)] = [[parse_element(x, A) for x in row] for row in mat]
        inv = src["involution"]
        vmap = {str(k): str(v) for k, v in inv["vertex_map"].items()}
        amap = {str(k): parse_element(v, A) for k, v in inv["arrow_map"].items()}
    except (KeyError, TypeError) as exc:
        raise DatumError("malformed cell datum: %s" % exc) from exc
    except PresentationError as exc:
        raise DatumError(str(exc)) from exc
    return CellDatum(A, elements, pairs, tableaux, basis, vmap, amap)


def verify_C1(d: CellDatum) -> bool:
    A = d.algebra
    return len(d.vectors) == A.dim and rank(d.vectors, A.dim, A.field) == A.dim


def verify_C2(d: CellDatum) -> bool:
    """iota is an anti-automorphism and iota(c_st) = c_ts exactly."""
    try:
        res = check_anti_automorphism(d.algebra, d.vertex_map, d.arrow_map)
    except PresentationError:
        return False
    if not res.ok:
        return False
    inv = Involution(d.algebra, d.vertex_map, d.arrow_map)
    for lam in d.elements:
        n = d.tableaux[lam]
        for s in range(n):
            for t in range(n):
                img = inv.apply_vec(d.vectors[d.cell_index[(lam, s, t)]])
                if img != d.vectors[d.cell_index[(lam, t, s)]]:
                    return False
    return True


@dataclass
class C3Result:
    ok: bool
    counterexample: dict | None = None

    def __bool__(self):
        return self.ok


def _generators(A: FDAlgebra):
    gens = [("e_%s" % v, A.idempotent(v)) for v in A.vertices]
    return gens + list(A.generators)


def verify_C3(d: CellDatum) -> C3Result:
    """Check the (C3) expansion for every generator, cell and pair (s, t)."""
    if not verify_C1(d):
        return C3Result(False, {"reason": "C1 fails"})
    A = d.algebra
    for gname, g in _generators(A):
        for lam in d.elements:
            n = d.tableaux[lam]
            higher = d.above(lam)
            for s in range(n):
                ref = None
                for t in range(n):
                    y = d.coords(A.mul_vec(g, d.vectors[d.cell_index[(lam, s, t)]]))
                    r = []
                    for k, c in enumerate(y):
                        mu, u, v = d.cells[k]
                        if c == 0 or mu in higher:
                            continue
                        if mu != lam or v != t:
                            return C3Result(False, {
                                "a": gname, "lambda": lam, "s": s, "t": t, "t_prime": None,
                                "reason": "support on c^%s_{%d,%d}, not above %s" % (mu, u, v, lam)})
                    for u in range(n):
                        r.append(y[d.cell_index[(lam, u, t)]])
                    if ref is None:
                        ref = (t, r)
                    elif r != ref[1]:
                        return C3Result(False, {
                            "a": gname, "lambda": lam, "s": s, "t": ref[0], "t_prime": t,
                            "reason": "coefficients depend on t"})
    return C3Result(True)


def cell_module(d: CellDatum, lam: str) -> LeftModule:
    """Delta(lambda) with basis c_s, read off from the expansions at t = 0."""
    A = d.algebra
    f = A.field
    n = d.tableaux[lam]

    def mat(g):
        m = [[f.zero] * n for _ in range(n)]
        for s in range(n):
            y = d.coords(A.mul_vec(g, d.vectors[d.cell_index[(lam, s, 0)]]))
            for u in range(n):
                m[u][s] = y[d.cell_index[(lam, u, 0)]]
        return m

    return LeftModule(A, ["c_%d" % s for s in range(n)],
                      {v: mat(A.idempotent(v)) for v in A.vertices},
                      {name: mat(g) for name, g in A.generators})


def gram_form(d: CellDatum, lam: str):
    """(Gram matrix, rank) of the bilinear form on Delta(lambda)."""
    A = d.algebra
    n = d.tableaux[lam]
    G = []
    for s in range(n):
        row = []
        for t in range(n):
            prod = A.mul_vec(d.vectors[d.cell_index[(lam, 0, s)]],
                             d.vectors[d.cell_index[(lam, t, 0)]])
            row.append(d.coords(prod)[d.cell_index[(lam, 0, 0)]])
        G.append(row)
    return G, rank(G, n, A.field)


def lambda_plus(d: CellDatum) -> list[str]:
    return [lam for lam in d.elements if gram_form(d, lam)[1] > 0]


@dataclass
class Decomposition:
    rows: list[str]
    columns: list[str]
    column_vertex: dict[str, str]
    matrix: list[list[int]]

    def gram(self) -> list[list[int]]:
        k = len(self.columns)
        return [[sum(r[i] * r[j] for r in self.matrix) for j in range(k)] for i in range(k)]


def match_lambda_plus(d: CellDatum, plus: Sequence[str] | None = None) -> dict[str, str]:
    """Assign each lambda in Lambda+ the vertex of Top(Delta(lambda))."""
    plus = lambda_plus(d) if plus is None else plus
    out = {}
    for lam in plus:
        tv = top(cell_module(d, lam))
        support = [v for v, k in tv.items() if k]
        if len(support) != 1 or tv[support[0]] != 1:
            raise DatumError("Top(Delta(%s)) is not simple: %s" % (lam, tv))
        if support[0] in out.values():
            raise DatumError("two elements of Lambda+ share the simple at %s" % support[0])
        out[lam] = support[0]
    return out


def decomposition_matrix(d: CellDatum) -> Decomposition:
    plus = lambda_plus(d)
    match = match_lambda_plus(d, plus)
    mat = []
    for lam in d.elements:
        dv = cell_module(d, lam).dimension_vector()
        mat.append([dv[match[mu]] for mu in plus])
    return Decomposition(list(d.elements), plus, match, mat)


def cartan_identity(d: CellDatum, D: Decomposition | None = None) -> bool:
    """C = D^T D, with columns of D matched to vertices."""
    D = D or decomposition_matrix(d)
    A = d.algebra
    if sorted(D.column_vertex.values()) != sorted(A.vertices):
        return False
    C = cartan(A)
    pos = {v: i for i, v in enumerate(A.vertices)}
    idx = [pos[D.column_vertex[mu]] for mu in D.columns]
    want = [[C[i][j] for j in idx] for i in idx]
    return D.gram() == want


@dataclass
class ChainReport:
    ok: bool
    dims: list[int]
    failures: list[str] = field(default_factory=list)


def _is_linear_extension(d: CellDatum, order: Sequence[str]) -> bool:
    if sorted(order) != sorted(d.elements):
        return False
    pos = {x: i for i, x in enumerate(order)}
    return all(pos[a] < pos[b] for a, b in d.less)


def cell_chain(d: CellDatum, extension: Sequence[str] | None = None) -> ChainReport:
    """Verify the ideal chain A(mu_1) > A(mu_2) > ... > 0 and its sections.

    ``extension`` lists the poset elements from smallest to largest; A(mu_i)
    is the span of the cells mu_i, ..., mu_k.
    """
    A = d.algebra
    f = A.field
    order = list(extension) if extension is not None else _default_extension(d)
    if not _is_linear_extension(d, order):
        raise DatumError("not a linear extension of the cell order")
    failures = []
    spans = []
    for i in range(len(order)):
        vecs = [d.vectors[k] for k, c in enumerate(d.cells) if c[0] in set(order[i:])]
        spans.append(Span(A.dim, f, vecs))
    gens = _generators(A)
    for i, sp in enumerate(spans):
        for x in sp.basis():
            for name, g in gens:
                if not sp.contains(A.mul_vec(g, x)) or not sp.contains(A.mul_vec(x, g)):
                    failures.append("A(%s) not closed under %s" % (order[i], name))
                    break
            else:
                continue
            break
    D = decomposition_matrix(d)
    deltas = {mu: cell_module(d, mu) for mu in order}
    for ci, lam in enumerate(D.columns):
        v = D.column_vertex[lam]
        cols = [k for k in range(A.dim) if A.tgt[k] == v]
        P = module_from_left_ideal(A, cols)
        ev = A.idempotent(v)

        def piece(sp):
            out = []
            for x in sp.basis():
                y = A.mul_vec(x, ev)
                out.append([y[k] for k in cols])
            return out

        pieces = [piece(sp) for sp in spans] + [[]]
        for i, mu in enumerate(order):
            mult = D.matrix[D.rows.index(mu)][ci]
            upper, lower = pieces[i], pieces[i + 1]
            q = P.subquotient(upper, lower)
            if q.dim != d.tableaux[mu] * mult:
                failures.append("dim P(%s)_%s/P(%s)_next is %d, expected %d" % (
                    lam, mu, lam, q.dim, d.tableaux[mu] * mult))
                continue
            if mult and not module_isomorphic(q, direct_sum([deltas[mu]] * mult)):
                failures.append("section %s of P(%s) is not Delta(%s)^%d" % (mu, lam, mu, mult))
    return ChainReport(not failures, [len(sp) for sp in spans], failures)


def _default_extension(d: CellDatum) -> list[str]:
    order, left = [], list(d.elements)
    while left:
        x = next(x for x in left if not any((y, x) in d.less for y in left))
        order.append(x)
        left.remove(x)
    return order


def verify_datum(d: CellDatum, chain: bool = True) -> dict:
    """Run every check and collect the results in a JSON-ready dict."""
    out: dict = {"C1": verify_C1(d)}
    out["C2"] = verify_C2(d) if out["C1"] else False
    c3 = verify_C3(d)
    out["C3"] = c3.ok
    if c3.counterexample:
        out["C3_counterexample"] = c3.counterexample
    out["verified"] = out["C1"] and out["C2"] and out["C3"]
    if not out["verified"]:
        return out
    D = decomposition_matrix(d)
    out["lambda_plus"] = D.columns
    out["lambda_plus_vertices"] = D.column_vertex
    out["decomposition_matrix"] = D.matrix
    out["cartan_identity"] = cartan_identity(d, D)
    out["det_DtD"] = int_det(D.gram())
    if chain:
        rep = cell_chain(d)
        out["chain_dims"] = rep.dims
        out["chain_ok"] = rep.ok
        if rep.failures:
            out["chain_failures"] = rep.failures
    return out
