"""Exact dense linear algebra over a ``Field``.

Vectors are lists and matrices are lists of rows.  Nothing here knows which
field it runs over beyond the zero and one it is handed.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Field


def zeros(field: Field, rows: int, cols: int):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(field: Field, n: int):
    m = zeros(field, n, n)
    for i in range(n):
        m[i][i] = field.one
    return m


def matmul(a, b, field: Field):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(field, len(a), cols)
    for i, row in enumerate(a):
        acc = out[i]
        for k in range(inner):
            x = row[k]
            if x == 0:
                continue
            bk = b[k]
            for j in range(cols):
                y = bk[j]
                if y != 0:
                    acc[j] = acc[j] + x * y
    return out


def matvec(a, v, field: Field):
    out = []
    for row in a:
        s = field.zero
        for x, y in zip(row, v):
            if x != 0 and y != 0:
                s = s + x * y
        out.append(s)
    return out


def transpose(a, ncols: int | None = None):
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero_vec(v) -> bool:
    return all(x == 0 for x in v)


def rref(rows, ncols: int, field: Field):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols: int, field: Field) -> int:
    return len(rref(rows, ncols, field)[1])


def nullspace(a, ncols: int, field: Field):
    """Basis of {x : a x = 0}."""
    red, pivots = rref(a, ncols, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(a, field: Field):
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(field, n))]
    red, pivots = rref(aug, 2 * n, field)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def int_det(a) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1
    return int(det)


class Span:
    """Incrementally maintained row space with exact membership tests."""

    def __init__(self, ncols: int, field: Field, vectors=()):
        self.ncols = ncols
        self.field = field
        self.rows: list[list] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return is_zero_vec(self.reduce(v))

    def add(self, v) -> bool:
        """Add v; return True when it enlarged the span."""
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x != 0), None)
        if p is None:
            return False
        inv = self.field.one / w[p]
        w = [x * inv for x in w]
        for i, row in enumerate(self.rows):
            if row[p] != 0:
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(p)
        return True

    def basis(self):
        return [list(r) for r in self.rows]


def coordinates(basis_rows, v, field: Field):
    """Coefficients c with sum c_i basis_rows[i] = v, or None."""
    n = len(basis_rows)
    if n == 0:
        return [] if is_zero_vec(v) else None
    aug = [list(col) + [x] for col, x in zip(transpose(basis_rows), v)]
    red, pivots = rref(aug, n + 1, field)
    if n in pivots:
        return None
    c = [field.zero] * n
    for row, p in zip(red, pivots):
        c[p] = row[n]
    return c
