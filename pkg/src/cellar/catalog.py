"""Presentations of the classified algebras, a Brauer graph builder and bundled cell data.

Arrow names are ASCII transliterations.  Indexed families use ``a``, ``b``,
``g``, ``d`` for alpha, beta, gamma, delta with the index appended, ``m``
standing for a minus sign (``bm1`` is beta_{-1}, ``am2`` is alpha_{-2}).
Letter-indexed arrows keep the letter (``da`` is delta_a, ``gb`` is
gamma_b).  The single-letter quivers of the polynomial-growth list use full
names (``alpha``, ``eps`` for epsilon, ...).

Relations are written in a small text form and expanded into the JSON term
syntax of presentations::

    "a1*b2 - g1*d0*dm1*g0"      (products with *, terms joined by + and -)
    "(am1*b0)^2 - bm1"          (powers of bracketed paths or single arrows)
    "b*g*a - lam b*s*b"         (a coefficient is separated by a space)
    "e:1"                       (the vertex idempotent e_1, used in cell data)

Each entry transcribes the published generator list, redundant generators
included; eliminating them is the rewriting engine's job.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .algebra_core import PresentationError, parse_presentation

NOT_CELLULAR = "NOT-CELLULAR"
UNDECIDED = "UNDECIDED"
CELLULAR_VERIFIED = "CELLULAR-VERIFIED"


class CatalogError(ValueError):
    pass


# -- relation text -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(e:[A-Za-z0-9_\-]+|[A-Za-z][A-Za-z0-9_]*|\d+|[()*^])")


def _path(text: str) -> list | dict:
    toks = _TOKEN.findall(text)
    if "".join(toks) != re.sub(r"\s+", "", text):
        raise CatalogError("cannot read path %r" % text)
    if len(toks) == 1 and toks[0].startswith("e:"):
        return {"vertex": toks[0][2:]}
    pos = 0

    def factor():
        nonlocal pos
        t = toks[pos]
        if t == "(":
            pos += 1
            body = seq()
            if toks[pos] != ")":
                raise CatalogError("unbalanced bracket in %r" % text)
            pos += 1
        elif re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", t):
            body = [t]
            pos += 1
        else:
            raise CatalogError("unexpected %r in %r" % (t, text))
        if pos < len(toks) and toks[pos] == "^":
            body = body * int(toks[pos + 1])
            pos += 2
        return body

    def seq():
        nonlocal pos
        out = factor()
        while pos < len(toks) and toks[pos] == "*":
            pos += 1
            out = out + factor()
        return out

    out = seq()
    if pos != len(toks):
        raise CatalogError("trailing input in %r" % text)
    return out


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms, depth, cur, sign = [], 0, "", 1
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and (i + 1 < len(text) and text[i + 1] == " ") \
                and (i == 0 or text[i - 1] == " "):
            if cur.strip():
                terms.append((sign, cur.strip()))
            sign, cur = (1 if ch == "+" else -1), ""
            continue
        cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def elem(text: str) -> list[dict]:
    """Expand relation text into presentation terms."""
    out = []
    for sign, body in _split_terms(text):
        parts = body.split(" ", 1)
        coeff, path = (parts[0], parts[1]) if len(parts) == 2 else ("1", parts[0])
        if sign < 0:
            coeff = "-1" if coeff == "1" else "-(%s)" % coeff
        term: dict = {"path": _path(path)}
        if coeff != "1":
            term["coeff"] = coeff
        out.append(term)
    return out


def _pres(vertices, arrows, relations, name: str, params=None, prime=None) -> dict:
    src = {
        "name": name,
        "field": "rational" if prime is None else {"prime": prime},
        "vertices": [str(v) for v in vertices],
        "arrows": [{"name": n, "from": str(s), "to": str(t)} for n, s, t in arrows],
        "relations": [elem(r) for r in relations],
    }
    if params:
        src["params"] = params
    return src


def _datum(cells, arrow_map: Mapping[str, str], vertices, vertex_map=None) -> dict:
    """Cell datum over a chain l1 < l2 < ...; ``cells`` lists the matrices."""
    names = ["l%d" % (k + 1) for k in range(len(cells))]
    vmap = {str(v): str(v) for v in vertices}
    if vertex_map:
        vmap.update({str(k): str(v) for k, v in vertex_map.items()})
    return {
        "poset": {"elements": names,
                  "strict_pairs": [[names[k], names[k + 1]] for k in range(len(names) - 1)]},
        "tableaux": {n: len(c) for n, c in zip(names, cells)},
        "basis": {n: [[elem(x) for x in row] for row in c] for n, c in zip(names, cells)},
        "involution": {"vertex_map": vmap,
                       "arrow_map": {a: elem(img) for a, img in arrow_map.items()}},
    }


def _swap(*pairs, fixed=()) -> dict:
    out = {}
    for x, y in pairs:
        out[x], out[y] = y, x
    for x in fixed:
        out[x] = x
    return out


# -- entries -------------------------------------------------------------------

@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "int" or "scalar"
    default: object
    doc: str = ""


@dataclass
class Expectations:
    dimension: int | None = None
    cartan: list | None = None
    truncation: list | None = None
    truncated_cartan: list | None = None
    candidates: list | None = None
    verdict: str | None = None
    note: str = ""


@dataclass
class Built:
    name: str
    params: dict
    source: dict
    self_injective: bool
    expect: Expectations
    datum: dict | None = None

    @property
    def presentation(self):
        return parse_presentation(self.source)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    params: tuple = ()
    builder: Callable = field(default=None, repr=False, compare=False)
    self_injective: bool = True

    def schema(self) -> dict:
        return {p.name: {"kind": p.kind, "default": p.default, "doc": p.doc} for p in self.params}


_ENTRIES: dict[str, CatalogEntry] = {}
_ALIASES = {"A(lambda)": "ALocal", "Lambda'": "LambdaPrime", "Gamma0": "GammaZero",
            "Gamma1": "GammaOne", "Gamma2": "GammaTwo"}


def _entry(name, summary, params=(), self_injective=True):
    def wrap(fn):
        _ENTRIES[name] = CatalogEntry(name, summary, tuple(params), fn, self_injective)
        return fn
    return wrap


def entries() -> list[CatalogEntry]:
    return list(_ENTRIES.values())


def get_entry(name: str) -> CatalogEntry:
    name = _ALIASES.get(name, name)
    if name not in _ENTRIES:
        raise CatalogError("unknown catalog entry %r" % name)
    return _ENTRIES[name]


def catalog_build(name: str, params: Mapping[str, object] | None = None) -> Built:
    """Build a catalog entry; ``params`` values may be strings (as from a CLI)."""
    entry = get_entry(name)
    given = dict(params or {})
    values = {}
    for p in entry.params:
        raw = given.pop(p.name, p.default)
        if p.kind == "int":
            try:
                values[p.name] = int(raw)
            except (TypeError, ValueError):
                raise CatalogError("parameter %s must be an integer, got %r" % (p.name, raw))
        else:
            values[p.name] = str(raw)
    if given:
        raise CatalogError("unknown parameters for %s: %s" % (entry.name, sorted(given)))
    try:
        out = entry.builder(**values)
        parse_presentation(out[0])
    except PresentationError as exc:
        raise CatalogError("%s: %s" % (entry.name, exc)) from exc
    src, expect = out[0], out[1]
    datum = out[2] if len(out) > 2 else None
    return Built(entry.name, values, src, entry.self_injective, expect, datum)


def _need(cond: bool, msg: str):
    if not cond:
        raise CatalogError(msg)


def _lam(value, forbidden):
    return {"lam": {"value": value, "forbidden": list(forbidden)}}


# -- local algebras ------------------------------------------------------------

_KRONECKER_DATUM = ([["e:1"]], [["X"]], [["Y"]], [["X*Y"]])


@_entry("Kronecker", "K[X,Y]/(X^2, Y^2); cellular with the identity involution")
def _kronecker():
    src = _pres(["1"], [("X", 1, 1), ("Y", 1, 1)], ["X*X", "Y*Y", "X*Y - Y*X"], "Kronecker")
    d = _datum(_KRONECKER_DATUM, _swap(fixed=("X", "Y")), ["1"])
    return src, Expectations(4, [[4]], candidates=[[[1], [1], [1], [1]]],
                             verdict=CELLULAR_VERIFIED), d


@_entry("ALocal", "local algebra alpha^2, beta^2, alpha*beta - lam*beta*alpha; cellular iff lam = 1",
        [Param("lam", "scalar", "2", "nonzero scalar")])
def _a_local(lam):
    src = _pres(["1"], [("alpha", 1, 1), ("beta", 1, 1)],
                ["alpha*alpha", "beta*beta", "alpha*beta - lam beta*alpha"],
                "ALocal", _lam(lam, ["0"]))
    datum = None
    verdict = UNDECIDED
    if parse_presentation(src).param_values["lam"] == 1:
        datum = _datum([[["e:1"]], [["alpha"]], [["beta"]], [["alpha*beta"]]],
                       _swap(fixed=("alpha", "beta")), ["1"])
        verdict = CELLULAR_VERIFIED
    return src, Expectations(4, [[4]], candidates=[[[1], [1], [1], [1]]], verdict=verdict), datum


# -- finite type -----------------------------------------------------------------

@_entry("DB2", "two-vertex algebra with a loop: b1*a1, g^2 - a1*b1 (the n = 2 modified Brauer tree)")
def _db2():
    src = _pres(["1", "2"], [("g", 1, 1), ("a1", 1, 2), ("b1", 2, 1)],
                ["b1*a1", "g*g - a1*b1"], "DB2")
    return src, Expectations(10, [[4, 2], [2, 2]],
                             candidates=[[[1, 1], [1, 1], [1, 0], [1, 0]]], verdict=UNDECIDED)


@_entry("DTS", "modified Brauer tree algebra of a line with n >= 3 edges, extreme exceptional vertex",
        [Param("n", "int", 3, "number of edges, at least 3")])
def _dts(n):
    _need(n >= 3, "DTS needs n >= 3 (n = 2 is the entry DB2)")
    arrows = [("g", 1, 1)]
    for i in range(1, n):
        arrows += [("a%d" % i, i, i + 1), ("b%d" % i, i + 1, i)]
    rels = []
    for i in range(1, n - 1):
        rels += ["a%d*a%d" % (i, i + 1), "b%d*b%d" % (i + 1, i)]
    k = n - 1
    rels += ["b1*a1", "a%d*b%d*a%d" % (k, k, k), "b%d*a%d*b%d" % (k, k, k),
             "g*g - a1*b1", "a2*b2 - b1*g*a1"]
    rels += ["b%d*a%d - a%d*b%d" % (i, i, i + 1, i + 1) for i in range(2, n - 1)]
    src = _pres(range(1, n + 1), arrows, rels, "DTS")
    return src, Expectations(truncation=["1", "2"], truncated_cartan=[[4, 2], [2, 2]],
                             candidates=[[[1, 1], [1, 1], [1, 0], [1, 0]]], verdict=UNDECIDED)


def double_quiver(vertices, arrows, name: str = "DoubleQuiver") -> dict:
    """Presentation of the double quiver of an acyclic quiver with its standard ideal.

    Products that are not composable are skipped.
    """
    Q1 = list(arrows)
    star = {a: a + "s" for a, _, _ in Q1}
    src = {a: s for a, s, _ in Q1}
    tgt = {a: t for a, _, t in Q1}
    all_arrows = [(a, s, t) for a, s, t in Q1] + [(star[a], t, s) for a, s, t in Q1]
    rels = []
    for (a, _, _), (b, _, _) in itertools.product(Q1, Q1):
        if tgt[a] == src[b]:
            rels.append("%s*%s" % (a, b))
            rels.append("%s*%s" % (star[b], star[a]))
    for (a, _, _), (b, _, _) in itertools.product(Q1, Q1):
        if a == b:
            continue
        if tgt[a] == tgt[b]:
            rels.append("%s*%s" % (a, star[b]))
        if src[b] == src[a]:
            rels.append("%s*%s" % (star[b], a))
    for (a, _, _), (b, _, _) in itertools.product(Q1, Q1):
        if src[a] == tgt[b]:
            rels.append("%s*%s - %s*%s" % (a, star[a], star[b], b))
    for (a, _, _), (b, _, _) in itertools.combinations(Q1, 2):
        if src[a] == src[b]:
            rels.append("%s*%s - %s*%s" % (a, star[a], b, star[b]))
        if tgt[a] == tgt[b]:
            rels.append("%s*%s - %s*%s" % (star[a], a, star[b], b))
    return _pres(vertices, all_arrows, rels, name)


def _circulant(n):
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        C[i][(i + 1) % n] += 1
        C[(i + 1) % n][i] += 1
    return C


def _cycle_candidates(n):
    return [[[1 if j in (i, (i + 1) % n) else 0 for j in range(n)] for i in range(n)]]


@_entry("DoubleQuiverCycle", "double quiver of an acyclic orientation of an l-cycle",
        [Param("l", "int", 3, "cycle length, at least 3")])
def _dq_cycle(l):
    _need(l >= 3, "cycle length must be at least 3")
    arrows = [("x%d" % k, k, k + 1) for k in range(1, l)] + [("x%d" % l, 1, l)]
    src = double_quiver(range(1, l + 1), arrows, "DoubleQuiverCycle")
    verdict = UNDECIDED if l == 3 else NOT_CELLULAR
    note = ("the 3-cycle Cartan matrix has a second order-consistent factorization"
            if l == 3 else "")
    return src, Expectations(4 * l, _circulant(l), verdict=verdict, note=note)


@_entry("DoubleQuiverBranch", "double quiver of the star with centre 2 and leaves 1, 3, 4")
def _dq_branch():
    arrows = [("x1", 1, 2), ("x2", 2, 3), ("x3", 2, 4)]
    src = double_quiver(range(1, 5), arrows, "DoubleQuiverBranch")
    C = [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 2]]
    return src, Expectations(14, C, candidates=[], verdict=NOT_CELLULAR)


@_entry("DoubleQuiverLine", "double quiver of a linearly oriented line with n arrows",
        [Param("n", "int", 2, "number of arrows; n = 1 is degenerate")])
def _dq_line(n):
    _need(n >= 1, "n must be positive")
    arrows = [("x%d" % k, k, k + 1) for k in range(1, n + 1)]
    src = double_quiver(range(1, n + 2), arrows, "DoubleQuiverLine")
    if n == 1:
        return src, Expectations(note="the generator list leaves x1*x1s and x1s*x1 free; "
                                      "the quotient is infinite-dimensional")
    C = [[2 if i == j else 1 if abs(i - j) == 1 else 0 for j in range(n + 1)] for i in range(n + 1)]
    return src, Expectations(2 * (2 * n + 1), C, verdict=UNDECIDED)


# -- domestic type -------------------------------------------------------------------

@_entry("LambdaPrimeCycle", "odd cycle of 2n+1 edges without loop",
        [Param("n", "int", 1, "the cycle has 2n+1 edges")])
def _lp_cycle(n):
    _need(n >= 1, "n must be positive")
    N = 2 * n + 1
    arrows = []
    for k in range(1, n + 1):
        arrows += [("a%d" % (2 * k - 1), 2 * k - 1, 2 * k), ("a%d" % (2 * k), 2 * k, 2 * k - 1),
                   ("b%d" % (2 * k), 2 * k, 2 * k + 1), ("b%d" % (2 * k + 1), 2 * k + 1, 2 * k)]
    arrows += [("g1", 1, N), ("g%d" % N, N, 1)]
    rels = []
    for k in range(1, n + 1):
        rels += ["a%d*b%d" % (2 * k - 1, 2 * k), "b%d*a%d" % (2 * k + 1, 2 * k)]
    # zero relations at the odd inner vertices, needed once n >= 2
    for k in range(1, n):
        rels += ["b%d*a%d" % (2 * k, 2 * k + 1), "a%d*b%d" % (2 * k + 2, 2 * k + 1)]
    for k in range(1, n):
        rels.append("a%d*a%d - b%d*b%d" % (2 * k + 1, 2 * k + 2, 2 * k + 1, 2 * k))
    rels += ["b%d*g%d" % (2 * n, N), "g1*b%d" % N, "g%d*a1" % N, "a2*g1"]
    for k in range(1, n + 1):
        rels.append("a%d*a%d - b%d*b%d" % (2 * k, 2 * k - 1, 2 * k, 2 * k + 1))
    rels += ["a1*a2 - g1*g%d" % N, "b%d*b%d - g%d*g1" % (N, 2 * n, N)]
    src = _pres(range(1, N + 1), arrows, rels, "LambdaPrimeCycle")
    verdict = UNDECIDED if N == 3 else NOT_CELLULAR
    return src, Expectations(4 * N, _circulant(N), candidates=None, verdict=verdict)


def _mirror_token(tok: str) -> str:
    """Reflect a Q(l,m) arrow name through vertex 0."""
    m = re.fullmatch(r"([abgd])(m?)(\d+)", tok)
    if not m:
        return tok
    letter, minus, idx = m.groups()
    k = -int(idx) if minus else int(idx)
    other = {"a": "b", "b": "a", "g": "d", "d": "g"}[letter]
    k = -k
    return "%s%s%d" % (other, "m" if k < 0 else "", abs(k))


def _mirror_text(text: str) -> str:
    def vertex(mo):
        v = int(mo.group(1))
        return "e:%d" % -v
    text = re.sub(r"e:(-?\d+)", vertex, text)
    return re.sub(r"[A-Za-z][A-Za-z0-9_]*", lambda mo: _mirror_token(mo.group(0)), text)


def _nm(letter, k):
    return "%s%s%d" % (letter, "m" if k < 0 else "", abs(k))


def _lp_arm(m, D):
    """Arrows and relations of the arm 1..m of Q(l,m); D is the delta-cycle at 0."""
    arrows, groups = [], {}
    if m == 0:
        return [("g0", 0, 0)], {"tail": ["g0*g0"]}
    arrows += [("g0", 0, 1), ("g1", 1, 0)]
    for i in range(1, m):
        arrows += [(_nm("a", i), i, i + 1), (_nm("b", i + 1), i + 1, i)]
    arrows.append((_nm("a", m), m, m))
    if m == 1:
        groups["zero"] = ["g0*a1", "a1*g1"]
        groups["cycle"] = ["a1 - g1*%s*g0" % D]
    else:
        groups["up"] = ["a%d*a%d" % (i, i + 1) for i in range(1, m)]
        groups["down"] = ["b%d*b%d" % (i, i - 1) for i in range(3, m + 1)]
        groups["zero"] = ["a%d*b%d" % (m, m), "g0*a1", "b2*g1"]
        groups["comm"] = ["a%d*b%d - b%d*a%d" % (i, i + 1, i, i - 1) for i in range(2, m)]
        groups["leaf"] = ["a%d - b%d*a%d" % (m, m, m - 1)]
        groups["cycle"] = ["a1*b2 - g1*%s*g0" % D]
    groups["tail"] = ["g1*g0"]
    return arrows, groups


_LP01_CELLS = ([["e:0"]], [["e:1", "g1"], ["g0", "g0*g1"]],
               [["d0", "d0*g0"], ["g1*d0", "g1*d0*g0"]], [["g0*g1*d0"]])
_LP01_IOTA = {"g0": "g1", "g1": "g0", "d0": "d0", "a1": "g1*d0*g0"}


@_entry("LambdaPrime", "Brauer graph T(l,m): a loop with arms of l and m edges; "
        "cellular iff (l,m) is (0,0), (0,1) or (1,0)",
        [Param("l", "int", 0, "left arm length"), Param("m", "int", 1, "right arm length")])
def _lambda_prime(l, m):
    _need(l >= 0 and m >= 0, "arm lengths must be natural numbers")
    C = "g0*g1" if m > 0 else "g0"
    D = "d0*dm1" if l > 0 else "d0"
    right_arrows, right = _lp_arm(m, D)
    # the left arm is the mirror image of a right arm of length l
    left_arrows, left = _lp_arm(l, "__C__")
    left_arrows = [(_mirror_token(a), -s, -t) for a, s, t in left_arrows]
    left = {k: [_mirror_text(r).replace("__C__", C) for r in v] for k, v in left.items()}
    vertices = list(range(-l, m + 1))
    arrows = sorted(set(left_arrows + right_arrows), key=lambda a: (min(a[1], a[2]), a[0]))
    rels = []
    for key in ("up", "down", "zero", "comm", "leaf", "cycle"):
        rels += left.get(key, []) + right.get(key, [])
    rels += right["tail"] + left["tail"] + ["%s*%s - %s*%s" % (C, D, D, C)]
    src = _pres(vertices, arrows, rels, "LambdaPrime")
    dim = (2 + (l > 0) + (m > 0)) ** 2 + sum(4 * (k - 1) + 1 for k in (l, m) if k > 0)
    datum = None
    if (l, m) == (0, 0):
        datum = _datum([[["e:0"]], [["g0"]], [["d0"]], [["g0*d0"]]],
                       _swap(fixed=("g0", "d0")), vertices)
        return src, Expectations(dim, [[4]], verdict=CELLULAR_VERIFIED), datum
    if (l, m) == (0, 1):
        datum = _datum(_LP01_CELLS, _LP01_IOTA, vertices)
        return src, Expectations(dim, [[4, 2], [2, 2]], verdict=CELLULAR_VERIFIED), datum
    if (l, m) == (1, 0):
        cells = [[[_mirror_text(x) for x in row] for row in c] for c in _LP01_CELLS]
        iota = {_mirror_token(k): _mirror_text(v) for k, v in _LP01_IOTA.items()}
        datum = _datum(cells, iota, vertices)
        return src, Expectations(dim, [[2, 2], [2, 4]], verdict=CELLULAR_VERIFIED), datum
    if l >= 1 and m >= 1:
        return src, Expectations(
            dim, truncation=["-1", "0", "1"],
            truncated_cartan=[[2, 2, 1], [2, 4, 2], [1, 2, 2]],
            candidates=[[[1, 1, 1], [1, 1, 0], [0, 1, 1], [0, 1, 0]]], verdict=NOT_CELLULAR)
    if l == 0:
        return src, Expectations(dim, truncation=["0", "1", "2"],
                                 truncated_cartan=[[4, 2, 0], [2, 2, 1], [0, 1, 2]],
                                 candidates=[], verdict=NOT_CELLULAR)
    return src, Expectations(dim, truncation=["-2", "-1", "0"],
                             truncated_cartan=[[2, 1, 0], [1, 2, 2], [0, 2, 4]],
                             candidates=[], verdict=NOT_CELLULAR)


@_entry("GammaZero", "Brauer graph T(m) with one loop and an extreme edge a; cellular iff m = 1",
        [Param("m", "int", 1, "length of the arm, at least 1")])
def _gamma_zero(m):
    _need(m >= 1, "m must be at least 1")
    vertices = ["a", "b"] + [str(i) for i in range(1, m + 1)]
    arrows = [("da", "a", "b"), ("db", "b", "a"), ("gb", "b", 1), ("g1", 1, "b")]
    if m == 1:
        rels = ["gb*g1*db*da*gb", "g1*db*da*gb*g1", "da*gb*g1*db*da", "db*da*gb*g1*db",
                "g1*gb", "da*gb*g1 - da*db*da", "gb*g1*db - db*da*db"]
        src = _pres(vertices, arrows, rels, "GammaZero")
        cells = ([["e:b"]], [["e:1", "g1"], ["gb", "gb*g1"]],
                 [["e:a", "da", "da*gb"], ["db", "db*da", "db*da*gb"],
                  ["g1*db", "g1*db*da", "g1*db*da*gb"]],
                 [["da*db", "da*db*da"], ["db*da*db", "db*da*db*da"]], [["da*db*da*db"]])
        datum = _datum(cells, _swap(("da", "db"), ("gb", "g1")), vertices)
        return src, Expectations(19, [[3, 2, 1], [2, 4, 2], [1, 2, 2]],
                                 verdict=CELLULAR_VERIFIED), datum
    for i in range(1, m):
        arrows += [("a%d" % i, i, i + 1), ("b%d" % (i + 1), i + 1, i)]
    arrows += [("a%d" % m, m, m), ("aa", "a", "a")]
    rels = ["a%d*a%d" % (i, i + 1) for i in range(1, m)]
    rels += ["b%d*b%d" % (i, i - 1) for i in range(3, m + 1)]
    rels += ["a%d*b%d" % (m, m), "b2*g1", "gb*a1", "aa*da", "db*aa"]
    rels += ["a%d*b%d - b%d*a%d" % (i, i + 1, i, i - 1) for i in range(2, m)]
    rels += ["a%d - b%d*a%d" % (m, m, m - 1), "aa - da*gb*g1*db",
             "a1*b2 - g1*db*da*gb", "g1*gb", "da*gb*g1 - da*db*da", "gb*g1*db - db*da*db"]
    src = _pres(vertices, arrows, rels, "GammaZero")
    return src, Expectations(23 + 4 * (m - 2), truncation=["a", "b", "1", "2"],
                             truncated_cartan=[[3, 2, 1, 0], [2, 4, 2, 0], [1, 2, 2, 1], [0, 0, 1, 2]],
                             candidates=[], verdict=NOT_CELLULAR)


@_entry("GammaOne", "triangle Brauer graph with one exceptional vertex")
def _gamma_one():
    arrows = [("gb", "b", "a"), ("ga", "a", "b"), ("aa", "a", "c"), ("ac", "c", "a"),
              ("bc", "c", "b"), ("bb", "b", "c")]
    rels = ["bb*ac", "ac*ga", "ga*bb", "ga*gb*aa", "ac*aa*bc", "bb*bc*gb",
            "bb - gb*aa", "ga - aa*bc", "ac*aa*ac - bc*gb"]
    src = _pres(["a", "b", "c"], arrows, rels, "GammaOne")
    return src, Expectations(verdict=NOT_CELLULAR)


_G2_NOTE = "only v2 is exceptional, following the convention adopted for this family"


def _g2_gamma(l):
    if l == -1:
        return ["g2*a0", "b1*g1", "g1*g3", "g3*g2", "g2*g1*g2*b0", "am1*b0*am1*g1",
                "b0*am1 - g1*g2", "(g2*b0*am1*g1)^2 - g3"]
    return ["g2*a0", "b1*g1", "g1*g3", "g3*g2", "g2*b0", "am1*g1",
            "b0*am1 - g1*g2", "g2*b0*am1*g1 - g3"]


@_entry("GammaTwo", "Brauer tree T_l^m with v2 of multiplicity two; cellular iff m = 0",
        [Param("l", "int", 0, "position of v2: -1, 0, ..., m"), Param("m", "int", 0, "arm length")])
def _gamma_two(l, m):
    _need(m >= 0 and -1 <= l <= max(m, 0), "need m >= 0 and -1 <= l <= m")
    vertices = ["-1", "0", "w"] + [str(i) for i in range(1, m + 1)]
    arrows = [("am1", -1, 0), ("b0", 0, -1), ("bm1", -1, -1),
              ("g1", 0, "w"), ("g2", "w", 0), ("g3", "w", "w")]
    for i in range(0, m):
        arrows += [("a%d" % i, i, i + 1), ("b%d" % (i + 1), i + 1, i)]
    arrows.append(("a%d" % m, m, m))
    if m == 0:
        if l == 0:
            rels = ["am1*a0", "b0*bm1", "bm1*am1", "a0*b0", "a0*a0 - b0*am1", "bm1 - am1*b0",
                    "g2*a0", "a0*g1", "g1*g3", "g3*g2", "g2*b0", "am1*g1",
                    "b0*am1 - g1*g2", "g3 - g2*b0*am1*g1"]
            cells = ([["e:w"]], [["e:0", "g1"], ["g2", "g2*g1"]], [["a0"]],
                     [["e:-1", "am1"], ["b0", "b0*am1"]], [["am1*b0"]])
            dim, C = 11, [[2, 1, 0], [1, 3, 1], [0, 1, 2]]
        else:
            rels = ["am1*a0", "b0*bm1", "bm1*am1", "a0*b0", "a0 - (b0*am1)^2",
                    "bm1 - (am1*b0)^2", "g2*a0", "a0*g1", "g1*g3", "g3*g2",
                    "g2*g1*g2*b0", "am1*b0*am1*g1", "b0*am1 - g1*g2", "g3 - (g2*b0*am1*g1)^2"]
            cells = ([["e:w"]], [["e:0", "g1"], ["g2", "g2*g1"]],
                     [["e:-1", "am1", "am1*g1"], ["b0", "b0*am1", "b0*am1*g1"],
                      ["g2*b0", "g2*b0*am1", "(g2*g1)^2"]],
                     [["am1*b0", "am1*b0*am1"], ["b0*am1*b0", "(b0*am1)^2"]], [["(am1*b0)^2"]])
            dim, C = 19, [[3, 2, 1], [2, 3, 2], [1, 2, 3]]
        src = _pres(vertices, arrows, rels, "GammaTwo")
        datum = _datum(cells, _swap(("am1", "b0"), ("g1", "g2"), fixed=("a0", "bm1", "g3")),
                       vertices)
        return src, Expectations(dim, C, verdict=CELLULAR_VERIFIED, note=_G2_NOTE), datum

    def a(i):
        return "a%d" % i if i >= 0 else "am1"

    def b(i):
        return "b%d" % i if i >= 0 else "bm1"

    rels = ["%s*%s" % (a(i), a(i + 1)) for i in range(-1, m)]
    rels += ["%s*%s" % (b(i), b(i - 1)) for i in range(0, m + 1)]
    rels += ["bm1*am1", "a%d*b%d" % (m, m)]
    if l == m:
        rels += ["%s*%s - %s*%s" % (a(i), b(i + 1), b(i), a(i - 1)) for i in range(0, m)]
        rels += ["bm1 - am1*b0", "a%d*a%d - b%d*a%d" % (m, m, m, m - 1)]
    elif l >= 1:
        rels += ["%s*%s - %s*%s" % (a(i), b(i + 1), b(i), a(i - 1))
                 for i in range(0, m) if i not in (l, l + 1)]
        rels.append("bm1 - am1*b0")
        if l + 1 < m:
            rels.append("a%d - b%d*a%d" % (m, m, m - 1))
        rels.append("(a%d*b%d)^2 - b%d*a%d" % (l, l + 1, l, l - 1))
        if l + 1 < m:
            rels.append("a%d*b%d - (b%d*a%d)^2" % (l + 1, l + 2, l + 1, l))
        else:
            rels.append("a%d - (b%d*a%d)^2" % (m, m, l))
    elif l == 0:
        rels += ["a%d*b%d - b%d*a%d" % (i, i + 1, i, i - 1) for i in range(2, m)]
        rels.append("bm1 - am1*b0")
        if m >= 2:
            rels.append("a%d - b%d*a%d" % (m, m, m - 1))
        rels.append("(a0*b1)^2 - b0*am1")
        rels.append("a1 - (b1*a0)^2" if m == 1 else "a1*b2 - (b1*a0)^2")
    else:
        rels += ["a%d*b%d - b%d*a%d" % (i, i + 1, i, i - 1) for i in range(1, m)]
        rels += ["bm1 - (am1*b0)^2", "a%d - b%d*a%d" % (m, m, m - 1), "a0*b1 - (b0*am1)^2"]
    rels += _g2_gamma(l)
    src = _pres(vertices, arrows, rels, "GammaTwo")
    T = {-1: [[3, 2, 1, 0], [2, 3, 2, 1], [1, 2, 3, 0], [0, 1, 0, 2]],
         0: [[2, 1, 0, 0], [1, 3, 1, 2], [0, 1, 2, 0], [0, 2, 0, 3]],
         1: [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 3]]}.get(
        l, [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 2]])
    return src, Expectations(truncation=["-1", "0", "w", "1"], truncated_cartan=T,
                             candidates=[], verdict=NOT_CELLULAR, note=_G2_NOTE)


@_entry("GammaTwoT00", "the algebra GammaTwo with l = 0, m = 0")
def _g2_t00():
    return _gamma_two(0, 0)


@_entry("GammaTwoTm10", "the algebra GammaTwo with l = -1, m = 0")
def _g2_tm10():
    return _gamma_two(-1, 0)


@_entry("Omega", "non-standard domestic algebra of the line T(n) with a loop",
        [Param("n", "int", 2, "number of edges, at least 1")])
def _omega(n):
    _need(n >= 1, "n must be positive")
    if n == 1:
        src = _pres(["1"], [("X", 1, 1), ("Y", 1, 1)],
                    ["X*X - X*Y", "X*Y + Y*X", "Y*Y"], "Omega")
        return src, Expectations(4, [[4]], candidates=[[[1], [1], [1], [1]]], verdict=UNDECIDED)
    arrows = [("g", 1, 1)]
    for i in range(1, n):
        arrows += [("a%d" % i, i, i + 1), ("b%d" % i, i + 1, i)]
    arrows.append(("b%d" % n, n, n))
    rels = ["a%d*a%d" % (i, i + 1) for i in range(1, n - 1)]
    rels += ["b%d*b%d" % (i + 1, i) for i in range(1, n)]
    rels += ["b1*a1", "a%d*b%d" % (n - 1, n)]
    rels += ["a%d*b%d - b%d*a%d" % (i, i, i - 1, i - 1) for i in range(3, n)]
    if n == 2:
        rels.append("b2 - b1*g*a1")
    else:
        rels += ["a2*b2 - b1*g*a1", "b%d - b%d*a%d" % (n, n - 1, n - 1)]
    rels += ["g*g - g*a1*b1", "g*a1*b1 + a1*b1*g"]
    src = _pres(range(1, n + 1), arrows, rels, "Omega")
    return src, Expectations(4 * n + 2, truncation=["1", "2"], truncated_cartan=[[4, 2], [2, 2]],
                             candidates=[[[1, 1], [1, 1], [1, 0], [1, 0]]], verdict=UNDECIDED)


# -- polynomial growth -----------------------------------------------------------------

_LAM_PARAM = [Param("lam", "scalar", "2", "scalar outside {0, 1}")]


@_entry("A1", "three vertices in a line, two 2-cycles; cellular", _LAM_PARAM)
def _a1(lam):
    arrows = [("alpha", 1, 2), ("gamma", 2, 1), ("sigma", 2, 3), ("beta", 3, 2)]
    rels = ["alpha*gamma*alpha - alpha*sigma*beta", "beta*gamma*alpha - lam beta*sigma*beta",
            "gamma*alpha*gamma - sigma*beta*gamma", "gamma*alpha*sigma - lam sigma*beta*sigma"]
    src = _pres([1, 2, 3], arrows, rels, "A1", _lam(lam, ["0", "1"]))
    cells = ([["e:2"]], [["e:1", "alpha"], ["gamma", "gamma*alpha"]],
             [["e:3", "beta"], ["sigma", "sigma*beta"]],
             [["alpha*gamma", "alpha*sigma", "alpha*gamma*alpha"],
              ["beta*gamma", "lam beta*sigma", "beta*gamma*alpha"],
              ["gamma*alpha*gamma", "gamma*alpha*sigma", "gamma*alpha*gamma*alpha"]],
             [["alpha*gamma*alpha*gamma"]], [["beta*gamma*alpha*sigma"]])
    datum = _datum(cells, _swap(("alpha", "gamma"), ("beta", "sigma")), [1, 2, 3])
    return src, Expectations(20, [[3, 2, 1], [2, 4, 2], [1, 2, 3]],
                             verdict=CELLULAR_VERIFIED), datum


@_entry("A2", "two vertices with loops; cellular", _LAM_PARAM)
def _a2(lam):
    arrows = [("alpha", 1, 1), ("beta", 2, 2), ("sigma", 1, 2), ("gamma", 2, 1)]
    rels = ["alpha*alpha - sigma*gamma", "lam beta*beta - gamma*sigma",
            "gamma*alpha - beta*gamma", "sigma*beta - alpha*sigma"]
    src = _pres([1, 2], arrows, rels, "A2", _lam(lam, ["0", "1"]))
    cells = ([["e:1"]], [["e:2"]], [["alpha", "sigma"], ["gamma", "beta"]],
             [["alpha*alpha", "alpha*sigma"], ["gamma*alpha", "beta*beta"]],
             [["alpha*alpha*alpha"]], [["beta*beta*beta"]])
    datum = _datum(cells, _swap(("sigma", "gamma"), fixed=("alpha", "beta")), [1, 2])
    return src, Expectations(12, [[4, 2], [2, 4]], verdict=CELLULAR_VERIFIED), datum


_STAR = [("alpha", 1, 2), ("beta", 2, 1), ("delta", 2, 3), ("gamma", 3, 2),
         ("eps", 2, 4), ("zeta", 4, 2)]


@_entry("A3", "star with three 2-cycles, x + y + z = 0 and zero squares")
def _a3():
    rels = ["beta*alpha + delta*gamma + eps*zeta", "alpha*beta", "gamma*delta", "zeta*eps"]
    src = _pres([1, 2, 3, 4], _STAR, rels, "A3")
    C = [[2, 2, 1, 1], [2, 4, 2, 2], [1, 2, 2, 1], [1, 2, 1, 2]]
    D1 = [[1, 1, 1, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1]]
    D2 = [[1, 1, 1, 0], [1, 1, 0, 1], [0, 1, 1, 1], [0, 1, 0, 0]]
    return src, Expectations(28, C, candidates=[D1, D2], verdict=NOT_CELLULAR)


@_entry("A4", "star with three 2-cycles; cellular")
def _a4():
    rels = ["beta*alpha + delta*gamma + eps*zeta", "alpha*beta", "gamma*eps", "zeta*delta"]
    src = _pres([1, 2, 3, 4], _STAR, rels, "A4")
    cells = ([["e:3"]], [["e:2", "delta"], ["gamma", "gamma*delta"]],
             [["e:1", "alpha", "alpha*delta"], ["beta", "beta*alpha", "beta*alpha*delta"],
              ["gamma*beta", "gamma*beta*alpha", "gamma*beta*alpha*delta"]],
             [["e:4", "zeta", "zeta*beta"], ["eps", "eps*zeta", "eps*zeta*beta"],
              ["alpha*eps", "alpha*eps*zeta", "alpha*eps*zeta*beta"]],
             [["zeta*eps", "zeta*eps*zeta"], ["eps*zeta*eps", "eps*zeta*eps*zeta"]],
             [["zeta*eps*zeta*eps"]])
    datum = _datum(cells, _swap(("alpha", "beta"), ("gamma", "delta"), ("eps", "zeta")),
                   [1, 2, 3, 4])
    C = [[2, 2, 1, 1], [2, 4, 2, 2], [1, 2, 3, 0], [1, 2, 0, 3]]
    return src, Expectations(28, C, verdict=CELLULAR_VERIFIED), datum


_LOOP2 = [("alpha", 1, 1), ("gamma", 1, 2), ("beta", 2, 1)]
_D53 = [[[2, 1], [1, 1], [0, 1]], [[1, 1], [1, 1], [1, 1], [1, 0], [1, 0]]]
_D52 = [[[2, 1], [1, 0], [0, 1]], [[1, 1], [1, 1], [1, 0], [1, 0], [1, 0]]]


@_entry("A5", "loop and 2-cycle: alpha^2 = gamma*beta, beta*alpha*gamma = 0")
def _a5():
    src = _pres([1, 2], _LOOP2, ["alpha*alpha - gamma*beta", "beta*alpha*gamma"], "A5")
    return src, Expectations(14, [[5, 3], [3, 3]], candidates=_D53, verdict=UNDECIDED)


@_entry("A6", "loop and 2-cycle: alpha^3 = gamma*beta")
def _a6():
    rels = ["alpha^3 - gamma*beta", "beta*gamma", "beta*alpha^2", "alpha^2*gamma"]
    src = _pres([1, 2], _LOOP2, rels, "A6")
    return src, Expectations(11, [[5, 2], [2, 2]], candidates=_D52, verdict=UNDECIDED)


@_entry("A7", "line of four vertices with 2-cycles; cellular")
def _a7():
    arrows = [("alpha", 1, 2), ("beta", 2, 1), ("delta", 2, 3), ("gamma", 3, 2),
              ("eps", 3, 4), ("zeta", 4, 3)]
    rels = ["beta*alpha - delta*gamma", "gamma*delta - eps*zeta",
            "alpha*delta*eps", "zeta*gamma*beta"]
    src = _pres([1, 2, 3, 4], arrows, rels, "A7")
    cells = ([["e:4"]], [["e:3", "eps"], ["zeta", "zeta*eps"]],
             [["e:2", "delta", "delta*eps"], ["gamma", "gamma*delta", "gamma*delta*eps"],
              ["zeta*gamma", "zeta*gamma*delta", "zeta*gamma*delta*eps"]],
             [["e:1", "alpha", "alpha*delta"], ["beta", "beta*alpha", "beta*alpha*delta"],
              ["gamma*beta", "gamma*beta*alpha", "gamma*beta*alpha*delta"]],
             [["alpha*beta", "alpha*beta*alpha"], ["beta*alpha*beta", "beta*alpha*beta*alpha"]],
             [["alpha*beta*alpha*beta"]])
    datum = _datum(cells, _swap(("alpha", "beta"), ("gamma", "delta"), ("eps", "zeta")),
                   [1, 2, 3, 4])
    C = [[3, 2, 1, 0], [2, 3, 2, 1], [1, 2, 3, 2], [0, 1, 2, 3]]
    return src, Expectations(28, C, verdict=CELLULAR_VERIFIED), datum


@_entry("A8", "square with a diagonal 2-cycle; Ext-asymmetric")
def _a8():
    arrows = [("sigma", 1, 2), ("zeta", 2, 3), ("gamma", 3, 4), ("delta", 4, 1),
              ("alpha", 1, 3), ("beta", 3, 1)]
    rels = ["alpha*beta*alpha - sigma*zeta", "beta*alpha*beta - gamma*delta",
            "zeta*beta*alpha", "delta*alpha*beta", "beta*alpha*gamma", "alpha*beta*sigma",
            "zeta*gamma", "delta*sigma"]
    return _pres([1, 2, 3, 4], arrows, rels, "A8"), Expectations(verdict=NOT_CELLULAR)


@_entry("A9", "square with two 2-cycles on one side; Ext-asymmetric")
def _a9():
    arrows = [("alpha", 1, 2), ("sigma", 2, 3), ("beta", 3, 2), ("gamma", 3, 4),
              ("eps", 4, 3), ("delta", 4, 1)]
    rels = ["delta*alpha - eps*beta", "gamma*eps - beta*sigma", "alpha*sigma*beta",
            "eps*gamma*delta", "sigma*gamma*eps*gamma"]
    return _pres([1, 2, 3, 4], arrows, rels, "A9"), Expectations(verdict=NOT_CELLULAR)


@_entry("A10", "2-cycle attached to a 3-cycle; Ext-asymmetric")
def _a10():
    arrows = [("beta", 1, 2), ("alpha", 2, 1), ("delta", 2, 3), ("gamma", 3, 4), ("eps", 4, 2)]
    rels = ["eps*alpha*beta - eps*delta*gamma*eps", "alpha*beta*delta - delta*gamma*eps*delta",
            "beta*alpha", "(gamma*eps*delta)^2*gamma"]
    return _pres([1, 2, 3, 4], arrows, rels, "A10"), Expectations(verdict=NOT_CELLULAR)


@_entry("A11", "line of four vertices with 2-cycles; cellular")
def _a11():
    arrows = [("beta", 1, 2), ("alpha", 2, 1), ("eta", 2, 3), ("gamma", 3, 2),
              ("zeta", 3, 4), ("delta", 4, 3)]
    rels = ["gamma*alpha*beta - gamma*eta*gamma", "alpha*beta*eta - eta*gamma*eta",
            "beta*alpha", "delta*gamma", "eta*zeta", "(gamma*eta)^2 - zeta*delta"]
    src = _pres([1, 2, 3, 4], arrows, rels, "A11")
    cells = ([["e:2"]], [["e:1", "beta"], ["alpha", "alpha*beta"]],
             [["e:3", "gamma", "gamma*alpha"], ["eta", "eta*gamma", "eta*gamma*alpha"],
              ["beta*eta", "beta*eta*gamma", "beta*eta*gamma*alpha"]],
             [["gamma*eta", "gamma*eta*gamma"], ["eta*gamma*eta", "eta*gamma*eta*gamma"]],
             [["e:4", "delta"], ["zeta", "zeta*delta"]], [["delta*zeta"]])
    datum = _datum(cells, _swap(("alpha", "beta"), ("gamma", "eta"), ("delta", "zeta")),
                   [1, 2, 3, 4])
    C = [[2, 2, 1, 0], [2, 4, 2, 0], [1, 2, 3, 1], [0, 0, 1, 2]]
    return src, Expectations(23, C, verdict=CELLULAR_VERIFIED), datum


@_entry("A12", "triangle with a 2-cycle; Ext-asymmetric")
def _a12():
    arrows = [("alpha", 1, 2), ("gamma", 2, 3), ("beta", 3, 1), ("delta", 1, 3)]
    rels = ["delta*beta*delta - alpha*gamma", "gamma*beta*alpha", "beta*(delta*beta)^3"]
    return _pres([1, 2, 3], arrows, rels, "A12"), Expectations(verdict=NOT_CELLULAR)


@_entry("A13", "loop at the centre of a line of three vertices")
def _a13():
    arrows = [("alpha", 2, 2), ("beta", 1, 2), ("gamma", 2, 1), ("delta", 2, 3), ("sigma", 3, 2)]
    rels = ["alpha^2 - gamma*beta", "beta*delta", "beta*gamma", "sigma*gamma", "alpha*delta",
            "sigma*alpha", "alpha^3 - delta*sigma"]
    src = _pres([1, 2, 3], arrows, rels, "A13")
    return src, Expectations(truncation=["1", "2"], truncated_cartan=[[2, 2], [2, 4]],
                             candidates=[[[1, 1], [1, 1], [0, 1], [0, 1]]], verdict=UNDECIDED)


@_entry("A14", "line of three vertices with 2-cycles")
def _a14():
    arrows = [("alpha", 1, 2), ("beta", 2, 1), ("delta", 2, 3), ("gamma", 3, 2)]
    rels = ["beta*alpha - (delta*gamma)^2", "alpha*delta*gamma*delta",
            "gamma*delta*gamma*beta", "alpha*beta"]
    src = _pres([1, 2, 3], arrows, rels, "A14")
    return src, Expectations(truncation=["1", "2"], truncated_cartan=[[2, 2], [2, 4]],
                             candidates=[[[1, 1], [1, 1], [0, 1], [0, 1]]], verdict=UNDECIDED)


@_entry("A15", "triangle with a loop and a 2-cycle; Ext-asymmetric")
def _a15():
    arrows = [("alpha", 1, 1), ("sigma", 1, 2), ("gamma", 2, 3), ("beta", 3, 1), ("delta", 1, 3)]
    rels = ["gamma*beta*alpha", "alpha^2 - delta*beta", "beta*delta", "alpha*sigma",
            "alpha*delta - sigma*gamma"]
    return _pres([1, 2, 3], arrows, rels, "A15"), Expectations(verdict=NOT_CELLULAR)


@_entry("A16", "triangle with a loop and a 2-cycle, opposite orientation; Ext-asymmetric")
def _a16():
    arrows = [("alpha", 1, 1), ("sigma", 2, 1), ("gamma", 3, 2), ("beta", 1, 3), ("delta", 3, 1)]
    rels = ["alpha*beta*gamma", "alpha^2 - beta*delta", "delta*beta", "sigma*alpha",
            "delta*alpha - gamma*sigma"]
    return _pres([1, 2, 3], arrows, rels, "A16"), Expectations(verdict=NOT_CELLULAR)


@_entry("Lambda1", "non-standard algebra over F_3, loop and 2-cycle")
def _lambda1():
    rels = ["alpha^2 - gamma*beta", "beta*alpha*gamma - beta*alpha^2*gamma",
            "beta*alpha*gamma*beta", "gamma*beta*alpha*gamma"]
    src = _pres([1, 2], _LOOP2, rels, "Lambda1", prime=3)
    return src, Expectations(14, [[5, 3], [3, 3]], candidates=_D53, verdict=UNDECIDED,
                             note="the three-row candidate fails the order check")


@_entry("Lambda2", "non-standard algebra over F_3, loop and 2-cycle")
def _lambda2():
    rels = ["alpha^2*gamma", "beta*alpha^2", "gamma*beta*gamma", "beta*gamma*beta",
            "beta*gamma - beta*alpha*gamma", "alpha^3 - gamma*beta"]
    src = _pres([1, 2], _LOOP2, rels, "Lambda2", prime=3)
    return src, Expectations(11, [[5, 2], [2, 2]], candidates=_D52, verdict=UNDECIDED,
                             note="both candidates survive the order check")


# -- Brauer graphs ---------------------------------------------------------------------

@dataclass
class BrauerGraph:
    """Ribbon graph with multiplicities.

    ``orderings[v]`` lists the edge-ends at v in cyclic (clockwise) order; a
    loop at v appears twice there.
    """
    multiplicity: dict
    edges: dict
    orderings: dict

    def validate(self):
        V = set(self.multiplicity)
        if not V:
            raise CatalogError("Brauer graph needs a vertex")
        for v, m in self.multiplicity.items():
            if not isinstance(m, int) or m < 1:
                raise CatalogError("multiplicity of %s must be a positive integer" % v)
        if set(self.orderings) != V:
            raise CatalogError("every vertex needs a cyclic ordering")
        ends: dict = {}
        for e, (u, v) in self.edges.items():
            if u not in V or v not in V:
                raise CatalogError("edge %s has an unknown endpoint" % e)
            ends[(u, e)] = ends.get((u, e), 0) + 1
            ends[(v, e)] = ends.get((v, e), 0) + 1
        seen: dict = {}
        for v, order in self.orderings.items():
            for e in order:
                seen[(v, e)] = seen.get((v, e), 0) + 1
        if seen != ends:
            raise CatalogError("cyclic orderings must list exactly the edge-ends at each vertex")
        # connectivity and cycle count
        adj = {v: set() for v in V}
        for u, v in self.edges.values():
            adj[u].add(v)
            adj[v].add(u)
        start = next(iter(sorted(V)))
        stack, reach = [start], {start}
        while stack:
            x = stack.pop()
            for y in adj[x] - reach:
                reach.add(y)
                stack.append(y)
        if reach != V:
            raise CatalogError("Brauer graph must be connected")
        if len(self.edges) - len(V) + 1 > 1:
            raise CatalogError("only Brauer graphs with at most one cycle are supported")


def brauer_graph_algebra(G: BrauerGraph, name: str = "BrauerGraph") -> dict:
    """Presentation source of the Brauer graph algebra of G."""
    G.validate()
    arrows = []
    cyc: dict = {}  # (vertex, position) -> arrow names of the cycle starting there
    for v, order in G.orderings.items():
        k = len(order)
        names = ["%s_%d" % (v, p + 1) for p in range(k)]
        for p in range(k):
            arrows.append((names[p], order[p], order[(p + 1) % k]))
        for p in range(k):
            cyc[(v, p)] = [names[(p + j) % k] for j in range(k)]
    halves: dict = {e: [] for e in G.edges}
    for v, order in G.orderings.items():
        for p, e in enumerate(order):
            halves[e].append((v, p))
    rels = []
    for e in G.edges:
        (u, p), (v, q) = halves[e]
        lhs = cyc[(u, p)] * G.multiplicity[u]
        rhs = cyc[(v, q)] * G.multiplicity[v]
        rels.append("%s - %s" % ("*".join(lhs), "*".join(rhs)))
    for e in G.edges:
        for h, h2 in itertools.permutations(halves[e], 2):
            (u, p), (v, q) = h, h2
            k = len(G.orderings[u])
            into = cyc[(u, (p - 1) % k)][0]
            out = cyc[(v, q)][0]
            rels.append("%s*%s" % (into, out))
    return _pres(list(G.edges), arrows, rels, name)


def brauer_dimension(G: BrauerGraph) -> int:
    return sum(G.multiplicity[v] * len(o) ** 2 for v, o in G.orderings.items())


def line_graph(n: int, first: int = 1, last: int = 1) -> BrauerGraph:
    """Straight line with n edges; the end vertices carry multiplicities first and last."""
    if n < 1:
        raise CatalogError("a line needs at least one edge")
    mult = {"v%d" % i: 1 for i in range(n + 1)}
    mult["v0"], mult["v%d" % n] = first, last
    edges = {str(i): ("v%d" % (i - 1), "v%d" % i) for i in range(1, n + 1)}
    orders = {"v0": ["1"], "v%d" % n: [str(n)]}
    for i in range(1, n):
        orders["v%d" % i] = [str(i), str(i + 1)]
    return BrauerGraph(mult, edges, orders)


@_entry("BrauerLine", "Brauer tree algebra of a line; end multiplicities 2, 2 give the "
        "two-exceptional-vertex class",
        [Param("n", "int", 2, "number of edges"), Param("first", "int", 1, "multiplicity"),
         Param("last", "int", 1, "multiplicity")])
def _brauer_line(n, first, last):
    G = line_graph(n, first, last)
    src = brauer_graph_algebra(G, "BrauerLine")
    C = None
    if first == last == 1 and n >= 2:
        C = [[2 if i == j else 1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    note = "a single edge with multiplicities 1, 1 degenerates to K[x]/(x^2)" if n == 1 else ""
    return src, Expectations(brauer_dimension(G), C, verdict=None, note=note)
