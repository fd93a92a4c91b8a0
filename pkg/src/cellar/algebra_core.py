"""Quivers, presentations and their normalization to finite-dimensional algebras.

Paths compose left to right: the word ``a b`` means ``a`` followed by ``b``
and is defined when target(a) = source(b).  Internally a word is a tuple of
arrow indices; the trivial path at vertex k is the one-element tuple ``(~k,)``.

A presentation is normalized by completing its relations to a noncommutative
Groebner basis of the two-sided ideal they generate.  The monomial order is a
weighted degree-lexicographic order.  Every arrow has weight 1 except an arrow
that occurs as the lone single-arrow term of a relation whose other terms are
longer; such an arrow is weighted above those terms so that it becomes the
leading word and is rewritten away.  Remaining ties go to the arrow order of
the file (earlier arrows are smaller).
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping

from .linalg import Span, rank
from .scalars import Field, FieldError, eval_expr, scalar_str

DEFAULT_CAP = 32

Word = tuple


class PresentationError(ValueError):
    """Malformed or inconsistent algebra input."""


class CapExceeded(RuntimeError):
    """Rewriting did not stabilize below the word-length cap."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow]):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple(arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex name")
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        self.aindex: dict[str, int] = {}
        for i, a in enumerate(self.arrows):
            if a.name in self.aindex:
                raise PresentationError("duplicate arrow name %r" % a.name)
            if a.source not in self.vindex or a.target not in self.vindex:
                raise PresentationError("arrow %r has an unknown endpoint" % a.name)
            self.aindex[a.name] = i
        self._src = [self.vindex[a.source] for a in self.arrows]
        self._tgt = [self.vindex[a.target] for a in self.arrows]

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def trivial(self, v: str) -> Word:
        return (~self.vindex[v],)

    def is_trivial(self, w: Word) -> bool:
        return w[0] < 0

    def source_index(self, w: Word) -> int:
        return ~w[0] if w[0] < 0 else self._src[w[0]]

    def target_index(self, w: Word) -> int:
        return ~w[0] if w[0] < 0 else self._tgt[w[-1]]

    def source(self, w: Word) -> str:
        return self.vertices[self.source_index(w)]

    def target(self, w: Word) -> str:
        return self.vertices[self.target_index(w)]

    def compose(self, u: Word, v: Word):
        """The path u then v, or None when the endpoints do not match."""
        if self.target_index(u) != self.source_index(v):
            return None
        if u[0] < 0:
            return v
        if v[0] < 0:
            return u
        return u + v

    def word(self, names: Iterable[str]) -> Word:
        """Build a word from arrow names, checking composability."""
        names = list(names)
        if not names:
            raise PresentationError("empty path; use a vertex for trivial paths")
        w = []
        for n in names:
            if n not in self.aindex:
                raise PresentationError("unknown arrow %r" % n)
            i = self.aindex[n]
            if w and self._tgt[w[-1]] != self._src[i]:
                raise PresentationError(
                    "non-composable path %s: %s ends at %s but %s starts at %s" % (
                        " ".join(names), self.arrows[w[-1]].name,
                        self.arrows[w[-1]].target, n, self.arrows[i].source))
            w.append(i)
        return tuple(w)

    def names(self, w: Word) -> list[str]:
        return [] if w[0] < 0 else [self.arrows[i].name for i in w]

    def word_str(self, w: Word) -> str:
        if w[0] < 0:
            return "e_%s" % self.vertices[~w[0]]
        return "*".join(self.arrows[i].name for i in w)

    def word_len(self, w: Word) -> int:
        return 0 if w[0] < 0 else len(w)


# -- elements of the path algebra: dicts word -> nonzero scalar -------------

def elem_add(x: Mapping, y: Mapping, scale=1) -> dict:
    out = dict(x)
    for w, c in y.items():
        s = out.get(w, 0) + scale * c
        if s == 0:
            out.pop(w, None)
        else:
            out[w] = s
    return out


def elem_scale(x: Mapping, c) -> dict:
    if c == 0:
        return {}
    return {w: c * v for w, v in x.items()}


def elem_concat(q: Quiver, x: Mapping, y: Mapping) -> dict:
    """Product in the free path algebra (no reduction)."""
    out: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            w = q.compose(u, v)
            if w is None:
                continue
            s = out.get(w, 0) + a * b
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
    return out


def elem_str(q: Quiver, x: Mapping) -> str:
    if not x:
        return "0"
    parts = []
    for w in sorted(x, key=lambda w: (q.word_len(w), w)):
        c = x[w]
        cs = scalar_str(c)
        body = q.word_str(w)
        if cs == "1":
            parts.append(body)
        elif cs == "-1":
            parts.append("-" + body)
        else:
            parts.append("%s*%s" % (cs, body))
    return " + ".join(parts).replace("+ -", "- ")


# -- presentations -----------------------------------------------------------

def _terms_to_element(terms, quiver: Quiver, fld: Field, params: Mapping) -> dict:
    if not isinstance(terms, list):
        raise PresentationError("an element must be a list of terms")
    out: dict = {}
    for t in terms:
        if not isinstance(t, dict) or "path" not in t:
            raise PresentationError("term needs a 'path': %r" % (t,))
        unknown = set(t) - {"coeff", "path"}
        if unknown:
            raise PresentationError("unknown term keys %s" % sorted(unknown))
        try:
            c = eval_expr(t.get("coeff", "1"), fld, params)
        except (FieldError, ZeroDivisionError) as exc:
            raise PresentationError(str(exc)) from exc
        p = t["path"]
        if isinstance(p, dict):
            if set(p) != {"vertex"} or str(p["vertex"]) not in quiver.vindex:
                raise PresentationError("bad vertex term %r" % (p,))
            w = quiver.trivial(str(p["vertex"]))
        elif isinstance(p, list):
            w = quiver.word([str(n) for n in p])
        else:
            raise PresentationError("path must be a list of arrows or {vertex: v}")
        out = elem_add(out, {w: c})
    return out


def parse_element(terms, A_or_pres, params: Mapping | None = None) -> dict:
    """Read a term list (presentation syntax) as a path-algebra element."""
    pres = getattr(A_or_pres, "presentation", A_or_pres)
    vals = dict(pres.param_values)
    if params:
        vals.update(params)
    return _terms_to_element(terms, pres.quiver, pres.field, vals)


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    field: Field
    param_values: dict
    relations: tuple
    source: dict = dc_field(repr=False, compare=False)

    def relation_str(self, i: int) -> str:
        return elem_str(self.quiver, self.relations[i])


def _load_json(text):
    if isinstance(text, dict):
        return json.loads(json.dumps(text))
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError("malformed JSON: %s" % exc) from exc


def parse_presentation(text) -> Presentation:
    """Validate a presentation given as JSON text (or an already-loaded dict)."""
    src = _load_json(text)
    if not isinstance(src, dict):
        raise PresentationError("presentation must be a JSON object")
    missing = {"vertices", "arrows", "relations"} - set(src)
    if missing:
        raise PresentationError("missing fields %s" % sorted(missing))
    unknown = set(src) - {"field", "params", "vertices", "arrows", "relations", "name"}
    if unknown:
        raise PresentationError("unknown fields %s" % sorted(unknown))
    try:
        fld = Field.from_json(src.get("field", "rational"))
    except FieldError as exc:
        raise PresentationError(str(exc)) from exc
    if not isinstance(src["vertices"], list) or not src["vertices"]:
        raise PresentationError("vertices must be a nonempty list")
    arrows = []
    for a in src["arrows"]:
        if not isinstance(a, dict) or set(a) != {"name", "from", "to"}:
            raise PresentationError("arrow entries need exactly name, from, to: %r" % (a,))
        arrows.append(Arrow(str(a["name"]), str(a["from"]), str(a["to"])))
    q = Quiver(src["vertices"], arrows)
    values = {}
    for name, spec in (src.get("params") or {}).items():
        if isinstance(spec, dict):
            raw, forb = spec.get("value"), spec.get("forbidden", [])
        else:
            raw, forb = spec, []
        try:
            val = eval_expr(raw, fld, values)
            bad = [eval_expr(f, fld, values) for f in forb]
        except (FieldError, ZeroDivisionError) as exc:
            raise PresentationError("parameter %s: %s" % (name, exc)) from exc
        if any(val == b for b in bad):
            raise PresentationError("parameter %s = %s is forbidden" % (name, raw))
        values[name] = val
    rels = []
    for r in src["relations"]:
        e = _terms_to_element(r, q, fld, values)
        if any(q.is_trivial(w) for w in e):
            raise PresentationError("relations must lie in the arrow ideal (no vertex terms)")
        rels.append(e)
    return Presentation(q, fld, values, tuple(rels), src)


def dump_presentation(p: Presentation) -> str:
    """Canonical JSON text; parse then dump reproduces it byte for byte."""
    return json.dumps(p.source, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- rewriting ---------------------------------------------------------------

def _arrow_weights(q: Quiver, relations) -> list[int]:
    w = [1] * len(q.arrows)
    subst = []
    for r in relations:
        singles = [x for x in r if len(x) == 1]
        if len(singles) == 1 and all(len(x) >= 2 for x in r if x != singles[0]):
            a = singles[0][0]
            others = [x for x in r if x != singles[0]]
            if others and all(a not in x for x in others):
                subst.append((a, others))
    for _ in range(len(q.arrows) + 2):
        changed = False
        for a, others in subst:
            need = 1 + max(sum(w[i] for i in x) for x in others)
            if w[a] < need:
                w[a] = need
                changed = True
        if not changed:
            return w
    # cyclic substitutions: fall back to plain degree-lex
    return [1] * len(q.arrows)


class Rewriter:
    """A reduced-enough Groebner basis for the ideal of a presentation."""

    def __init__(self, p: Presentation, cap: int = DEFAULT_CAP):
        self.quiver = p.quiver
        self.field = p.field
        self.cap = cap
        self.weights = _arrow_weights(p.quiver, p.relations)
        self.rules: dict[Word, dict] = {}
        self._lens: set[int] = set()
        self._complete(p.relations)

    def key(self, w: Word):
        if w[0] < 0:
            return (0, (), w)
        return (sum(self.weights[i] for i in w), w)

    def _tip(self, poly):
        return max(poly, key=self.key)

    def _find(self, w: Word):
        n = len(w)
        for i in range(n):
            for k in self._lens:
                if i + k <= n and w[i:i + k] in self.rules:
                    return i, w[i:i + k]
        return None

    def reduce(self, poly: Mapping) -> dict:
        poly = {w: c for w, c in poly.items() if c != 0}
        done: dict = {}
        while poly:
            w = self._tip(poly)
            c = poly.pop(w)
            hit = None if w[0] < 0 else self._find(w)
            if hit is None:
                done[w] = c
                continue
            i, tip = hit
            a, b = w[:i], w[i + len(tip):]
            for t, d in self.rules[tip].items():
                nw = a + t + b
                s = poly.get(nw, 0) + c * d
                if s == 0:
                    poly.pop(nw, None)
                else:
                    poly[nw] = s
        return done

    def _add_rule(self, poly):
        t = self._tip(poly)
        lc = poly[t]
        tail = {w: -c / lc for w, c in poly.items() if w != t}
        if len(t) > self.cap:
            raise CapExceeded("leading word of length %d exceeds cap %d" % (len(t), self.cap))
        self.rules[t] = tail
        self._lens = {len(k) for k in self.rules}
        return t

    def _components(self, poly):
        parts: dict = {}
        for w, c in poly.items():
            k = (self.quiver.source_index(w), self.quiver.target_index(w))
            parts.setdefault(k, {})[w] = c
        return list(parts.values())

    def _overlaps(self, t: Word):
        """Critical pairs between the new tip t and every rule (both orders)."""
        out = []
        for u in list(self.rules):
            for first, second in ((t, u), (u, t)):
                for k in range(1, min(len(first), len(second))):
                    if first[-k:] == second[:k]:
                        a = first[:-k]
                        b = second[k:]
                        s = elem_add(
                            {x + b: c for x, c in self.rules[first].items()},
                            {a + x: c for x, c in self.rules[second].items()}, -1)
                        out.append((self.key(first + b), s))
        return out

    def _complete(self, relations):
        heap: list = []
        counter = 0

        def push(poly):
            nonlocal counter
            for comp in self._components(poly):
                heapq.heappush(heap, (self.key(self._tip(comp)), counter, comp))
                counter += 1

        for r in relations:
            push(r)
        steps = 0
        while heap:
            steps += 1
            if steps > 200000:
                raise CapExceeded("rewriting completion did not terminate")
            _, _, poly = heapq.heappop(heap)
            poly = self.reduce(poly)
            if not poly:
                continue
            t = self._add_rule(poly)
            # rules whose tip contains t are no longer minimal: re-queue them
            for u in list(self.rules):
                if u != t and len(u) >= len(t) and any(
                        u[i:i + len(t)] == t for i in range(len(u) - len(t) + 1)):
                    tail = self.rules.pop(u)
                    push(elem_add(tail, {u: -1}))
            self._lens = {len(k) for k in self.rules}
            for k, s in self._overlaps(t):
                if s:
                    heapq.heappush(heap, (k, counter, s))
                    counter += 1
        # inter-reduce the tails for a canonical result
        for t in sorted(self.rules, key=self.key):
            self.rules[t] = self.reduce(self.rules[t])

    def is_normal(self, w: Word) -> bool:
        return w[0] < 0 or self._find(w) is None

    def normal_words(self) -> list[Word]:
        q = self.quiver
        out = []
        frontier = [q.trivial(v) for v in q.vertices]
        out.extend(frontier)
        while frontier:
            nxt = []
            for w in frontier:
                t = q.target_index(w)
                for i, a in enumerate(q.arrows):
                    if q._src[i] != t:
                        continue
                    nw = (i,) if w[0] < 0 else w + (i,)
                    if any(nw[-k:] in self.rules for k in self._lens if k <= len(nw)):
                        continue
                    if len(nw) >= self.cap:
                        raise CapExceeded(
                            "normal word of length %d reached the cap %d; the algebra "
                            "is infinite-dimensional or the cap is too small"
                            % (len(nw), self.cap))
                    nxt.append(nw)
            out.extend(nxt)
            frontier = nxt
        return out


# -- finite-dimensional algebras -------------------------------------------

class FDAlgebra:
    """A normalized algebra, or its truncation eAe to a subset of vertices.

    The basis consists of normal words (with both endpoints in the chosen
    vertex subset).  ``table[i][j]`` is the product of basis words i and j as a
    sparse dict index -> scalar.
    """

    def __init__(self, presentation: Presentation, rewriter: Rewriter,
                 vertices: Iterable[str] | None = None):
        self.presentation = presentation
        self.rewriter = rewriter
        self.quiver = q = presentation.quiver
        self.field = presentation.field
        if vertices is None:
            self.vertices = list(q.vertices)
        else:
            chosen = set(vertices)
            bad = chosen - set(q.vertices)
            if bad or not chosen:
                raise PresentationError("unknown or empty vertex selection %s" % sorted(bad))
            self.vertices = [v for v in q.vertices if v in chosen]
        self.truncated = len(self.vertices) != len(q.vertices)
        keep = {q.vindex[v] for v in self.vertices}
        words = [w for w in rewriter.normal_words()
                 if q.source_index(w) in keep and q.target_index(w) in keep]
        words.sort(key=lambda w: (0, ~w[0]) if w[0] < 0 else (1, len(w), w))
        self.basis: list[Word] = words
        self.index = {w: i for i, w in enumerate(words)}
        self.dim = len(words)
        self.src = [q.source(w) for w in words]
        self.tgt = [q.target(w) for w in words]
        self.idempotent_index = {v: self.index[q.trivial(v)] for v in self.vertices}
        self.radical = [i for i, w in enumerate(words) if w[0] >= 0]
        self.table = [[self._word_product(u, v) for v in words] for u in words]
        if self.truncated:
            self.generators = [(q.word_str(self.basis[i]), self.unit(i)) for i in self.radical]
        else:
            self.generators = [(a.name, self.vector({(k,): self.field.one}))
                               for k, a in enumerate(q.arrows)]

    def _word_product(self, u: Word, v: Word) -> dict:
        w = self.quiver.compose(u, v)
        if w is None:
            return {}
        red = self.rewriter.reduce({w: self.field.one})
        return {self.index[x]: c for x, c in red.items()}

    # vectors ------------------------------------------------------------
    def zero(self):
        return [self.field.zero] * self.dim

    def unit(self, i: int):
        v = self.zero()
        v[i] = self.field.one
        return v

    def idempotent(self, v: str):
        return self.unit(self.idempotent_index[v])

    def one(self):
        out = self.zero()
        for i in self.idempotent_index.values():
            out[i] = self.field.one
        return out

    def vector(self, elem: Mapping):
        """Coordinates of a path-algebra element (reduced first)."""
        red = self.rewriter.reduce(elem)
        out = self.zero()
        for w, c in red.items():
            if w not in self.index:
                raise PresentationError(
                    "%s is not supported on the chosen vertices" % self.quiver.word_str(w))
            out[self.index[w]] = c
        return out

    def element(self, vec) -> dict:
        return {self.basis[i]: c for i, c in enumerate(vec) if c != 0}

    def mul_vec(self, x, y):
        out = self.zero()
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k, c in row[j].items():
                    out[k] = out[k] + a * b * c
        return out

    def multiply(self, x: Mapping, y: Mapping) -> dict:
        """Normal form of xy.  Inputs are reduced first, so any paths are accepted."""
        return self.element(self.mul_vec(self.vector(x), self.vector(y)))

    def left_matrix(self, x):
        """Matrix of v -> x v on the basis (columns are images)."""
        cols = [self.mul_vec(x, self.unit(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def basis_str(self, i: int) -> str:
        return self.quiver.word_str(self.basis[i])

    def vec_str(self, vec) -> str:
        return elem_str(self.quiver, self.element(vec))

    def pair_dimension(self, i: str, j: str) -> int:
        """Number of normal words from vertex i to vertex j."""
        return sum(1 for s, t in zip(self.src, self.tgt) if s == i and t == j)

    def truncate(self, vertices: Iterable[str]) -> "FDAlgebra":
        return FDAlgebra(self.presentation, self.rewriter, vertices)

    # invariants ------------------------------------------------------------
    def check_associative(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    left: dict = {}
                    for m, c in ij.items():
                        for r, d in self.table[m][k].items():
                            left[r] = left.get(r, 0) + c * d
                    right: dict = {}
                    for m, c in self.table[j][k].items():
                        for r, d in self.table[i][m].items():
                            right[r] = right.get(r, 0) + c * d
                    keys = set(left) | set(right)
                    if any(left.get(r, 0) != right.get(r, 0) for r in keys):
                        return False
        return True

    def check_idempotents(self) -> bool:
        one = self.one()
        for v, i in self.idempotent_index.items():
            for u, j in self.idempotent_index.items():
                prod = self.mul_vec(self.unit(i), self.unit(j))
                want = self.unit(i) if u == v else self.zero()
                if prod != want:
                    return False
        for k in range(self.dim):
            b = self.unit(k)
            if self.mul_vec(one, b) != b or self.mul_vec(b, one) != b:
                return False
        return True

    def radical_power_dims(self) -> list[int]:
        """dim J^k for k = 1, 2, ... until zero."""
        cur = [self.unit(i) for i in self.radical]
        dims = []
        gens = cur
        while True:
            d = rank(cur, self.dim, self.field) if cur else 0
            dims.append(d)
            if d == 0 or len(dims) > self.dim + 1:
                return dims
            span = Span(self.dim, self.field)
            for x in Span(self.dim, self.field, cur).basis():
                for g in gens:
                    span.add(self.mul_vec(x, g))
            cur = span.basis()

    def check_radical(self) -> bool:
        dims = self.radical_power_dims()
        return dims[-1] == 0 and self.dim - dims[0] == len(self.vertices)


def normalize(p: Presentation, cap: int = DEFAULT_CAP) -> FDAlgebra:
    """Complete the relations of p and return the finite-dimensional algebra."""
    return FDAlgebra(p, Rewriter(p, cap))


def multiply(A: FDAlgebra, x: Mapping, y: Mapping) -> dict:
    return A.multiply(x, y)


# -- anti-automorphisms -------------------------------------------------------

@dataclass
class AntiAutomorphismResult:
    ok: bool
    failing_relation: str | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


class Involution:
    """The anti-homomorphism of the path algebra fixed by a vertex and arrow map."""

    def __init__(self, A: FDAlgebra, vmap: Mapping[str, str], amap: Mapping[str, Mapping]):
        q = A.quiver
        self.A = A
        self.vmap = {str(k): str(v) for k, v in vmap.items()}
        if set(self.vmap) != set(q.vertices) or set(self.vmap.values()) != set(q.vertices):
            raise PresentationError("vertex map must be a permutation of the vertices")
        if set(amap) != set(a.name for a in q.arrows):
            raise PresentationError("arrow map must cover every arrow exactly once")
        self.images = {}
        self.rewriter = A.rewriter
        for a in q.arrows:
            img = self.rewriter.reduce(amap[a.name])
            want_s, want_t = self.vmap[a.target], self.vmap[a.source]
            for w in img:
                if q.source(w) != want_s or q.target(w) != want_t:
                    raise PresentationError(
                        "image of %s must run from %s to %s, found %s" % (
                            a.name, want_s, want_t, q.word_str(w)))
            self.images[q.aindex[a.name]] = img
        self._cache: dict = {}

    def word_image(self, w: Word) -> dict:
        if w in self._cache:
            return self._cache[w]
        q = self.A.quiver
        if w[0] < 0:
            out = {q.trivial(self.vmap[q.vertices[~w[0]]]): self.A.field.one}
        else:
            out = self.images[w[-1]]
            for i in reversed(w[:-1]):
                out = self.rewriter.reduce(elem_concat(q, out, self.images[i]))
        self._cache[w] = out
        return out

    def apply(self, elem: Mapping) -> dict:
        out: dict = {}
        for w, c in elem.items():
            out = elem_add(out, self.word_image(w), c)
        return self.rewriter.reduce(out)

    def apply_vec(self, vec):
        return self.A.vector(self.apply(self.A.element(vec)))


def check_anti_automorphism(A: FDAlgebra, vmap: Mapping[str, str],
                            amap: Mapping[str, Mapping]) -> AntiAutomorphismResult:
    """Does the reversal extension of (vmap, amap) give an involutive anti-automorphism?

    Raises PresentationError when an arrow image is ill-typed.
    """
    inv = Involution(A, vmap, amap)
    q = A.quiver
    red = inv.rewriter
    for k, r in enumerate(A.presentation.relations):
        if red.reduce(inv.apply(r)):
            return AntiAutomorphismResult(False, A.presentation.relation_str(k),
                                          "image of relation is nonzero")
    for v in q.vertices:
        if inv.vmap[inv.vmap[v]] != v:
            return AntiAutomorphismResult(False, None, "vertex map is not an involution at %s" % v)
    for i, a in enumerate(q.arrows):
        back = inv.apply(inv.images[i])
        if back != red.reduce({(i,): A.field.one}):
            return AntiAutomorphismResult(False, None, "iota(iota(%s)) != %s" % (a.name, a.name))
    return AntiAutomorphismResult(True)
