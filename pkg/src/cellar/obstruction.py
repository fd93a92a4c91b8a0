"""Necessary conditions for cellularity and the search behind them.

For a cellular algebra the Cartan matrix factors as C = D^T D with D a
natural matrix whose rows are indexed by the poset and whose columns are
indexed by Lambda+.  ``gram_factorizations`` enumerates every such D up to
row order, and ``order_consistency`` asks whether some poset is compatible
with a candidate.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Sequence

from .algebra_core import FDAlgebra
from .cellular import CellDatum, verify_datum
from .linalg import int_det
from .module_theory import cartan, ext1_symmetric, weakly_symmetric

DEFAULT_TRACE_CAP = 24

NOT_CELLULAR = "NOT-CELLULAR"
UNDECIDED = "UNDECIDED"
CELLULAR_VERIFIED = "CELLULAR-VERIFIED"


class ResourceCapExceeded(RuntimeError):
    pass


def _check_cartan(C: Sequence[Sequence[int]]):
    n = len(C)
    if n == 0 or any(len(r) != n for r in C):
        raise ValueError("Cartan matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            x = C[i][j]
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError("Cartan entries must be natural numbers")
            if C[j][i] != x:
                raise ValueError("Cartan matrix must be symmetric")
        if C[i][i] < 1:
            raise ValueError("Cartan diagonal entries must be at least 1")


@dataclass(frozen=True)
class GramProblem:
    cartan: tuple
    self_injective: bool = False

    def __init__(self, C, self_injective: bool = False):
        _check_cartan(C)
        object.__setattr__(self, "cartan", tuple(tuple(r) for r in C))
        object.__setattr__(self, "self_injective", self_injective)

    @property
    def trace(self) -> int:
        return sum(self.cartan[i][i] for i in range(len(self.cartan)))


def _rows_under(R, bound, n, lead=0):
    """Nonzero rows r with r_i r_j <= R_ij, lexicographically <= bound, largest first.

    Coordinate ``lead`` is forced nonzero.
    """
    out = []
    r = [0] * n

    def rec(i, tight):
        if i == n:
            if any(r):
                out.append(tuple(r))
            return
        hi = math.isqrt(R[i][i])
        if tight:
            hi = min(hi, bound[i])
        for x in range(hi, 0 if i == lead else -1, -1):
            if x and any(x * r[j] > R[i][j] for j in range(i)):
                continue
            r[i] = x
            rec(i + 1, tight and x == bound[i])
        r[i] = 0

    rec(0, True)
    return out


def gram_factorizations(P, trace_cap: int | None = DEFAULT_TRACE_CAP) -> list[tuple]:
    """All natural D with D^T D = C, rows in nonincreasing lex order.

    Candidates without a 1 in some column are dropped (d_{mu mu} = 1 on
    Lambda+).  Raises ResourceCapExceeded when trace(C) exceeds ``trace_cap``.
    """
    if not isinstance(P, GramProblem):
        P = GramProblem(P)
    C = [list(r) for r in P.cartan]
    n = len(C)
    if trace_cap is not None and P.trace > trace_cap:
        raise ResourceCapExceeded("trace(C) = %d exceeds the cap %d" % (P.trace, trace_cap))
    found = []
    rows: list[tuple] = []

    def rec(R, bound):
        open_ = [i for i in range(n) if R[i][i]]
        if not open_:
            if all(R[i][j] == 0 for i in range(n) for j in range(n)):
                found.append(tuple(rows))
            return
        # later rows are lex smaller, so only this row can still reach the
        # first coordinate with diagonal left
        for r in _rows_under(R, bound, n, open_[0]):
            R2 = [[R[i][j] - r[i] * r[j] for j in range(n)] for i in range(n)]
            # what is left must again be a Gram matrix (Cauchy-Schwarz)
            if any(R2[i][j] * R2[i][j] > R2[i][i] * R2[j][j]
                   for i in range(n) for j in range(i)):
                continue
            rows.append(r)
            rec(R2, r)
            rows.pop()

    rec(C, tuple(math.isqrt(C[i][i]) for i in range(n)))
    good = [D for D in found if all(any(row[j] == 1 for row in D) for j in range(n))]
    assert all(len(D) <= P.trace for D in good)
    return sorted(set(good), reverse=True)


def gram(D) -> list[list[int]]:
    n = len(D[0]) if D else 0
    return [[sum(r[i] * r[j] for r in D) for j in range(n)] for i in range(n)]


@dataclass
class OrderCertificate:
    consistent: bool
    phi: tuple | None = None
    forced: list = field(default_factory=list)
    chain: list | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "phi": list(self.phi) if self.phi is not None else None,
            "forced": [list(p) for p in self.forced],
            "chain": self.chain,
            "reason": self.reason,
        }


def _unit_row(row) -> bool:
    nz = [x for x in row if x]
    return len(nz) == 1 and nz[0] == 1


def _topo(nodes, edges):
    """Deterministic topological order (smallest index first), or None on a cycle."""
    nodes = list(nodes)
    indeg = {v: 0 for v in nodes}
    for a, b in edges:
        if a in indeg and b in indeg:
            indeg[b] += 1
    order = []
    ready = sorted(v for v in nodes if indeg[v] == 0)
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a, b in edges:
            if a == v and b in indeg:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
                    ready.sort()
    return order if len(order) == len(nodes) else None


def _check_phi(D, phi, self_injective):
    k = len(D)
    n = len(D[0])
    edges = set()
    for mu in range(n):
        for lam in range(k):
            if lam != phi[mu] and D[lam][mu]:
                edges.add((phi[mu], lam))
    edges = sorted(edges)
    if _topo(range(k), edges) is None:
        return None, edges, "forced relations contain a directed cycle"
    has_below = {b for _, b in edges}
    has_above = {a for a, _ in edges}
    bottoms = [r for r in range(k) if _unit_row(D[r]) and r not in has_below]
    if not bottoms:
        return None, edges, "no unit row can be minimal"
    tops = [None]
    if self_injective:
        tops = [r for r in range(k) if _unit_row(D[r]) and r not in has_above]
        if not tops:
            return None, edges, "no unit row can be maximal"
    for b in bottoms:
        for t in tops:
            if t is not None and t == b and k > 1:
                continue
            rest = [r for r in range(k) if r != b and r != t]
            mid = _topo(rest, edges)
            if mid is None:
                continue
            chain = [b] + mid + ([t] if t is not None and t != b else [])
            pos = {r: i for i, r in enumerate(chain)}
            if all(pos[x] < pos[y] for x, y in edges):
                return chain, edges, "consistent"
    return None, edges, "minimal and maximal unit rows cannot be distinct"


def order_consistency(D, self_injective: bool = False) -> OrderCertificate:
    """Search for a column assignment phi and a total order compatible with D.

    Row indices in the returned certificate are 0-based.
    """
    D = [tuple(r) for r in D]
    k = len(D)
    n = len(D[0])
    choices = [[r for r in range(k) if D[r][mu] == 1] for mu in range(n)]
    reasons: dict[str, int] = {}
    first = None
    for phi in itertools.product(*choices):
        if len(set(phi)) != n:
            continue
        chain, edges, why = _check_phi(D, phi, self_injective)
        if chain is not None:
            return OrderCertificate(True, tuple(phi), edges, chain, "consistent")
        reasons[why] = reasons.get(why, 0) + 1
        if first is None:
            first = (phi, edges)
    if first is None:
        return OrderCertificate(False, None, [], None, "no injective assignment of columns to unit entries")
    if len(reasons) == 1:
        why = next(iter(reasons))
        reason = "every assignment fails: " + why
    else:
        reason = "every assignment fails: " + "; ".join(
            "%s (%d)" % (w, c) for w, c in sorted(reasons.items()))
    return OrderCertificate(False, tuple(first[0]), first[1], None, reason)


def recheck_certificate(D, cert: OrderCertificate, self_injective: bool) -> bool:
    """Independently confirm a consistent certificate."""
    if not cert.consistent:
        return False
    k, n = len(D), len(D[0])
    phi, chain = cert.phi, cert.chain
    if len(set(phi)) != n or any(D[phi[mu]][mu] != 1 for mu in range(n)):
        return False
    if sorted(chain) != list(range(k)):
        return False
    pos = {r: i for i, r in enumerate(chain)}
    for mu in range(n):
        for lam in range(k):
            if D[lam][mu] and lam != phi[mu] and pos[lam] <= pos[phi[mu]]:
                return False
    if not _unit_row(D[chain[0]]):
        return False
    if self_injective and not _unit_row(D[chain[-1]]):
        return False
    return k == 1 or not self_injective or chain[0] != chain[-1]


@dataclass
class Verdict:
    verdict: str
    certificates: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "certificates": self.certificates,
                "timings": self.timings}


def analyse_cartan(C, self_injective: bool = False,
                   trace_cap: int | None = DEFAULT_TRACE_CAP, label: str = "") -> tuple[bool, list]:
    """Factorization and order stage on a bare Cartan matrix.

    Returns (refuted?, certificates).
    """
    certs = []
    det = int_det(C)
    certs.append({"check": "det_positive", "target": label, "passed": det > 0, "det": det})
    if det <= 0:
        return True, certs
    cands = gram_factorizations(GramProblem(C, self_injective), trace_cap)
    certs.append({"check": "gram_factorizations", "target": label, "passed": bool(cands),
                  "cartan": [list(r) for r in C],
                  "candidates": [[list(r) for r in D] for D in cands]})
    if not cands:
        return True, certs
    refuted = True
    for D in cands:
        cert = order_consistency(D, self_injective)
        entry = {"check": "order_consistency", "target": label, "passed": cert.consistent,
                 "candidate": [list(r) for r in D]}
        entry.update(cert.to_json())
        certs.append(entry)
        if cert.consistent:
            refuted = False
    if refuted:
        certs.append({"check": "order_consistency", "target": label, "passed": False,
                      "reason": "order_consistency refuted %s" % (
                          "both candidates" if len(cands) == 2 else
                          "the candidate" if len(cands) == 1 else
                          "all %d candidates" % len(cands))})
    return refuted, certs


def necessary_conditions_report(A: FDAlgebra, self_injective: bool = False,
                                datum: CellDatum | None = None,
                                truncation: Sequence[str] | None = None,
                                trace_cap: int | None = DEFAULT_TRACE_CAP,
                                timings: bool = False) -> Verdict:
    """Run the necessary conditions; NOT-CELLULAR on the first failure.

    When ``truncation`` is given the factorization stage runs on eAe for the
    idempotent e of those vertices (a cellular algebra with an iota-fixed
    idempotent has cellular eAe).  A bundled datum that verifies upgrades
    UNDECIDED to CELLULAR-VERIFIED.
    """
    clock = {}
    t0 = time.perf_counter()
    certs: list = []
    failed = None
    C = cartan(A)
    det = int_det(C)
    certs.append({"check": "det_positive", "target": "A", "passed": det > 0, "det": det,
                  "cartan": C})
    if det <= 0:
        failed = "det_positive"
    if failed is None:
        sym, witness = ext1_symmetric(A)
        certs.append({"check": "ext1_symmetric", "target": "A", "passed": sym,
                      "witness": list(witness) if witness else None})
        if not sym:
            failed = "ext1_symmetric"
    if failed is None and self_injective:
        ws = weakly_symmetric(A)
        certs.append({"check": "weakly_symmetric", "target": "A", "passed": ws})
        if not ws:
            failed = "weakly_symmetric"
    clock["structure"] = time.perf_counter() - t0
    if failed is None:
        t1 = time.perf_counter()
        if truncation:
            B = A.truncate(truncation)
            label = "eAe[%s]" % ",".join(B.vertices)
        else:
            B, label = A, "A"
        refuted, more = analyse_cartan(cartan(B), self_injective, trace_cap, label)
        certs.extend(more)
        if refuted:
            failed = more[-1]["check"]
        clock["factorization"] = time.perf_counter() - t1
    verdict = NOT_CELLULAR if failed else UNDECIDED
    if datum is not None:
        t2 = time.perf_counter()
        rep = verify_datum(datum)
        certs.append({"check": "cell_datum", "target": "A", "passed": rep["verified"],
                      "C1": rep["C1"], "C2": rep["C2"], "C3": rep["C3"]})
        if rep["verified"]:
            if verdict == NOT_CELLULAR:
                certs.append({"check": "consistency", "passed": False,
                              "reason": "a verified datum contradicts a failed necessary condition"})
            verdict = CELLULAR_VERIFIED
        clock["datum"] = time.perf_counter() - t2
    return Verdict(verdict, certs, {k: round(v, 6) for k, v in clock.items()} if timings else {})
