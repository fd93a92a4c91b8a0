"""Command-line front end.

Every command builds a JSON-ready report; the human output is a rendering of
that report.  Exit codes: 0 computed or verified, 1 verification failed or
NOT-CELLULAR, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import catalog
from .algebra_core import (CapExceeded, DEFAULT_CAP, PresentationError, dump_presentation,
                           normalize, parse_presentation)
from .cellular import DatumError, cell_chain, gram_form, load_cell_datum, verify_datum
from .module_theory import (cartan, ext1_symmetric, gabriel_quiver, is_simple_at, projective,
                            radical_series, socle, top)
from .obstruction import (DEFAULT_TRACE_CAP, NOT_CELLULAR, GramProblem, ResourceCapExceeded,
                          gram_factorizations, necessary_conditions_report, order_consistency)
from .scalars import FieldError


class InputError(ValueError):
    pass


# -- inputs ------------------------------------------------------------------

class Loaded:
    def __init__(self, source: dict, built=None):
        self.source = source
        self.built = built
        self.presentation = parse_presentation(source)

    @property
    def digest(self) -> str:
        return hashlib.sha256(dump_presentation(self.presentation).encode()).hexdigest()


def _params(pairs) -> dict:
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise InputError("--param expects k=v, got %r" % p)
        k, v = p.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def load_input(spec: str, params=None) -> Loaded:
    if spec.startswith("catalog:"):
        built = catalog.catalog_build(spec[len("catalog:"):], params)
        return Loaded(built.source, built)
    if params:
        raise InputError("--param only applies to catalog: inputs")
    try:
        text = Path(spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (spec, exc.strerror)) from exc
    try:
        return Loaded(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s: %s" % (spec, exc)) from exc


def _vertices(arg):
    if not arg:
        return None
    return [v.strip() for v in arg.split(",") if v.strip()]


def _algebra(args, loaded: Loaded):
    A = normalize(loaded.presentation, args.cap)
    vs = _vertices(getattr(args, "vertices", None))
    return A.truncate(vs) if vs else A


def _datum(args, loaded: Loaded, A):
    spec = getattr(args, "datum", None)
    if spec is None:
        return None
    if spec == "bundled":
        if loaded.built is None or loaded.built.datum is None:
            raise InputError("no bundled cell datum for this input")
        return load_cell_datum(loaded.built.datum, A)
    try:
        return load_cell_datum(Path(spec).read_text(encoding="utf-8"), A)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (spec, exc.strerror)) from exc
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s: %s" % (spec, exc)) from exc


def _matrix(text: str, name: str):
    try:
        M = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s is not a JSON matrix: %s" % (name, exc)) from exc
    if (not isinstance(M, list) or not M or not all(isinstance(r, list) for r in M)
            or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0
                       for r in M for x in r)
            or len({len(r) for r in M}) != 1):
        raise InputError("%s must be a rectangular matrix of natural numbers" % name)
    return M


def _self_injective(args, loaded: Loaded | None) -> bool:
    if getattr(args, "self_injective", False):
        return True
    return bool(loaded and loaded.built and loaded.built.self_injective)


# -- commands ------------------------------------------------------------------

def cmd_basis(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    q = A.quiver
    return {"dimension": A.dim, "vertices": A.vertices,
            "basis": [{"word": q.word_str(w), "from": q.source(w), "to": q.target(w)}
                      for w in A.basis]}, 0


def cmd_cartan(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    return {"dimension": A.dim, "vertices": A.vertices, "cartan": cartan(A)}, 0


def cmd_projectives(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    q = A.quiver
    out = []
    for v in A.vertices:
        P = projective(A, v)
        words = [q.word_str(A.basis[k]) for k in range(A.dim) if A.tgt[k] == v]
        out.append({"vertex": v, "dimension": P.dim, "basis": words,
                    "radical_series": radical_series(P), "top": top(P), "socle": socle(P)})
    return {"vertices": A.vertices, "projectives": out}, 0


def cmd_gabriel(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    G = gabriel_quiver(A)
    return {"vertices": A.vertices, "gabriel": G,
            "arrow_count": sum(map(sum, G)), "presented_arrows": len(A.quiver.arrows)}, 0


def cmd_ext_sym(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    sym, witness = ext1_symmetric(A)
    return {"ext1_symmetric": sym, "witness": list(witness) if witness else None,
            "gabriel": gabriel_quiver(A)}, 0 if sym else 1


def cmd_weak_sym(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    rows, ok = [], True
    for v in A.vertices:
        P = projective(A, v)
        t, s = top(P), socle(P)
        good = is_simple_at(t, v) and is_simple_at(s, v)
        ok = ok and good
        rows.append({"vertex": v, "top": t, "socle": s, "passed": good})
    return {"weakly_symmetric": ok, "projectives": rows}, 0 if ok else 1


def cmd_truncate(args):
    if not args.vertices:
        raise InputError("truncate needs --vertices")
    return cmd_cartan(args)


def _cartan_arg(args):
    if args.cartan is not None:
        return _matrix(args.cartan, "--cartan"), None
    if not args.input:
        raise InputError("give an algebra or --cartan")
    loaded = load_input(args.input, _params(args.param))
    return cartan(_algebra(args, loaded)), loaded


def cmd_gram_factor(args):
    C, loaded = _cartan_arg(args)
    try:
        P = GramProblem(C, _self_injective(args, loaded))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    cands = gram_factorizations(P, args.trace_cap)
    return {"cartan": C, "count": len(cands),
            "factorizations": [[list(r) for r in D] for D in cands]}, 0


def cmd_order_check(args):
    si = _self_injective(args, None)
    if args.matrix is not None:
        Ds = [_matrix(args.matrix, "--matrix")]
        C = None
    else:
        C, loaded = _cartan_arg(args)
        si = _self_injective(args, loaded)
        try:
            Ds = [[list(r) for r in D]
                  for D in gram_factorizations(GramProblem(C, si), args.trace_cap)]
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    results = []
    for D in Ds:
        cert = order_consistency(D, si)
        entry = {"candidate": D}
        entry.update(cert.to_json())
        results.append(entry)
    ok = any(r["consistent"] for r in results)
    rep = {"self_injective": si, "candidates": results, "consistent": ok}
    if C is not None:
        rep["cartan"] = C
    return rep, 0 if ok else 1


def cmd_verify_cell(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    if args.datum is None:
        raise InputError("verify-cell needs --datum FILE or --datum bundled")
    d = _datum(args, loaded, A)
    rep = verify_datum(d, chain=False)
    if rep["verified"]:
        rep["gram_ranks"] = {lam: gram_form(d, lam)[1] for lam in d.elements}
    return rep, 0 if rep["verified"] and rep.get("cartan_identity", False) else 1


def cmd_chain(args):
    loaded = load_input(args.input, _params(args.param))
    A = _algebra(args, loaded)
    if args.datum is None:
        raise InputError("chain needs --datum FILE or --datum bundled")
    d = _datum(args, loaded, A)
    ext = [x.strip() for x in args.extension.split(",")] if args.extension else None
    rep = cell_chain(d, ext)
    return {"chain_dims": rep.dims, "chain_ok": rep.ok, "failures": rep.failures}, \
        0 if rep.ok else 1


def cmd_report(args):
    loaded = load_input(args.input, _params(args.param))
    A = normalize(loaded.presentation, args.cap)
    trunc = _vertices(args.vertices)
    if trunc is None and loaded.built is not None:
        trunc = loaded.built.expect.truncation
    datum_spec = args.datum
    if datum_spec is None and loaded.built is not None and loaded.built.datum is not None:
        datum_spec = "bundled"
    args.datum = datum_spec
    d = _datum(args, loaded, A)
    si = _self_injective(args, loaded)
    v = necessary_conditions_report(A, si, d, trunc, args.trace_cap, timings=args.timings)
    rep = {"dimension": A.dim, "cartan": cartan(A), "self_injective": si,
           "truncation": trunc}
    rep.update(v.to_json())
    if not args.timings:
        rep.pop("timings", None)
    if d is not None:
        rep["cell_datum"] = verify_datum(d)
    if loaded.built is not None and loaded.built.expect.note:
        rep["note"] = loaded.built.expect.note
    failed = v.verdict == NOT_CELLULAR or (d is not None and not rep["cell_datum"]["verified"])
    return rep, 1 if failed else 0


def cmd_catalog(args):
    if args.action == "list":
        return {"entries": [{"name": e.name, "summary": e.summary, "params": e.schema(),
                             "self_injective": e.self_injective}
                            for e in catalog.entries()]}, 0
    if not args.name:
        raise InputError("catalog build needs an entry name")
    built = catalog.catalog_build(args.name, _params(args.param))
    text = dump_presentation(built.presentation)
    if args.presentation_out:
        Path(args.presentation_out).write_text(text, encoding="utf-8")
    if args.datum_out:
        if built.datum is None:
            raise InputError("%s has no bundled cell datum" % built.name)
        Path(args.datum_out).write_text(
            json.dumps(built.datum, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    ex = built.expect
    rep = {"name": built.name, "params": built.params, "self_injective": built.self_injective,
           "has_datum": built.datum is not None,
           "expected": {"dimension": ex.dimension, "cartan": ex.cartan,
                        "truncation": ex.truncation, "truncated_cartan": ex.truncated_cartan,
                        "candidates": ex.candidates, "verdict": ex.verdict, "note": ex.note}}
    if not args.presentation_out:
        rep["presentation"] = built.source
    return rep, 0


COMMANDS = {
    "basis": cmd_basis, "cartan": cmd_cartan, "projectives": cmd_projectives,
    "gabriel": cmd_gabriel, "ext-sym": cmd_ext_sym, "weak-sym": cmd_weak_sym,
    "truncate": cmd_truncate, "gram-factor": cmd_gram_factor, "order-check": cmd_order_check,
    "verify-cell": cmd_verify_cell, "chain": cmd_chain, "report": cmd_report,
    "catalog": cmd_catalog,
}


# -- parsing and rendering -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("--out", help="also write the JSON report to FILE")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="rewriting length cap")
    common.add_argument("--trace-cap", type=int, default=DEFAULT_TRACE_CAP,
                        help="largest Cartan trace the factorization search accepts")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")
    common.add_argument("--param", action="append", metavar="K=V",
                        help="catalog parameter (repeatable)")

    algebra = _Parser(add_help=False)
    algebra.add_argument("input", help="presentation file or catalog:NAME")
    algebra.add_argument("--vertices", help="truncate to these vertices, comma separated")

    p = _Parser(prog="cellar", description="Exact computations with bound quiver algebras "
                "and cellular structures.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("basis", "cartan", "projectives", "gabriel", "ext-sym", "weak-sym", "truncate"):
        sub.add_parser(name, parents=[common, algebra])
    for name in ("gram-factor", "order-check"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("input", nargs="?", help="presentation file or catalog:NAME")
        s.add_argument("--vertices")
        s.add_argument("--cartan", help="inline Cartan matrix as JSON")
        s.add_argument("--self-injective", action="store_true")
        if name == "order-check":
            s.add_argument("--matrix", help="inline decomposition matrix as JSON")
    for name in ("verify-cell", "chain", "report"):
        s = sub.add_parser(name, parents=[common, algebra])
        s.add_argument("--datum", help="cell datum file, or 'bundled'")
        if name == "chain":
            s.add_argument("--extension", help="linear extension, smallest first")
        if name == "report":
            s.add_argument("--self-injective", action="store_true")
    s = sub.add_parser("catalog", parents=[common])
    s.add_argument("action", choices=["list", "build"])
    s.add_argument("name", nargs="?")
    s.add_argument("--presentation-out", dest="presentation_out", metavar="FILE",
                   help="write the presentation file")
    s.add_argument("--datum-out", help="write the bundled cell datum")
    return p


def render(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append("%s%s:" % (pad, k))
                lines.append(render(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, _inline(v)))
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append("%s-" % pad)
                lines.append(render(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, _inline(v)))
    else:
        lines.append(pad + _inline(obj))
    return "\n".join(lines)


def _flat(v) -> bool:
    """Short lists of scalars or of scalar lists (matrices) print on one line."""
    if isinstance(v, list):
        return all(not isinstance(x, dict) and (not isinstance(x, list) or _flat(x)) for x in v)
    return False


def _inline(v) -> str:
    return json.dumps(v, sort_keys=True, ensure_ascii=False)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(argv=None) -> tuple[int, dict]:
    """Execute one command; returns (exit code, report)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    report: dict = {"command": argv}
    code = 0
    args = None
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "command", None) == "catalog" and args.action == "build" and args.out \
                and not args.presentation_out:
            # for catalog build, --out names the presentation file
            args.presentation_out, args.out = args.out, None
        t0 = time.perf_counter()
        results, code = COMMANDS[args.command](args)
        report["results"] = results
        if args.timings:
            report["timing"] = round(time.perf_counter() - t0, 6)
    except (InputError, PresentationError, DatumError, catalog.CatalogError, FieldError,
            ZeroDivisionError) as exc:
        report["error"] = {"reason": "input_error", "message": str(exc)}
        code = 2
    except (CapExceeded, ResourceCapExceeded) as exc:
        report["error"] = {"reason": "resource_cap", "message": str(exc)}
        code = 3
    report["exit_code"] = code
    if code != 2 and getattr(args, "input", None):
        report["input_digest"] = load_input(args.input, _params(args.param)).digest
    report["_out"] = getattr(args, "out", None)
    return code, report


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    code, report = run(argv)
    out = report.pop("_out", None)
    as_json = "--json" in argv
    text = dumps(report) if as_json else render(report) + "\n"
    stream = sys.stderr if code == 2 and not as_json else sys.stdout
    stream.write(text)
    if out:
        try:
            Path(out).write_text(dumps(report), encoding="utf-8")
        except OSError as exc:
            sys.stderr.write("cannot write %s: %s\n" % (out, exc.strerror))
            return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
