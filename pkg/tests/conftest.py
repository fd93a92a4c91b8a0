import functools
import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from cellar.algebra_core import normalize  # noqa: E402
from cellar.catalog import catalog_build  # noqa: E402
from cellar.cellular import load_cell_datum  # noqa: E402


@functools.lru_cache(maxsize=None)
def _built(name, frozen):
    b = catalog_build(name, dict(frozen))
    return b, normalize(b.presentation)


def build(name, **params):
    """(Built entry, normalized algebra), cached across the session."""
    return _built(name, tuple(sorted(params.items())))


def algebra(name, **params):
    return build(name, **params)[1]


def datum(name, **params):
    b, A = build(name, **params)
    return load_cell_datum(json.loads(json.dumps(b.datum)), A)


# every catalog instance exercised by the sweeps
INSTANCES = [
    ("Kronecker", {}), ("ALocal", {"lam": "1"}), ("ALocal", {"lam": "3"}), ("DB2", {}),
    ("DTS", {"n": 3}), ("DTS", {"n": 4}),
    ("DoubleQuiverCycle", {"l": 3}), ("DoubleQuiverCycle", {"l": 4}),
    ("DoubleQuiverCycle", {"l": 5}), ("DoubleQuiverBranch", {}),
    ("DoubleQuiverLine", {"n": 2}), ("DoubleQuiverLine", {"n": 3}),
    ("LambdaPrimeCycle", {"n": 1}), ("LambdaPrimeCycle", {"n": 2}),
    ("LambdaPrime", {"l": 0, "m": 0}), ("LambdaPrime", {"l": 0, "m": 1}),
    ("LambdaPrime", {"l": 1, "m": 0}), ("LambdaPrime", {"l": 1, "m": 1}),
    ("LambdaPrime", {"l": 1, "m": 2}), ("LambdaPrime", {"l": 2, "m": 2}),
    ("LambdaPrime", {"l": 0, "m": 2}), ("LambdaPrime", {"l": 2, "m": 0}),
    ("GammaZero", {"m": 1}), ("GammaZero", {"m": 2}), ("GammaZero", {"m": 3}),
    ("GammaOne", {}),
    ("GammaTwo", {"l": 1, "m": 2}), ("GammaTwo", {"l": 2, "m": 3}), ("GammaTwo", {"l": 2, "m": 2}),
    ("GammaTwo", {"l": 1, "m": 1}), ("GammaTwo", {"l": 0, "m": 1}), ("GammaTwo", {"l": 0, "m": 2}),
    ("GammaTwo", {"l": -1, "m": 1}), ("GammaTwo", {"l": -1, "m": 2}),
    ("GammaTwoT00", {}), ("GammaTwoTm10", {}),
    ("Omega", {"n": 1}), ("Omega", {"n": 2}), ("Omega", {"n": 3}), ("Omega", {"n": 4}),
    ("A1", {"lam": "2"}), ("A2", {"lam": "2"}), ("A3", {}), ("A4", {}), ("A5", {}), ("A6", {}),
    ("A7", {}), ("A8", {}), ("A9", {}), ("A10", {}), ("A11", {}), ("A12", {}), ("A13", {}),
    ("A14", {}), ("A15", {}), ("A16", {}), ("Lambda1", {}), ("Lambda2", {}),
    ("BrauerLine", {"n": 1}), ("BrauerLine", {"n": 2}), ("BrauerLine", {"n": 3}),
    ("BrauerLine", {"n": 2, "first": 2, "last": 2}),
]

WITH_DATUM = [("Kronecker", {}), ("ALocal", {"lam": "1"}), ("LambdaPrime", {"l": 0, "m": 0}),
              ("LambdaPrime", {"l": 0, "m": 1}), ("LambdaPrime", {"l": 1, "m": 0}),
              ("GammaZero", {"m": 1}), ("GammaTwoT00", {}), ("GammaTwoTm10", {}),
              ("A1", {"lam": "2"}), ("A2", {"lam": "2"}), ("A4", {}), ("A7", {}), ("A11", {})]


def ids(cases):
    return ["%s%s" % (n, "".join("-%s=%s" % kv for kv in sorted(p.items()))) for n, p in cases]


# PASS/FAIL lines from test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
