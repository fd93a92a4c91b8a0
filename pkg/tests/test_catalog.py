import pytest

from cellar.algebra_core import CapExceeded, normalize, parse_presentation
from cellar.catalog import (BrauerGraph, CatalogError, brauer_dimension, brauer_graph_algebra,
                            catalog_build, entries, get_entry, line_graph)
from cellar.module_theory import cartan, weakly_symmetric
from cellar.obstruction import GramProblem, gram_factorizations, necessary_conditions_report

from conftest import INSTANCES, build, datum, ids
from oracles import stable_cartan


# -- metadata sweep -------------------------------------------------------------------

@pytest.mark.parametrize("name,params", INSTANCES, ids=ids(INSTANCES))
def test_entry_matches_its_metadata(name, params):
    b, A = build(name, **params)
    ex = b.expect
    if ex.dimension is not None:
        assert A.dim == ex.dimension
    C = cartan(A)
    if ex.cartan is not None:
        assert C == ex.cartan
    if b.self_injective:
        assert weakly_symmetric(A)
    target = C
    if ex.truncation:
        target = cartan(A.truncate(ex.truncation))
        assert target == ex.truncated_cartan
    if ex.candidates is not None:
        got = [[list(r) for r in D]
               for D in gram_factorizations(GramProblem(target, b.self_injective))]
        assert got == ex.candidates
    d = datum(name, **params) if b.datum else None
    v = necessary_conditions_report(A, b.self_injective, d, ex.truncation)
    if ex.verdict is not None:
        assert v.verdict == ex.verdict


def test_every_entry_has_a_schema_and_builds_with_defaults():
    for e in entries():
        assert e.summary
        schema = e.schema()
        assert all(set(s) == {"kind", "default", "doc"} for s in schema.values())
        if e.name == "DoubleQuiverLine":
            continue
        assert catalog_build(e.name).source["vertices"]


def test_single_arrow_double_quiver_is_infinite():
    b = catalog_build("DoubleQuiverLine", {"n": 1})
    with pytest.raises(CapExceeded):
        normalize(b.presentation)


def test_aliases():
    assert get_entry("A(lambda)").name == "ALocal"
    assert get_entry("Lambda'").name == "LambdaPrime"
    assert catalog_build("A(lambda)", {"lam": "1"}).expect.dimension == 4


def test_kronecker_is_the_lambda_one_local_algebra():
    assert cartan(build("ALocal", lam="1")[1]) == cartan(build("Kronecker")[1]) == [[4]]


def test_unknown_name_and_bad_params():
    with pytest.raises(CatalogError):
        catalog_build("A17")
    with pytest.raises(CatalogError):
        catalog_build("Omega", {"n": 0})
    with pytest.raises(CatalogError):
        catalog_build("Omega", {"n": "two"})
    with pytest.raises(CatalogError):
        catalog_build("A7", {"lam": "2"})
    with pytest.raises(CatalogError):
        catalog_build("LambdaPrime", {"l": -1, "m": 0})


def test_lambda1_over_f3():
    b, A = build("Lambda1")
    assert A.field.prime == 3
    assert cartan(A) == [[5, 3], [3, 3]]


def test_gamma_two_l1_corner():
    b, A = build("GammaTwo", l=1, m=2)
    assert cartan(A.truncate(b.expect.truncation)) == [[2, 1, 0, 0], [1, 2, 1, 1],
                                                      [0, 1, 2, 0], [0, 1, 0, 3]]


@pytest.mark.parametrize("l,m", [(0, 1), (0, 2), (1, 2)])
def test_lambda_prime_is_symmetric_in_its_arms(l, m):
    A, B = build("LambdaPrime", l=l, m=m)[1], build("LambdaPrime", l=m, m=l)[1]
    assert A.dim == B.dim
    CA, CB = cartan(A), cartan(B)
    # the mirror relabels vertex k as -k
    ia = {v: i for i, v in enumerate(A.vertices)}
    ib = {v: i for i, v in enumerate(B.vertices)}

    def neg(v):
        return str(-int(v))

    assert all(CA[ia[u]][ia[w]] == CB[ib[neg(u)]][ib[neg(w)]] for u in ia for w in ia)


def test_catalog_cartans_match_path_enumeration_oracle():
    for name, params in [("DB2", {}), ("A4", {}), ("GammaOne", {}), ("Lambda2", {}),
                         ("LambdaPrime", {"l": 1, "m": 1}), ("BrauerLine", {"n": 3})]:
        b, A = build(name, **params)
        assert cartan(A) == stable_cartan(b.source), name


# -- Brauer graphs -----------------------------------------------------------------------

def test_brauer_line_two_edges():
    G = line_graph(2)
    src = brauer_graph_algebra(G)
    A = normalize(parse_presentation(src))
    assert A.dim == 6 == brauer_dimension(G)
    assert cartan(A) == [[2, 1], [1, 2]] == stable_cartan(src)


def test_brauer_single_edge_degenerates():
    A = normalize(parse_presentation(brauer_graph_algebra(line_graph(1))))
    assert A.dim == 2 and cartan(A) == [[2]]


def test_brauer_line_with_two_exceptional_ends():
    G = line_graph(2, 2, 2)
    A = normalize(parse_presentation(brauer_graph_algebra(G)))
    assert A.dim == brauer_dimension(G) == 8
    assert cartan(A) == [[3, 1], [1, 3]]
    assert weakly_symmetric(A)


def test_brauer_star_with_loop_free_centre():
    G = BrauerGraph({"c": 1, "x": 1, "y": 1, "z": 1},
                    {"1": ("c", "x"), "2": ("c", "y"), "3": ("c", "z")},
                    {"c": ["1", "2", "3"], "x": ["1"], "y": ["2"], "z": ["3"]})
    src = brauer_graph_algebra(G)
    A = normalize(parse_presentation(src))
    assert A.dim == brauer_dimension(G) == 12
    assert cartan(A) == stable_cartan(src) == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]


@pytest.mark.parametrize("G", [
    BrauerGraph({}, {}, {}),
    BrauerGraph({"u": 0, "v": 1}, {"1": ("u", "v")}, {"u": ["1"], "v": ["1"]}),
    BrauerGraph({"u": 1, "v": 1}, {"1": ("u", "v")}, {"u": ["1"]}),
    BrauerGraph({"u": 1, "v": 1}, {"1": ("u", "v")}, {"u": ["1", "1"], "v": ["1"]}),
    BrauerGraph({"u": 1, "v": 1, "w": 1, "x": 1}, {"1": ("u", "v"), "2": ("w", "x")},
                {"u": ["1"], "v": ["1"], "w": ["2"], "x": ["2"]}),
    BrauerGraph({"u": 1, "v": 1}, {"1": ("u", "v"), "2": ("u", "v"), "3": ("u", "v")},
                {"u": ["1", "2", "3"], "v": ["1", "2", "3"]}),
], ids=["empty", "zero-mult", "missing-order", "bad-ends", "disconnected", "two-cycles"])
def test_invalid_brauer_graphs(G):
    with pytest.raises(CatalogError):
        G.validate()
