import copy
import json

import pytest

from cellar.catalog import elem
from cellar.cellular import (DatumError, cell_chain, decomposition_matrix, gram_form,
                             lambda_plus, load_cell_datum, verify_C1, verify_C2, verify_C3,
                             verify_datum)
from cellar.linalg import int_det
from cellar.module_theory import cartan

from conftest import WITH_DATUM, build, datum, ids
from oracles import stable_cartan


def _raw(name, **params):
    return copy.deepcopy(build(name, **params)[0].datum)


def _load(raw, name, **params):
    return load_cell_datum(json.dumps(raw), build(name, **params)[1])


# -- loading ---------------------------------------------------------------------

def test_kronecker_datum_loads():
    d = datum("Kronecker")
    assert d.elements == ["l1", "l2", "l3", "l4"]
    assert d.minimal() == ["l1"] and d.maximal() == ["l4"]


def test_a4_tableau_sizes():
    d = datum("A4")
    assert [d.tableaux[x] for x in d.elements] == [1, 2, 3, 3, 2, 1]
    assert sum(n * n for n in d.tableaux.values()) == 28 == d.algebra.dim


def test_wrong_sizes_rejected():
    raw = _raw("Kronecker")
    raw["tableaux"]["l4"] = 2
    raw["basis"]["l4"] = [[elem("X*Y"), elem("X*Y")], [elem("X*Y"), elem("X*Y")]]
    with pytest.raises(DatumError):
        _load(raw, "Kronecker")


def test_cyclic_order_rejected():
    raw = _raw("Kronecker")
    raw["poset"]["strict_pairs"].append(["l4", "l1"])
    with pytest.raises(DatumError):
        _load(raw, "Kronecker")


# -- axioms -----------------------------------------------------------------------

def test_c1_examples():
    assert verify_C1(datum("Kronecker"))
    assert verify_C1(datum("LambdaPrime", l=0, m=1))
    raw = _raw("Kronecker")
    raw["basis"]["l3"] = raw["basis"]["l2"]
    assert not verify_C1(_load(raw, "Kronecker"))


def test_c2_examples():
    assert verify_C2(datum("GammaZero", m=1))
    assert verify_C2(datum("A2", lam="2"))
    raw = _raw("A2", lam="2")
    block = raw["basis"]["l3"]
    # iota(sigma) = gamma, so sigma may not sit on the diagonal
    block[0][0], block[0][1] = block[0][1], block[0][0]
    assert not verify_C2(_load(raw, "A2", lam="2"))


def test_c3_examples():
    assert verify_C3(datum("LambdaPrime", l=0, m=1)).ok
    assert verify_C3(datum("A7")).ok


def test_c3_fails_when_top_cell_moved_to_bottom():
    raw = _raw("Kronecker")
    raw["poset"]["strict_pairs"] = [["l4", "l1"], ["l1", "l2"], ["l2", "l3"]]
    res = verify_C3(_load(raw, "Kronecker"))
    assert not res.ok
    assert res.counterexample["lambda"] in ("l2", "l3")
    assert res.counterexample["a"] in ("X", "Y")


# -- Gram forms, Lambda+, decomposition ---------------------------------------------------

def test_kronecker_gram_forms():
    d = datum("Kronecker")
    assert lambda_plus(d) == ["l1"]
    assert gram_form(d, "l1") == ([[1]], 1)
    for lam in ("l2", "l3", "l4"):
        assert gram_form(d, lam) == ([[0]], 0)


def test_a1_has_three_simples():
    assert len(lambda_plus(datum("A1", lam="2"))) == 3


def test_kronecker_decomposition_matrix():
    D = decomposition_matrix(datum("Kronecker"))
    assert D.matrix == [[1], [1], [1], [1]]
    assert D.gram() == [[4]]


def test_lambda_prime_0_1_identity_against_oracle():
    b, A = build("LambdaPrime", l=0, m=1)
    d = datum("LambdaPrime", l=0, m=1)
    arrows = {a["name"]: a for a in b.source["arrows"]}
    vs = list(A.vertices)
    rows = []
    for lam in d.elements:
        dv = dict.fromkeys(vs, 0)
        for row in b.datum["basis"][lam]:
            path = row[0][0]["path"]
            start = path["vertex"] if isinstance(path, dict) else arrows[path[0]]["from"]
            dv[start] += 1
        rows.append([dv[v] for v in vs])
    C = stable_cartan(b.source)
    assert [[sum(r[i] * r[j] for r in rows) for j in range(len(vs))]
            for i in range(len(vs))] == C
    D = decomposition_matrix(d)
    assert sorted(D.matrix) == sorted(rows)


def test_chain_kronecker():
    rep = cell_chain(datum("Kronecker"), ["l1", "l2", "l3", "l4"])
    assert rep.ok and rep.dims == [4, 3, 2, 1]


def test_chain_gamma_two_t00():
    rep = cell_chain(datum("GammaTwoT00"))
    assert rep.ok, rep.failures


def test_chain_rejects_non_extension():
    with pytest.raises(DatumError):
        cell_chain(datum("Kronecker"), ["l2", "l1", "l3", "l4"])


# -- invariants over all bundled data -----------------------------------------------------

@pytest.mark.parametrize("name,params", WITH_DATUM, ids=ids(WITH_DATUM))
def test_bundled_datum_verifies(name, params):
    d = datum(name, **params)
    rep = verify_datum(d)
    assert rep["verified"] and rep["cartan_identity"] and rep["chain_ok"]
    assert rep["det_DtD"] > 0
    assert len(rep["lambda_plus"]) == len(d.algebra.vertices)
    D = rep["decomposition_matrix"]
    rows = dict(zip(d.elements, D))
    for j, mu in enumerate(rep["lambda_plus"]):
        assert rows[mu][j] == 1
    for lam in d.minimal():
        assert lam in rep["lambda_plus"]
        assert sorted(rows[lam]) == [0] * (len(rows[lam]) - 1) + [1]
    for lam in d.maximal():
        assert sorted(rows[lam]) == [0] * (len(rows[lam]) - 1) + [1]
    assert rep["chain_dims"][-1] == d.tableaux[d.maximal()[0]] ** 2
    assert int_det(cartan(d.algebra)) == rep["det_DtD"]


@pytest.mark.parametrize("name,params", [("A7", {}), ("GammaZero", {"m": 1}),
                                         ("LambdaPrime", {"l": 0, "m": 1})])
def test_moving_an_entry_between_cells_breaks_the_datum(name, params):
    base = _raw(name, **params)
    names = base["poset"]["elements"]
    for i in range(len(names) - 1):
        raw = copy.deepcopy(base)
        a, b = raw["basis"][names[i]], raw["basis"][names[i + 1]]
        a[0][0], b[0][0] = b[0][0], a[0][0]
        try:
            d = _load(raw, name, **params)
        except DatumError:
            continue
        assert not (verify_C1(d) and verify_C3(d).ok), (names[i], names[i + 1])
