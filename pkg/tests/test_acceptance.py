"""One PASS/FAIL line per acceptance criterion; all comparisons are exact."""

import pytest

from cellar.cellular import decomposition_matrix, lambda_plus, verify_datum
from cellar.module_theory import cartan
from cellar.obstruction import (CELLULAR_VERIFIED, NOT_CELLULAR, UNDECIDED, GramProblem,
                                gram, gram_factorizations, necessary_conditions_report,
                                order_consistency)

import test_properties as props
from conftest import ACCEPTANCE_LINES, INSTANCES, WITH_DATUM, build, datum

BRANCH = [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 2]]
D_44 = [[1, 1], [1, 1], [1, 0], [1, 0]]
D_4x3 = [[1, 1, 1], [1, 1, 0], [0, 1, 1], [0, 1, 0]]


class Checks:
    def __init__(self, number):
        self.number = number
        self.failed = []

    def __call__(self, label, ok):
        if not ok:
            self.failed.append(label)

    def finish(self):
        ok = not self.failed
        line = "criterion %2d: %s" % (self.number, "PASS" if ok else "FAIL")
        if not ok:
            line += "  [" + "; ".join(self.failed) + "]"
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert ok, line


def _cands(C, si=True):
    return [[list(r) for r in D] for D in gram_factorizations(GramProblem(C, si))]


def _verdict(name, with_datum=False, **params):
    b, A = build(name, **params)
    d = datum(name, **params) if with_datum else None
    return necessary_conditions_report(A, b.self_injective, d, b.expect.truncation)


def _truncated(name, **params):
    b, A = build(name, **params)
    return cartan(A.truncate(b.expect.truncation))


def _verifies(name, **params):
    return verify_datum(datum(name, **params))["verified"]


def test_criterion_1():
    c = Checks(1)
    A = build("DB2")[1]
    c("dim 10", A.dim == 10)
    c("Cartan", cartan(A) == [[4, 2], [2, 2]])
    c("unique D", _cands(cartan(A)) == [D_44])
    c.finish()


@pytest.mark.xfail(strict=True, reason="the 3-cycle Cartan matrix has a second factorization "
                   "that passes every order condition; see the decisions ledger")
def test_criterion_2():
    c = Checks(2)
    for l in (3, 5):
        C = cartan(build("DoubleQuiverCycle", l=l)[1])
        cands = _cands(C)
        c("l=%d has factorizations" % l, bool(cands))
        c("l=%d every candidate refuted" % l,
          all(not order_consistency(D, True).consistent for D in cands))
    C = cartan(build("DoubleQuiverBranch")[1])
    c("branch Cartan", C == BRANCH)
    c("branch has no factorization", _cands(C) == [])
    c.finish()


def test_criterion_2_attainable_parts():
    # the l = 5 cycle and the branch behave as stated; only l = 3 does not
    cands = _cands(cartan(build("DoubleQuiverCycle", l=5)[1]))
    assert len(cands) == 1
    assert not order_consistency(cands[0], True).consistent
    assert _cands(BRANCH) == []
    three = _cands(cartan(build("DoubleQuiverCycle", l=3)[1]))
    consistent = [D for D in three if order_consistency(D, True).consistent]
    assert consistent == [[[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]]]


def test_criterion_3():
    c = Checks(3)
    d = datum("Kronecker")
    c("datum verifies", verify_datum(d)["verified"])
    c("Lambda+ singleton", len(lambda_plus(d)) == 1)
    D = decomposition_matrix(d)
    c("D", D.matrix == [[1], [1], [1], [1]])
    c("DtD", D.gram() == [[4]])
    c.finish()


def test_criterion_4():
    c = Checks(4)
    c("Lambda'(0,1) verifies", _verifies("LambdaPrime", l=0, m=1))
    c("Gamma0(1) verifies", _verifies("GammaZero", m=1))
    c("dim 10", build("LambdaPrime", l=0, m=1)[1].dim == 10)
    c("dim 19", build("GammaZero", m=1)[1].dim == 19)
    for m in (2, 3):
        C = _truncated("GammaZero", m=m)
        c("Gamma0(%d) truncated Cartan" % m,
          C == [[3, 2, 1, 0], [2, 4, 2, 0], [1, 2, 2, 1], [0, 0, 1, 2]])
        c("Gamma0(%d) no factorization" % m, _cands(C) == [])
    c.finish()


def test_criterion_5():
    c = Checks(5)
    for l, m in ((1, 1), (1, 2), (2, 2)):
        C = _truncated("LambdaPrime", l=l, m=m)
        c("(%d,%d) truncated Cartan" % (l, m), C == [[2, 2, 1], [2, 4, 2], [1, 2, 2]])
        cands = _cands(C)
        c("(%d,%d) canonical D" % (l, m), cands == [D_4x3])
        c("(%d,%d) refuted" % (l, m), all(not order_consistency(D, True).consistent
                                          for D in cands))
    C = _truncated("LambdaPrime", l=0, m=2)
    c("(0,2) truncated Cartan", C == [[4, 2, 0], [2, 2, 1], [0, 1, 2]])
    c("(0,2) no factorization", _cands(C) == [])
    c.finish()


def test_criterion_6():
    c = Checks(6)
    cases = [((2, 2), BRANCH), ((2, 3), BRANCH),
             ((1, 1), [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 3]]),
             ((1, 2), [[2, 1, 0, 0], [1, 2, 1, 1], [0, 1, 2, 0], [0, 1, 0, 3]]),
             ((0, 1), [[2, 1, 0, 0], [1, 3, 1, 2], [0, 1, 2, 0], [0, 2, 0, 3]]),
             ((0, 2), [[2, 1, 0, 0], [1, 3, 1, 2], [0, 1, 2, 0], [0, 2, 0, 3]]),
             ((-1, 1), [[3, 2, 1, 0], [2, 3, 2, 1], [1, 2, 3, 0], [0, 1, 0, 2]]),
             ((-1, 2), [[3, 2, 1, 0], [2, 3, 2, 1], [1, 2, 3, 0], [0, 1, 0, 2]])]
    for (l, m), expected in cases:
        c("(%d,%d) truncated Cartan" % (l, m), _truncated("GammaTwo", l=l, m=m) == expected)
        v = _verdict("GammaTwo", l=l, m=m)
        c("(%d,%d) NOT-CELLULAR" % (l, m), v.verdict == NOT_CELLULAR)
        c("(%d,%d) via factorization/order" % (l, m),
          v.certificates[-1]["check"] in ("gram_factorizations", "order_consistency"))
    c("T00 verifies", _verifies("GammaTwoT00"))
    c("T-10 verifies", _verifies("GammaTwoTm10"))
    c("dim 11", build("GammaTwoT00")[1].dim == 11)
    c("dim 19", build("GammaTwoTm10")[1].dim == 19)
    c.finish()


def test_criterion_7():
    c = Checks(7)
    for (name, params), dim in zip([("A1", {"lam": "2"}), ("A2", {"lam": "2"}), ("A4", {}),
                                    ("A7", {}), ("A11", {})], [20, 12, 28, 28, 23]):
        A = build(name, **params)[1]
        d = datum(name, **params)
        c("%s verifies" % name, verify_datum(d)["verified"])
        c("%s dim" % name, A.dim == dim)
        D = decomposition_matrix(d)
        # columns of D follow Lambda+; reorder them by vertex before comparing
        col = {D.column_vertex[mu]: k for k, mu in enumerate(D.columns)}
        Dv = [[row[col[v]] for v in A.vertices] for row in D.matrix]
        c("%s DtD = C" % name, gram(Dv) == cartan(A))
    c.finish()


def test_criterion_8():
    c = Checks(8)
    v = _verdict("A3")
    c("A3 NOT-CELLULAR", v.verdict == NOT_CELLULAR)
    c("A3 both candidates refuted",
      v.certificates[-1].get("reason") == "order_consistency refuted both candidates")
    for name in ("A8", "A9", "A10", "A12", "A15", "A16", "GammaOne"):
        v = _verdict(name)
        c("%s NOT-CELLULAR" % name, v.verdict == NOT_CELLULAR)
        c("%s via Ext1" % name, v.certificates[-1]["check"] == "ext1_symmetric")
    c.finish()


def test_criterion_9():
    c = Checks(9)
    two = [[1, 1], [1, 1], [1, 0], [1, 0]]
    five_three = [[[2, 1], [1, 1], [0, 1]], [[1, 1], [1, 1], [1, 1], [1, 0], [1, 0]]]
    five_two = [[[2, 1], [1, 0], [0, 1]], [[1, 1], [1, 1], [1, 0], [1, 0], [1, 0]]]
    cases = [("DB2", {}, [[4, 2], [2, 2]], [two]),
             ("A5", {}, [[5, 3], [3, 3]], five_three),
             ("A6", {}, [[5, 2], [2, 2]], five_two),
             ("Lambda1", {}, [[5, 3], [3, 3]], five_three),
             ("Lambda2", {}, [[5, 2], [2, 2]], five_two)]
    cases += [("Omega", {"n": n}, [[4, 2], [2, 2]], [two]) for n in (2, 3, 4)]
    for name, params, C, cands in cases:
        b, A = build(name, **params)
        target = _truncated(name, **params) if b.expect.truncation else cartan(A)
        label = name + "".join("%s=%s" % kv for kv in params.items())
        c("%s Cartan" % label, target == C)
        c("%s candidates" % label, _cands(target) == cands)
        c("%s UNDECIDED" % label, _verdict(name, **params).verdict == UNDECIDED)
    c.finish()


def test_criterion_10():
    c = Checks(10)

    def run(label, fn, *args):
        try:
            fn(*args)
        except AssertionError:
            c(label, False)

    for name, params in INSTANCES:
        run("associativity %s" % name, props.test_associativity_on_all_basis_triples, name, params)
        run("truncation %s" % name, props.test_truncation_cartan_is_a_submatrix, name, params)
    for n in range(1, 9):
        run("oracle n=%d" % n, props.test_gram_factorizations_match_oracle_on_realizable_matrices, n)
    for n in (1, 2, 3):
        run("oracle all n=%d" % n, props.test_gram_factorizations_match_oracle_on_all_small_matrices, n)
    run("oracle random", props.test_gram_factorizations_match_oracle_on_random_matrices)
    for name, params in WITH_DATUM:
        run("involution %s" % name,
            props.test_involution_squares_to_identity_and_reverses_products, name, params)
        run("C3 %s" % name,
            props.test_c3_coefficients_independent_of_t_for_every_basis_element, name, params)
    for name, params in props.SELF_INJECTIVE:
        run("weakly symmetric %s" % name,
            props.test_self_injective_entries_are_weakly_symmetric, name, params)
    for name, params in WITH_DATUM:
        c("%s verdict" % name, _verdict(name, True, **params).verdict == CELLULAR_VERIFIED)
        run("det %s" % name,
            props.test_verified_entries_have_positive_cartan_determinant, name, params)
    c.finish()
