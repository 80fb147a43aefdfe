import pytest

import qcongruence as qc


def test_constructors():
    assert qc.q_int(3) == [1, 1, 1]
    assert qc.q_binom(4, 2) == [1, 1, 2, 1, 1]
    assert qc.cyclotomic(9) == [1, 0, 0, 1, 0, 0, 1]
    assert qc.central_qbinom_sum(3) == [1, 1, 2, 1, 2, 1, 1]
    assert qc.to_canonical([1, -2, 0, 0, 1]) == "0:1,1:-2,4:1"


def test_big_coefficients_survive_conversion():
    coeffs = qc.q_binom(80, 40)
    assert max(coeffs) > 2**64
    assert sum(coeffs) == 107507208733336176461620  # C(80, 40)


def test_divrem_and_valuation():
    quot, rem = qc.divrem_monic([1, 1, 2, 1, 2, 1, 1], [1, 2, 3, 2, 1])
    assert quot == [1, -1, 1] and rem == []
    assert qc.nu3(17577) == 4
    assert qc.nu3(0) == float("inf")
    assert [qc.char3(k) for k in (1, 3, -1)] == [1, 0, -1]


def test_verifications():
    report = qc.verify_eq13(1, 1)
    assert report.passed and report.witness == "0:1,1:-1,2:1"
    assert qc.verify_eq14(2).passed
    assert not qc.verify_eq14(1, perturb_r=True).passed
    assert qc.verify_eq21(1, 2, psi="psi_m").passed
    assert qc.verify_identity33(1, 2).passed
    assert qc.verify_ssz12(2).witness == "17577"
    assert qc.verify_remark14(2).witness == "-751/784"
    assert qc.verify_sun_tauraso(5, 1).witness == "99"
    assert qc.q_lucas_check(3, 1, 1, 0, 2).passed
    assert qc.psi_m(1, 1, 1) == 3


def test_errors_map_to_python():
    with pytest.raises(qc.PsiHypothesisViolated):
        qc.verify_eq21(1, 1, psi="identity")
    with pytest.raises(qc.Error):
        qc.verify_eq13(0, 1)


def test_quick_suite():
    reports = qc.suite("quick", jobs=2)
    summary = reports[-1]["summary"]
    assert summary["ok"] and summary["passed"] == summary["total"]
