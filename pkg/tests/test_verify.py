import json

import pytest

from exceptional_z3 import autohoms as ah, fieldla, verify
from exceptional_z3.verify import CASES, Domain, Report, sample_params


def test_unit_cx_samples_are_36th_roots():
    xs = sample_params("UnitCx", 3, 7)
    assert len(xs) == 3
    for x in xs:
        z = complex(*[v.real for v in x.to_complex()])
        assert abs(z ** 36 - 1) < 1e-9
        ah.check_unit_cx(x)


def test_su3c_sample_has_det_one():
    (m,) = sample_params("SU(3,C)", 1, 1)
    assert fieldla.det(ah.cx_to_field(m)).to_float() == pytest.approx(1)
    ah.check_cx_unitary(m, special=True)


def test_block_sample_has_overall_det_one():
    (p,) = sample_params("S(U(1)xU(5))", 1, 1)
    ah.check_block_unitary(p, (1, 5))
    assert fieldla.det(p) == verify.CycScalar(1)


@pytest.mark.parametrize("domain", ["UnitField", "UnitQuat", "Sp(3)", "U(2,C)", "SU(6)", "S(U(2)xU(2)xU(2))",
                                    "Spin(8)", "Spin(10)"])
def test_samples_satisfy_domain_invariants(domain):
    # sample_params validates each draw and raises on a violation
    assert len(sample_params(domain, 2, 3)) == 2


def test_sampling_is_deterministic():
    a = sample_params("SU(3,C)", 3, 42)
    b = sample_params("SU(3,C)", 3, 42)
    c = sample_params("SU(3,C)", 3, 43)
    assert all(x == y for x, y in zip(a, b))
    assert not all(x == y for x, y in zip(a, c))


def test_unknown_domain():
    with pytest.raises(ValueError):
        sample_params("SO(5)", 1, 0)


def test_case_table():
    assert [CASES[c].expected_dim for c in range(1, 15)] == [2, 8, 10, 10, 12, 26, 10, 18, 12, 30, 12, 12, 16, 12]


def test_run_case_1():
    r = verify.run_case(1)
    assert r.computed_dim == 2
    assert r.passed, [c for c in r.checks if not c.passed]
    names = [c.name for c in r.checks]
    assert names[0].startswith("order of") and any("commute" in n for n in names)


def test_run_case_3_passes():
    r = verify.run_case(3, samples=2)
    assert r.passed and r.computed_dim == 10


def test_samples_zero_still_runs_other_checks():
    r = verify.run_case(2, samples=0)
    assert r.computed_dim == 8
    assert any(c.name.startswith("kernel element") for c in r.checks)
    assert r.passed


def test_run_case_bad_id():
    with pytest.raises(ValueError):
        verify.run_case(15)


def test_report_roundtrip():
    r = verify.run_case(1, samples=1)
    d = json.loads(verify.to_json(r))
    assert set(d) == {"case", "checks", "expected_dim", "computed_dim", "elapsed_ms"}
    assert set(d["checks"][0]) == {"name", "pass", "detail"}
    back = Report.from_dict(d)
    assert back.to_dict() == d


def test_run_case_deterministic_modulo_time():
    a = verify.to_json(verify.run_case(1, samples=3, seed=5), stable=True)
    b = verify.to_json(verify.run_case(1, samples=3, seed=5), stable=True)
    assert a == b


def test_failed_check_does_not_raise():
    r = Report("x")
    r.run("boom", lambda: ah.check_unit_cx(ah.cx(2)))
    assert not r.passed and r.checks[0].detail.startswith("error:")


def test_lemma_thm_322():
    r = verify.run_lemma("thm-3.2.2", samples=2)
    assert r.computed_dim == 22 and r.passed


def test_lemma_prop_451():
    r = verify.run_lemma("prop-4.5.1")
    names = [c.name for c in r.checks]
    assert "sigma3 deltaR = deltaR sigma3p" in names and "deltaR commutes with gamma3" in names
    assert r.passed


def test_lemma_unknown():
    with pytest.raises(ValueError):
        verify.run_lemma("thm-9.9.9")


def test_run_jobs_order_independent_of_parallelism():
    jobs = [("lemma", "lemma-3.1.4"), ("case", 1), ("lemma", "lemma-4.3.1")]
    seq = verify.run_jobs(jobs, 2, 0, 36, 1)
    par = verify.run_jobs(jobs, 2, 0, 36, 2)
    assert [r.case for r in seq] == ["lemma-3.1.4", "case-1", "lemma-4.3.1"]
    strip = lambda rs: [dict(r.to_dict(), elapsed_ms=0) for r in rs]
    assert strip(seq) == strip(par)
