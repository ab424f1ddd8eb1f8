from lmalg import suites
from lmalg.errors import VerificationError
from lmalg.report import AxiomReport
from lmalg.suites import SuiteConfig, run_suites


def test_bounded_config():
    cfg = SuiteConfig.bounded(2, 4, seed=7)
    assert cfg.tuple_atoms == cfg.stone_atoms == 2
    assert cfg.canonical_n == cfg.stone_n == 4 and cfg.seed == 7


def test_guard_turns_errors_into_failures():
    rep = AxiomReport("x")

    def boom():
        raise VerificationError("broken")

    suites._guard(rep, "inst", boom)
    assert not rep.passed and "broken" in rep.first_failure.note


def test_absorb_keeps_first_witness():
    sub = AxiomReport("S")
    sub.ok("a", 3)
    sub.fail("b", (1, 2), ("x", "y"), 4)
    rep = AxiomReport("outer")
    suites._absorb(rep, "inst", sub)
    f = rep.first_failure
    assert f.witness == (1, 2) and f.checked == 7 and f.note.startswith("S.b")


def test_sabotaged_checker_is_reported(monkeypatch):
    # a checker that fails everything must turn every definitions entry red
    def always_fail(L, system):
        r = AxiomReport(system)
        r.fail("planted", (0,), ("x",))
        return r

    monkeypatch.setattr(suites, "check_axioms", always_fail)
    rep = suites.suite_definitions(SuiteConfig.bounded(1, 2))
    assert rep.results and all(not r.passed for r in rep.results)


def test_run_suites_merges_with_prefix():
    rep, timings = run_suites(("mv", "cardinality"), SuiteConfig.bounded(1, 3))
    assert rep.passed
    assert set(timings) == {"mv", "cardinality"}
    assert all(r.law.split("/")[0] in timings for r in rep.results)
