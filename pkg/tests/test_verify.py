from oneplanar import drawing as dr
from oneplanar import verify
from oneplanar.verify import FAIL, PASS, UNDECIDED, Settings

QUICK = Settings(merge_trees=20, sub_drawings=20, random_drawings=60, roundtrips=20)


def test_quick_subset_passes():
    results = verify.verify_paper(QUICK, only=["optimal-baseline", "lem-c-identity", "odd-parity",
                                               "quasi-maximal", "format-roundtrip"])
    assert [r.status for r in results] == [PASS] * 5


def test_miscounting_eps_fails_lemma_check(monkeypatch):
    real = dr.lemma_c_rhs
    monkeypatch.setattr(dr, "lemma_c_rhs", lambda d: real(d) + 1)
    (res,) = verify.verify_paper(QUICK, only=["lem-c-identity"])
    assert res.status == FAIL
    assert res.line().startswith("lem-c-identity: FAIL")


def test_starved_oracle_is_undecided():
    (res,) = verify.verify_paper(Settings(budget=10), only=["croa-cr5"])
    assert res.status == UNDECIDED
    assert res.line().startswith("croa-cr5: UNDECIDED")


def test_crash_is_a_failure(monkeypatch):
    def boom(d):
        raise RuntimeError("broken")

    monkeypatch.setattr(dr, "face_census", boom)
    (res,) = verify.verify_paper(QUICK, only=["optimal-baseline"])
    assert res.status == FAIL and "RuntimeError" in res.detail


def test_report_file(tmp_path):
    verify.verify_paper(QUICK, only=["merge-arithmetic"], out_dir=tmp_path, figures=False)
    assert (tmp_path / "report.txt").read_text().startswith("merge-arithmetic: PASS")


def test_check_names_are_unique():
    names = [n for n, _ in verify.CHECKS]
    assert len(names) == len(set(names)) == 13
