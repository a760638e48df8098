import json

import pytest

from strongpow.verify import (
    AGREE,
    CHECK_NAMES,
    DISAGREE,
    SKIPPED,
    CheckRecord,
    KnownDiscrepancy,
    load_known_discrepancies,
    run_verify,
    worker_count,
)


def find(report, check, n):
    hits = [r for r in report.records if r.check == check and r.n == n]
    assert len(hits) == 1
    return hits[0]


def test_check_names():
    assert len(CHECK_NAMES) == 11
    assert len(set(CHECK_NAMES)) == 11
    for name in ("spectrum", "tau", "le", "kappa", "chi", "linegraph", "cayley"):
        assert name in CHECK_NAMES


def test_load_known_discrepancies():
    known = load_known_discrepancies()
    assert len(known) == 1
    entry = known[0]
    assert entry.check == "le"
    assert entry.family == "cyclic"
    assert entry.n_min == 3
    assert entry.explanation


def test_known_discrepancy_matching():
    rec = CheckRecord("le", "cyclic", "zn:5", 5, "a", "b", DISAGREE)
    assert KnownDiscrepancy("le").matches(rec)
    assert KnownDiscrepancy("le", family="cyclic", n_min=3).matches(rec)
    assert not KnownDiscrepancy("tau").matches(rec)
    assert not KnownDiscrepancy("le", family="corpus").matches(rec)
    assert not KnownDiscrepancy("le", n_min=6).matches(rec)
    assert not KnownDiscrepancy("le", n_max=4).matches(rec)


def test_run_verify_cyclic_range():
    report = run_verify("cyclic", 2, 14)
    counts = report.counts()
    assert counts[AGREE] == 130
    assert counts[DISAGREE] == 12
    assert counts[SKIPPED] == 1
    # the only disagreements are the laplacian energy closed form, n >= 3
    disagreeing = [r for r in report.records if r.status == DISAGREE]
    assert all(r.check == "le" and r.n >= 3 for r in disagreeing)
    known = load_known_discrepancies()
    assert report.undocumented_disagreements(known) == []
    assert report.exit_code(known) == 0


def test_run_verify_cyclic_spot_records():
    report = run_verify("cyclic", 2, 14)
    le4 = find(report, "le", 4)
    assert le4.formula_value == "4" and le4.oracle_value == "6"
    assert le4.status == DISAGREE
    tau4 = find(report, "tau", 4)
    assert tau4.formula_value == "3" and tau4.status == AGREE
    perm_lap4 = find(report, "perm_lap", 4)
    assert perm_lap4.formula_value == "22" and perm_lap4.status == AGREE
    cayley2 = find(report, "cayley", 2)
    assert cayley2.status == SKIPPED
    cayley3 = find(report, "cayley", 3)
    assert cayley3.status == AGREE


def test_run_verify_corpus_range():
    report = run_verify("corpus", 4, 12)
    counts = report.counts()
    assert counts[AGREE] == 99
    assert counts[DISAGREE] == 0
    assert counts[SKIPPED] == 0
    assert report.exit_code(load_known_discrepancies()) == 0


def test_run_verify_exit_code_without_known_list():
    report = run_verify("cyclic", 4, 4, checks=("le",))
    assert report.exit_code(()) == 1
    assert len(report.undocumented_disagreements(())) == 1
    assert report.exit_code(load_known_discrepancies()) == 0


def test_run_verify_covers_each_pair_once():
    checks = ("spectrum", "tau", "le")
    report = run_verify("cyclic", 2, 6, checks=checks)
    seen = [(r.check, r.spec) for r in report.records]
    assert len(seen) == len(set(seen)) == 15
    # records follow canonical (group, check) order
    assert seen[:3] == [("spectrum", "zn:2"), ("tau", "zn:2"), ("le", "zn:2")]


def test_run_verify_thread_determinism():
    a = run_verify("cyclic", 2, 10, threads=1)
    b = run_verify("cyclic", 2, 10, threads=6)
    assert a.to_tsv() == b.to_tsv()


def test_run_verify_validation():
    with pytest.raises(ValueError):
        run_verify("weird", 2, 5)
    with pytest.raises(ValueError):
        run_verify("cyclic", 0, 5)
    with pytest.raises(ValueError):
        run_verify("cyclic", 5, 2)
    with pytest.raises(ValueError):
        run_verify("cyclic", 2, 5, checks=("tau", "nope"))


def test_report_tsv_and_json_shapes():
    report = run_verify("cyclic", 4, 4, checks=("tau", "le"))
    tsv = report.to_tsv()
    lines = tsv.strip().split("\n")
    assert lines[0] == "check\tfamily\tparam\tn\tformula\toracle\tstatus\tnote"
    assert len(lines) == 3
    assert all(len(line.split("\t")) == 8 for line in lines)
    payload = json.loads(report.to_json())
    assert payload["family"] == "cyclic"
    assert payload["range"] == [4, 4]
    assert payload["counts"][AGREE] == 1
    assert payload["counts"][DISAGREE] == 1
    assert {r["check"] for r in payload["records"]} == {"tau", "le"}


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("STRONGPOW_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("STRONGPOW_THREADS", "0")
    assert worker_count() == 1
    monkeypatch.setenv("STRONGPOW_THREADS", "abc")
    with pytest.raises(ValueError):
        worker_count()
    monkeypatch.delenv("STRONGPOW_THREADS")
    assert worker_count() >= 1


def test_skip_notes_name_the_guard():
    # corpus at order 16 exceeds the isomorphism search bound for the
    # cayley witness but the structural fast path still settles it
    report = run_verify("corpus", 16, 16, checks=("cayley",))
    assert all(r.status == AGREE for r in report.records)
