import pytest

from netoccs import verifier
from netoccs.occurrences import Occurrence
from netoccs.verifier import (
    check_onoc_containment,
    verify_fibonacci,
    verify_onoc_lemma_random,
    verify_thue_morse,
)

FIB_CLAIMS = {
    "theta_sets_match_oracle",
    "theta_step_clauses",
    "theta_counts_match_oracle",
    "identities",
    "lemmas",
    "net_occurrences_match_prediction",
    "prediction_is_onoc",
    "cover_complete",
    "engines_agree",
}

TM_CLAIMS = {
    "occurrence_sets_match_oracle",
    "recurrence_intersections",
    "occurrence_counts_match",
    "top_offset_documented_deviation",
    "identities",
    "net_occurrences_match_prediction",
    "prediction_is_onoc",
    "cover_complete",
    "smallest_factorizations_valid",
    "engines_agree",
}


def test_verify_fibonacci_small():
    report = verify_fibonacci(8)
    assert report.all_passed()
    assert report.failed() == {}
    assert report.family == "Fibonacci"
    assert report.orders == (7, 8)
    expected = {f"order_{i}/{name}" for i in (7, 8) for name in FIB_CLAIMS}
    assert set(report.claims) == expected
    data = report.to_json_dict()
    assert data["orders"] == [7, 8]
    assert all(entry["pass"] for entry in data["claims"].values())


def test_verify_fibonacci_domain():
    with pytest.raises(ValueError):
        verify_fibonacci(6)


def test_verify_thue_morse_small():
    report = verify_thue_morse(6)
    assert report.all_passed()
    assert report.orders == (5, 6)
    expected = {f"order_{i}/{name}" for i in (5, 6) for name in TM_CLAIMS}
    assert set(report.claims) == expected


def test_verify_thue_morse_domain():
    with pytest.raises(ValueError):
        verify_thue_morse(4)


def test_top_offset_deviation_carries_both_counts():
    report = verify_thue_morse(5)
    claim = report.claims["order_5/top_offset_documented_deviation"]
    assert claim.passed
    assert claim.witness == {"oracle": 8, "recurrence": 11}


def test_worker_count_env(monkeypatch):
    monkeypatch.delenv("NETOCC_THREADS", raising=False)
    assert verifier._worker_count() == 1
    monkeypatch.setenv("NETOCC_THREADS", "4")
    assert verifier._worker_count() == 4
    monkeypatch.setenv("NETOCC_THREADS", "0")
    assert verifier._worker_count() == 1
    monkeypatch.setenv("NETOCC_THREADS", "notanumber")
    assert verifier._worker_count() == 1


def test_parallel_sweep_matches_serial(monkeypatch):
    monkeypatch.delenv("NETOCC_THREADS", raising=False)
    serial = verify_fibonacci(9)
    monkeypatch.setenv("NETOCC_THREADS", "2")
    parallel = verify_fibonacci(9)
    assert serial.claims == parallel.claims


def test_check_onoc_containment():
    assert check_onoc_containment("ab") is None  # no net occurrences
    cover, offender = check_onoc_containment("aaaa")
    assert cover == (Occurrence(1, 3), Occurrence(2, 4))
    assert offender is None
    # the extra net occurrence (2,7) contains the widened overlap (3..7)
    cover, offender = check_onoc_containment("abbabbabbbabba")
    assert cover == (Occurrence(1, 6), Occurrence(4, 9), Occurrence(9, 14))
    assert offender is None


def test_onoc_lemma_random_is_deterministic():
    first = verify_onoc_lemma_random(seed=7, samples=60, max_len=12)
    second = verify_onoc_lemma_random(seed=7, samples=60, max_len=12)
    assert first == second
    assert first.samples == 60
    assert first.tested() == first.samples - first.skipped
    assert first.ok()


def test_onoc_lemma_random_seed_changes_texts():
    a = verify_onoc_lemma_random(seed=1, samples=40, max_len=10)
    b = verify_onoc_lemma_random(seed=2, samples=40, max_len=10)
    # both clean, but almost surely different skip counts
    assert a.ok() and b.ok()


def test_onoc_lemma_exhaustive_counts():
    report = verify_onoc_lemma_random(seed=0, samples=0, max_len=6, exhaustive=True)
    assert report.samples == 2**7 - 2  # all nonempty texts up to length 6
    assert report.ok()


def test_onoc_lemma_domain_errors():
    with pytest.raises(ValueError):
        verify_onoc_lemma_random(seed=0, samples=10, max_len=33)
    with pytest.raises(ValueError):
        verify_onoc_lemma_random(seed=0, samples=0, max_len=10)
    with pytest.raises(ValueError):
        verify_onoc_lemma_random(seed=0, samples=10, max_len=3)


def test_property_report_json():
    report = verify_onoc_lemma_random(seed=3, samples=25, max_len=8)
    data = report.to_json_dict()
    assert data["samples"] == 25
    assert data["tested"] == report.tested()
    assert data["violations"] == []
