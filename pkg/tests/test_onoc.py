import pytest

from netoccs.netfreq import net_occurrences_bruteforce
from netoccs.occurrences import Occurrence, is_net_occurrence
from netoccs.onoc import (
    Cover,
    bnso_set,
    enumerate_bridging_supers,
    greedy_onoc,
    is_onoc,
    prove_completeness,
)
from netoccs.words import fib_word

# Length-14 text found by exhaustive search (scripts/find_cover_witness.py):
# its net occurrences form the chain below plus one extra net occurrence
# (2,7) that the chain does not contain.
WITNESS_TEXT = "abbabbabbbabba"
WITNESS_COVER = [Occurrence(1, 6), Occurrence(4, 9), Occurrence(9, 14)]
WITNESS_OUTSIDER = Occurrence(2, 7)


def fib7_cover():
    return [Occurrence(1, 6), Occurrence(6, 11), Occurrence(9, 13)]


def test_is_onoc_on_fib7():
    assert is_onoc(fib_word(7), fib7_cover())


def test_is_onoc_rejects_broken_chains():
    text = fib_word(7)
    # gap between members
    assert not is_onoc(text, [Occurrence(1, 6), Occurrence(9, 13)])
    # does not start at 1
    assert not is_onoc(text, [Occurrence(6, 11), Occurrence(9, 13)])
    # does not reach the end
    assert not is_onoc(text, [Occurrence(1, 6), Occurrence(6, 11)])
    # member is not a net occurrence
    assert not is_onoc(text, [Occurrence(1, 7), Occurrence(6, 11), Occurrence(9, 13)])


def test_is_onoc_domain_errors():
    with pytest.raises(ValueError):
        is_onoc(fib_word(7), [])
    with pytest.raises(ValueError):
        is_onoc("abab", [Occurrence(1, 9)])


def test_bnso_set_fib7():
    text = fib_word(7)
    assert bnso_set(fib7_cover(), text) == (Occurrence(6, 6), Occurrence(9, 11))
    assert bnso_set(Cover(text, tuple(fib7_cover()))) == (
        Occurrence(6, 6),
        Occurrence(9, 11),
    )
    with pytest.raises(ValueError):
        bnso_set([Occurrence(1, 6), Occurrence(9, 13)], text)


@pytest.mark.parametrize(
    "n,bnso,count",
    [(13, (6, 6), 35), (13, (9, 11), 16), (14, (9, 9), 40)],
)
def test_enumerate_bridging_supers_counts(n, bnso, count):
    supers = enumerate_bridging_supers("a" * n, Occurrence(*bnso))
    assert len(supers) == count
    assert len(set(supers)) == count
    s, e = bnso
    for occ in supers:
        assert occ.start <= max(1, s - 1)
        assert occ.end >= min(n, e + 1)


def test_enumerate_bridging_supers_clips_at_boundaries():
    supers = enumerate_bridging_supers("ababa", Occurrence(1, 3))
    assert set(supers) == {Occurrence(1, 4), Occurrence(1, 5)}


def test_prove_completeness_fib7():
    report = prove_completeness(fib_word(7), fib7_cover())
    assert report.cover_valid
    assert report.bnsos == (Occurrence(6, 6), Occurrence(9, 11))
    assert report.offending_supers == ()
    assert report.oracle_agrees
    assert report.complete()


def test_prove_completeness_reports_invalid_cover_without_raising():
    report = prove_completeness(fib_word(7), [Occurrence(1, 6), Occurrence(9, 13)])
    assert not report.cover_valid
    assert report.bnsos == ()
    assert not report.complete()
    # out-of-bounds member is reported the same way
    report = prove_completeness("abab", [Occurrence(1, 9)])
    assert not report.cover_valid


def test_witness_text_has_expected_net_occurrences():
    occs = [r.occurrence for r in net_occurrences_bruteforce(WITNESS_TEXT)]
    assert occs == sorted(WITNESS_COVER + [WITNESS_OUTSIDER])
    assert is_onoc(WITNESS_TEXT, WITNESS_COVER)


def test_witness_outsider_is_flagged_by_completeness_check():
    report = prove_completeness(WITNESS_TEXT, WITNESS_COVER)
    assert report.cover_valid
    assert report.bnsos == (Occurrence(4, 6), Occurrence(9, 9))
    assert report.offending_supers == (WITNESS_OUTSIDER,)
    assert not report.oracle_agrees
    assert not report.complete()
    # ... and it is indeed a bridging super-occurrence of the first BNSO
    assert WITNESS_OUTSIDER in enumerate_bridging_supers(WITNESS_TEXT, Occurrence(4, 6))


@pytest.mark.parametrize("text", [WITNESS_TEXT, fib_word(7), "aaaa", "abbaabba"])
def test_offenders_equal_literal_rectangle_scan(text):
    """The fast offender computation must agree with literally enumerating
    every bridging super-occurrence and testing each definitionally."""
    occs = [r.occurrence for r in net_occurrences_bruteforce(text)]
    cover = greedy_onoc(text, occs)
    if cover is None:
        pytest.skip("text has no ONOC")
    report = prove_completeness(text, cover)
    literal = set()
    for bnso in report.bnsos:
        for occ in enumerate_bridging_supers(text, bnso):
            if is_net_occurrence(text, occ):
                literal.add(occ)
    assert set(report.offending_supers) == literal


def test_greedy_onoc():
    assert greedy_onoc(fib_word(7)) == tuple(fib7_cover())
    assert greedy_onoc("aaaa") == (Occurrence(1, 3), Occurrence(2, 4))
    assert greedy_onoc("aa") is None  # two length-1 net occurrences, no overlap
    assert greedy_onoc("ab") is None  # no net occurrences at all
