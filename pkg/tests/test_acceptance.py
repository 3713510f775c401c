"""Acceptance suite.

Each test implements one release criterion at its stated tolerance and
prints a PASS line (visible with `pytest -s` or in failure output). The
whole suite, including these, is expected to finish well under 30 s.
"""

import math
import time

import pytest

from bibliolens.numfmt import percent_display
from bibliolens import citation_profile as CP
from bibliolens import collaboration as CL
from bibliolens import content as CT
from bibliolens import impact as IM
from bibliolens import productivity as P
from bibliolens import unique_authors


def ok(line):
    print(f"ACCEPTANCE PASS: {line}")


def test_c1_lotka_two_point_and_expected_table(lotka_observed):
    start = time.perf_counter()
    fit = P.lotka_fit_two_point(lotka_observed)
    expected = P.lotka_expected(1084, 2.4, sorted(lotka_observed.bins))
    elapsed = time.perf_counter() - start
    assert 2.40 <= fit.c <= 2.42
    assert expected.bins == {1: 1084, 2: 205, 3: 78, 4: 39, 5: 23, 6: 15, 7: 10,
                             8: 7, 9: 6, 10: 4, 11: 3, 12: 3, 14: 2, 15: 2, 19: 1}
    assert elapsed < 1.0
    ok(f"criterion 1: two-point exponent {fit.c:.4f} in [2.40, 2.42]; "
       f"all 15 expected rows match at c=2.4; runtime {elapsed * 1000:.1f} ms")


def test_c2_degree_of_collaboration(corpus):
    degree = CL.degree_of_collaboration(corpus)
    assert degree.c == pytest.approx(0.9034, abs=1e-4)
    shown = [percent_display(nm, ns + nm) for _, (ns, nm, _) in sorted(degree.per_year.items())]
    assert shown == ["87.77", "87.25", "91.35", "93.00", "92.59"]
    ok(f"criterion 2: degree of collaboration {degree.c:.5f}; per-year {shown}")


def test_c3_impact_factor_display_pairs():
    pairs = [(89, 235, "0.378"), (75, 204, "0.367"), (127, 206, "0.616"),
             (110, 241, "0.456"), (335, 580, "0.577")]
    for a, b, shown in pairs:
        assert IM.impact_factor_display(a, b) == shown
    ok("criterion 3: all five impact-factor pairs reproduce exactly under truncate-3")


def test_c4_self_citation(corpus):
    sc = CP.self_citation(corpus)
    assert (sc.self_citations, sc.total_references) == (173, 6958)
    assert percent_display(sc.self_citations, sc.total_references) == "2.49"
    assert percent_display(*sc.per_year[2004]) == "3.06"
    ok("criterion 4: self-citation 173/6958 -> 2.49%; 2004 slice 58/1898 -> 3.06%")


def test_c5_bradford_zones(journal_freqs):
    part = CP.bradford_partition(journal_freqs, k=3)
    assert part.zones[0].journal_count == 43
    assert part.zones[0].citation_count == 1990
    dev2 = abs(part.zones[1].journal_count - 210) / 210
    dev3 = abs(part.zones[2].journal_count - 1270) / 1270
    assert dev2 <= 0.05 and dev3 <= 0.05
    ok(f"criterion 5: zone 1 = 43 journals / 1990 citations exactly; "
       f"zones 2/3 = {part.zones[1].journal_count}/{part.zones[2].journal_count} "
       f"({dev2 * 100:.1f}% / {dev3 * 100:.1f}% off 210/1270)")


def test_c6_age_profile(citation_ages):
    profile = CP.age_profile_from_histogram(citation_ages)
    share = profile.cumulative_share(11) * 100
    assert share == pytest.approx(63.87, abs=0.01)
    # independent oracle: brute-force cumulative scan over integer-age rows
    rows = sorted((int(k), v) for k, v in citation_ages.bins.items() if str(k).isdigit())
    dated = profile.dated_total
    cum = 0
    oracle = None
    for age, count in rows:
        cum += count
        if cum >= dated / 2:
            oracle = age
            break
    assert oracle == 9  # the strict median; headline readings of this table round up
    assert profile.half_life_integer == oracle
    ok(f"criterion 6: cumulative share at age<=11 = {share:.2f}%; "
       f"half-life integer {profile.half_life_integer} matches brute-force oracle 9")


def test_c7_content_statistics(corpus):
    keywords = CT.keywords_per_article(corpus)
    assert keywords.mean == pytest.approx(3.3379, abs=1e-4)
    words = CT.title_word_stats(corpus)
    assert words.mean == pytest.approx(10.797, abs=1e-3)
    assert (words.mode, words.mode_count) == (9, 57)
    ok(f"criterion 7: mean keywords {keywords.mean:.4f}; mean title words "
       f"{words.mean:.3f}; mode {words.mode} ({words.mode_count} articles)")


def test_c8_productivity(corpus):
    per_year = P.articles_per_year(corpus)
    assert per_year.counts.bins == {2004: 139, 2005: 102, 2006: 104, 2007: 100, 2008: 135}
    authorships = P.authorships_per_year(corpus)
    assert authorships.bins == {2004: 478, 2005: 367, 2006: 412, 2007: 352, 2008: 568}
    counts = unique_authors(corpus)
    assert len(counts) == 1435
    assert sum(counts.values()) == 2177
    ok("criterion 8: per-year articles {139,102,104,100,135}; authorships "
       "{478,367,412,352,568}; 1435 unique authors / 2177 authorships")


def test_c9_property_suites_present():
    """Criterion 9's property suites live in test_properties.py.

    This check just pins their presence: exponent recovery, zone balance,
    scale invariance, round-trip determinism, normalization idempotence.
    """
    import test_properties as props

    for name in ("test_two_point_fit_recovers_exponent",
                 "test_bradford_zone_balance_on_random_lists",
                 "test_impact_factor_scale_invariance",
                 "test_histogram_round_trip",
                 "test_normalize_name_idempotent"):
        assert hasattr(props, name)
    ok("criterion 9: property suites implemented (see test_properties.py)")
