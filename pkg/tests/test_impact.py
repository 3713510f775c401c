import pytest

from bibliolens.corpus import Article, AuthorRecord, Corpus, ReceivedCitation
from bibliolens.errors import InsufficientYears, ZeroDenominator
from bibliolens import impact as IM


def cited(i, year, citing_years, doc="journal_article"):
    author = AuthorRecord("A", "X", "hospital", "Malaysia")
    received = tuple(ReceivedCitation(citing_year=c, doc_type=doc) for c in citing_years)
    return Article(str(i), year, "T", "original", authors=(author,), received=received)


def test_received_summary_fixture(corpus):
    summary = IM.received_summary(corpus)
    assert summary.articles_cited == 446
    assert summary.citations == 1164
    assert summary.coverage == pytest.approx(446 / 580)
    row = summary.per_year[2004]
    assert row.articles_cited == 129 and row.citations == 452
    assert row.by_citing_year.bins[2008] == 100


def test_received_summary_empty():
    corpus = Corpus("J", 2004, 2008, (cited(1, 2005, []),))
    summary = IM.received_summary(corpus)
    assert summary.articles_cited == 0 and summary.citations == 0
    assert summary.coverage == 0.0


def test_citing_doc_types_fixture(corpus):
    hist = IM.citing_doc_types(corpus)
    assert hist.bins == {"journal_article": 1082, "thesis": 40, "book": 22,
                         "conference": 11, "government": 9}
    # cross-check against the other op on the same fixture
    assert hist.total() == IM.received_summary(corpus).citations


def test_citing_doc_types_single():
    corpus = Corpus("J", 2004, 2008, (cited(1, 2005, [2006], doc="thesis"),))
    assert IM.citing_doc_types(corpus).bins == {"thesis": 1}


def test_citing_countries_fixture(corpus, region_map):
    result = IM.citing_countries(corpus, region_map=region_map)
    assert result.countries.bins["China"] == 227
    assert result.countries.bins["Malaysia"] == 171
    assert result.countries.bins["United States"] == 123
    assert result.regions.bins["East Asia"] == 258
    assert result.regions.bins["Europe"] == 212
    assert result.collaborations[("Germany", "Luxembourg")] == 3
    assert sum(result.collaborations.values()) == 90
    assert result.no_country == 26
    assert result.countries.total() + sum(result.collaborations.values()) + result.no_country == 1164


@pytest.mark.parametrize("a,b,shown", [
    (89, 235, "0.378"),
    (75, 204, "0.367"),
    (127, 206, "0.616"),
    (110, 241, "0.456"),
    (335, 580, "0.577"),
])
def test_impact_factor_display_truncates(a, b, shown):
    assert IM.impact_factor_display(a, b) == shown
    assert IM.impact_factor(a, b) == pytest.approx(a / b)
    # truncation never exceeds the full-precision value
    assert float(shown) <= a / b


def test_impact_factor_zero_cases():
    assert IM.impact_factor(0, 100) == 0.0
    with pytest.raises(ZeroDenominator):
        IM.impact_factor(5, 0)


def test_series_fixture(corpus):
    series = IM.impact_factor_series(corpus)
    assert sorted(series) == [2006, 2007, 2008, 2009]
    assert (series[2006].citations_window, series[2006].publications_window) == (110, 241)
    assert series[2006].display == "0.456"
    assert (series[2008].citations_window, series[2008].publications_window) == (75, 204)
    assert series[2008].display == "0.367"
    assert series[2009].display == "0.378"
    # A-values double-checked against a brute-force cell scan
    for target, entry in series.items():
        brute = sum(
            1
            for article in corpus.articles
            if target - 2 <= article.year <= target - 1
            for rec in article.received
            if rec.citing_year == target
        )
        assert brute == entry.citations_window


def test_aggregate_fixture(corpus):
    entry = IM.impact_factor_aggregate(corpus, 2004, 2008)
    assert (entry.citations_window, entry.publications_window) == (335, 580)
    assert entry.display == "0.577"


def test_series_window_errors(corpus):
    with pytest.raises(InsufficientYears):
        IM.impact_factor_for_year(corpus, 2005, window=2)
    with pytest.raises(InsufficientYears):
        IM.impact_factor_series(corpus, window=6)
    with pytest.raises(InsufficientYears):
        IM.impact_factor_aggregate(corpus, 2000, 2008)


def test_citable_only_denominator():
    articles = (
        cited(1, 2004, [2006]),
        Article("2", 2004, "T", "editorial",
                authors=(AuthorRecord("A", "X", "hospital", "Malaysia"),)),
        cited(3, 2005, [2006]),
    )
    corpus = Corpus("J", 2004, 2008, articles)
    strict = IM.impact_factor_for_year(corpus, 2006, citable_only=True)
    loose = IM.impact_factor_for_year(corpus, 2006)
    assert strict.publications_window == 2
    assert loose.publications_window == 3
    assert strict.citations_window == loose.citations_window == 2
