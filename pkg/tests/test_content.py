import pytest

from bibliolens.corpus import Article, AuthorRecord, Corpus
from bibliolens import content as CT


def art(i, keywords=(), title="One two three", year=2005, atype="original", funders=()):
    author = AuthorRecord("A", "X", "hospital", "Malaysia")
    return Article(str(i), year, title, atype, keywords=tuple(keywords),
                   authors=(author,), funders=tuple(funders))


def test_keyword_frequency_fixture(corpus, places):
    result = CT.keyword_frequency(corpus, places=places)
    assert result.ranked.bins["diabetes"] == 28
    assert result.ranked.bins["cancers"] == 13
    assert result.places.bins["malaysia"] == 47
    assert result.ranked.total() == 1936


def test_keyword_frequency_case_folds():
    corpus = Corpus("J", 2004, 2008, (art(1, ["Dengue", "  dengue  "]),
                                      art(2, ["DENGUE"])))
    result = CT.keyword_frequency(corpus)
    assert result.ranked.bins == {"dengue": 3}


def test_keyword_frequency_empty(corpus):
    none = Corpus("J", 2004, 2008, (art(1),))
    assert CT.keyword_frequency(none).ranked.bins == {}


def test_keywords_per_article_fixture(corpus):
    profile = CT.keywords_per_article(corpus)
    assert profile.histogram.bins == {0: 34, 1: 17, 2: 96, 3: 188, 4: 131,
                                      5: 68, 6: 34, 7: 4, 8: 6, 9: 1, 10: 1}
    assert profile.mean == pytest.approx(1936 / 580)
    assert profile.mean == pytest.approx(3.3379, abs=1e-4)
    # weighted bins equal the keyword-frequency totals
    weighted = sum(k * v for k, v in profile.histogram.bins.items())
    assert weighted == CT.keyword_frequency(corpus).ranked.total()


def test_keywords_per_article_trivial():
    one = Corpus("J", 2004, 2008, (art(1, ["a", "b", "c", "d"]),))
    assert CT.keywords_per_article(one).mean == 4.0
    none = Corpus("J", 2004, 2008, (art(1), art(2)))
    assert CT.keywords_per_article(none).mean == 0.0


def test_title_words_fixture(corpus):
    stats = CT.title_word_stats(corpus)
    assert stats.minimum == 2
    assert stats.histogram.bins[2] == 4
    assert stats.maximum == 26
    assert stats.histogram.bins[26] == 1
    assert stats.mean == pytest.approx(10.797, abs=1e-3)
    assert (stats.mode, stats.mode_count) == (9, 57)
    # oracle: brute-force mean over the raw titles
    brute = sum(len(a.title.split()) for a in corpus.articles) / len(corpus.articles)
    assert stats.mean == pytest.approx(brute)


def test_title_words_trivial():
    corpus = Corpus("J", 2004, 2008, (art(1, title="A B C"),))
    stats = CT.title_word_stats(corpus)
    assert stats.histogram.bins == {3: 1}
    assert stats.mean == 3.0


def test_funding_fixture(corpus):
    summary = CT.funding_summary(corpus)
    assert summary.originals == 346
    assert summary.funded == 61
    assert summary.funded_ratio == pytest.approx(61 / 346)
    assert round(summary.funded_ratio * 100, 2) == 17.63
    totals = summary.funder_totals()
    assert totals.bins["Ministry of Sc and Tech (Top down, IRPA) Grant"] == 13


def test_funding_none():
    corpus = Corpus("J", 2004, 2008, (art(1), art(2, atype="cme", funders=["X"])))
    summary = CT.funding_summary(corpus)
    # non-original articles are outside both numerator and denominator
    assert summary.originals == 1 and summary.funded == 0
    assert summary.funded_ratio == 0.0
