"""Keyword, title-length and research-funding analyses."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus
from .histogram import Histogram


def _normalize_keyword(raw: str) -> str:
    # trim + case-fold only; surface forms are counted as-is, no stemming
    return " ".join(raw.split()).casefold()


@dataclass
class KeywordFrequencies:
    ranked: Histogram
    places: Histogram | None = None


def keyword_frequency(corpus: Corpus, places=None) -> KeywordFrequencies:
    """Case-insensitive keyword counts; optional geographic sublist.

    `places` is an iterable of place names; when given, the matching
    keywords are also reported as their own table.
    """
    counts: Counter = Counter()
    for article in corpus.articles:
        for kw in article.keywords:
            counts[_normalize_keyword(kw)] += 1
    place_hist = None
    if places is not None:
        wanted = {_normalize_keyword(p) for p in places}
        place_hist = Histogram(
            "place keywords", {k: n for k, n in counts.items() if k in wanted}
        )
    return KeywordFrequencies(
        ranked=Histogram("keywords", dict(counts)), places=place_hist
    )


@dataclass
class CountProfile:
    histogram: Histogram
    mean: float


def keywords_per_article(corpus: Corpus) -> CountProfile:
    """Articles per keyword count, zero bin included; mean at full precision."""
    counts = Counter(len(a.keywords) for a in corpus.articles)
    n = len(corpus.articles)
    total = sum(len(a.keywords) for a in corpus.articles)
    return CountProfile(
        histogram=Histogram("keywords per article", dict(counts)),
        mean=total / n if n else 0.0,
    )


@dataclass
class TitleWordStats:
    histogram: Histogram
    minimum: int
    maximum: int
    mean: float
    mode: int
    mode_count: int


def title_word_stats(corpus: Corpus) -> TitleWordStats:
    """Title length statistics; a word is a maximal run of non-whitespace."""
    lengths = [len(a.title.split()) for a in corpus.articles]
    counts = Counter(lengths)
    if not lengths:
        return TitleWordStats(Histogram("title words"), 0, 0, 0.0, 0, 0)
    mode, mode_count = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return TitleWordStats(
        histogram=Histogram("title words", dict(counts)),
        minimum=min(lengths),
        maximum=max(lengths),
        mean=sum(lengths) / len(lengths),
        mode=mode,
        mode_count=mode_count,
    )


@dataclass
class FundingSummary:
    """Funding acknowledged by original research articles.

    The ratio's denominator is the count of original articles only; other
    article categories are not expected to attract sponsorship.
    """

    per_funder: dict[str, dict[int, int]]
    originals_per_year: dict[int, int]
    funded_per_year: dict[int, int]
    originals: int
    funded: int

    @property
    def funded_ratio(self) -> float:
        return self.funded / self.originals if self.originals else 0.0

    def funder_totals(self) -> Histogram:
        return Histogram(
            "funding acknowledgements",
            {name: sum(by_year.values()) for name, by_year in self.per_funder.items()},
        )


def funding_summary(corpus: Corpus) -> FundingSummary:
    per_funder: dict[str, Counter] = {}
    originals: Counter = Counter()
    funded: Counter = Counter()
    for article in corpus.articles:
        if article.article_type != "original":
            continue
        originals[article.year] += 1
        if article.funders:
            funded[article.year] += 1
        for funder in article.funders:
            per_funder.setdefault(funder, Counter())[article.year] += 1
    return FundingSummary(
        per_funder={name: dict(c) for name, c in sorted(per_funder.items())},
        originals_per_year=dict(sorted(originals.items())),
        funded_per_year=dict(sorted(funded.items())),
        originals=sum(originals.values()),
        funded=sum(funded.values()),
    )
