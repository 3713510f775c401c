"""Received-citation profiles and impact factor computation.

The impact factor for year n is A / B with A the citations received during
year n by items published in the two preceding years and B the number of
items published in those years. Analyses return full-precision quotients;
the display convention truncates (never rounds) at three decimals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus
from .errors import InsufficientYears, ZeroDenominator
from .histogram import Histogram
from .numfmt import ratio_display_truncated


@dataclass
class ReceivedYearRow:
    articles_cited: int
    citations: int
    by_citing_year: Histogram


@dataclass
class ReceivedSummary:
    per_year: dict[int, ReceivedYearRow]
    total_articles: int
    articles_cited: int
    citations: int

    @property
    def coverage(self) -> float:
        """Share of articles cited at least once."""
        return self.articles_cited / self.total_articles if self.total_articles else 0.0


def received_summary(corpus: Corpus) -> ReceivedSummary:
    per_year: dict[int, ReceivedYearRow] = {}
    cited = 0
    citations = 0
    for year in sorted({a.year for a in corpus.articles}):
        rows = corpus.articles_in(year)
        by_year: Counter = Counter()
        n_cited = 0
        for article in rows:
            if article.received:
                n_cited += 1
            for rec in article.received:
                by_year[rec.citing_year] += 1
        per_year[year] = ReceivedYearRow(
            articles_cited=n_cited,
            citations=sum(by_year.values()),
            by_citing_year=Histogram(f"citations to {year} articles", dict(by_year)),
        )
        cited += n_cited
        citations += per_year[year].citations
    return ReceivedSummary(
        per_year=per_year,
        total_articles=len(corpus.articles),
        articles_cited=cited,
        citations=citations,
    )


def citing_doc_types(corpus: Corpus) -> Histogram:
    counts: Counter = Counter()
    for article in corpus.articles:
        for rec in article.received:
            counts[rec.doc_type] += 1
    return Histogram("citing document types", dict(counts))


@dataclass
class CitingCountries:
    countries: Histogram
    regions: Histogram | None
    collaborations: dict[tuple[str, ...], int] = field(default_factory=dict)
    no_country: int = 0


def citing_countries(corpus: Corpus, region_map: dict[str, str] | None = None) -> CitingCountries:
    """Citing-author countries; multi-country citations tally separately.

    Single-country citations feed the country table (and the optional
    region rollup); citations naming several countries feed a collaboration
    table keyed by the sorted country set.
    """
    countries: Counter = Counter()
    collaborations: Counter = Counter()
    no_country = 0
    for article in corpus.articles:
        for rec in article.received:
            uniq = sorted(set(rec.citing_countries))
            if not uniq:
                no_country += 1
            elif len(uniq) == 1:
                countries[uniq[0]] += 1
            else:
                collaborations[tuple(uniq)] += 1
    regions = None
    if region_map is not None:
        rollup: Counter = Counter()
        for country, n in countries.items():
            rollup[region_map.get(country, "unmapped")] += n
        regions = Histogram("citing regions", dict(rollup))
    return CitingCountries(
        countries=Histogram("citing countries", dict(countries)),
        regions=regions,
        collaborations=dict(collaborations),
        no_country=no_country,
    )


def impact_factor(a: int, b: int) -> float:
    """Full-precision A / B."""
    if b <= 0:
        raise ZeroDenominator(f"impact factor denominator must be positive, got {b}")
    return a / b


def impact_factor_display(a: int, b: int) -> str:
    """A / B truncated to three decimals, matching the display convention."""
    if b <= 0:
        raise ZeroDenominator(f"impact factor denominator must be positive, got {b}")
    return ratio_display_truncated(a, b, places=3)


@dataclass
class ImpactFactorEntry:
    target_year: int
    citations_window: int  # A
    publications_window: int  # B
    value: float

    @property
    def display(self) -> str:
        return ratio_display_truncated(self.citations_window, self.publications_window)


def _window_counts(corpus: Corpus, target_year: int, window: int, citable_only: bool) -> tuple[int, int]:
    lo, hi = target_year - window, target_year - 1
    a = 0
    b = 0
    for article in corpus.articles:
        if lo <= article.year <= hi:
            if not citable_only or article.article_type == "original":
                b += 1
                a += sum(1 for rec in article.received if rec.citing_year == target_year)
    return a, b


def impact_factor_series(corpus: Corpus, window: int = 2,
                         citable_only: bool = False) -> dict[int, ImpactFactorEntry]:
    """Impact factors for every target year whose window the corpus covers.

    Targets run from year_start + window through year_end + 1 (the first
    year that can cite a complete trailing window). `citable_only`
    restricts the denominator to original articles.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    if corpus.year_start + window > corpus.year_end + 1:
        raise InsufficientYears(
            f"window {window} does not fit inside {corpus.year_start}..{corpus.year_end}"
        )
    series = {}
    for target in range(corpus.year_start + window, corpus.year_end + 2):
        a, b = _window_counts(corpus, target, window, citable_only)
        if b > 0:
            series[target] = ImpactFactorEntry(target, a, b, a / b)
    return series


def impact_factor_for_year(corpus: Corpus, target_year: int, window: int = 2,
                           citable_only: bool = False) -> ImpactFactorEntry:
    if target_year - window < corpus.year_start:
        raise InsufficientYears(
            f"target {target_year} with window {window} starts before {corpus.year_start}"
        )
    a, b = _window_counts(corpus, target_year, window, citable_only)
    if b == 0:
        raise ZeroDenominator(f"no publications in window for target year {target_year}")
    return ImpactFactorEntry(target_year, a, b, a / b)


def impact_factor_aggregate(corpus: Corpus, start: int, end: int,
                            citing_year: int | None = None,
                            citable_only: bool = False) -> ImpactFactorEntry:
    """Aggregate impact factor over an arbitrary publication span.

    A counts citations received during `citing_year` (default: the year
    after the span ends) by articles published in start..end; B is the
    article count of the span.
    """
    if start < corpus.year_start or end > corpus.year_end or start > end:
        raise InsufficientYears(f"span {start}..{end} outside corpus years")
    if citing_year is None:
        citing_year = end + 1
    a = 0
    b = 0
    for article in corpus.articles:
        if start <= article.year <= end:
            if not citable_only or article.article_type == "original":
                b += 1
                a += sum(1 for rec in article.received if rec.citing_year == citing_year)
    if b == 0:
        raise ZeroDenominator(f"no publications in {start}..{end}")
    return ImpactFactorEntry(citing_year, a, b, a / b)
