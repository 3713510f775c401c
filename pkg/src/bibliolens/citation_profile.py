"""Outgoing-reference analytics.

Covers per-year reference volume, per-article ranges, bibliographic-format
and language breakdowns, citation-age profiles with half-life, the ranked
cited-journal list with its core-journal zone partition, and journal
self-citation.

Ages count calendar-year differences (citing year minus publication year,
clamped at zero); ages 0 and 1 share the first "up to 1" bin. Undated
references stay in totals but are excluded from age statistics. The zone
partition walks the ranked journal list and closes zone m at the first
journal whose inclusion reaches m/k of all citations; that boundary
journal belongs to the earlier zone.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus, normalize_journal_title
from .errors import BadEdges, MissingBin, TooFewJournals
from .histogram import Histogram


@dataclass
class ReferenceVolume:
    per_year: Histogram
    total: int
    mean_per_article: float


def references_per_year(corpus: Corpus) -> ReferenceVolume:
    per_year: Counter = Counter()
    for article in corpus.articles:
        per_year[article.year] += len(article.references)
    total = sum(per_year.values())
    n_articles = len(corpus.articles)
    return ReferenceVolume(
        per_year=Histogram("references per year", dict(per_year)),
        total=total,
        mean_per_article=total / n_articles if n_articles else 0.0,
    )


DEFAULT_RANGE_EDGES = (0, 10, 20, 30, 40, 50, 60, 70, 80, 90)


def refs_per_article_ranges(corpus: Corpus, bucket_edges=DEFAULT_RANGE_EDGES) -> Histogram:
    """Articles per reference-count range.

    Edges (e0, e1, ..., ek) define buckets e0..e1, e1+1..e2, ... labeled
    "e0-e1", "e1+1-e2"... after the source convention; the top bucket label
    keeps its nominal lower edge ("80-90" covers 81..90). Counts above the
    last edge raise; pass wider edges for heavier-citing corpora.
    """
    edges = list(bucket_edges)
    if len(edges) < 2 or any(b <= a for a, b in zip(edges, edges[1:])):
        raise BadEdges(f"edges must be strictly increasing: {edges}")
    bounds = []
    lo = edges[0]
    for i, hi in enumerate(edges[1:], start=1):
        # top bucket keeps its nominal lower edge in the label ("80-90" covers 81..90)
        label = f"{edges[i - 1]}-{hi}" if i == len(edges) - 1 and i > 1 else f"{lo}-{hi}"
        bounds.append((lo, hi, label))
        lo = hi + 1
    hist = Histogram("references per article")
    for article in corpus.articles:
        n = len(article.references)
        for lo, hi, label in bounds:
            if lo <= n <= hi:
                hist.add(label)
                break
        else:
            raise BadEdges(f"article {article.id!r} has {n} references, beyond edge {edges[-1]}")
    return hist


@dataclass
class FormatBreakdown:
    total: Histogram
    per_year: dict[int, Histogram] = field(default_factory=dict)


def format_distribution(corpus: Corpus) -> FormatBreakdown:
    """Reference counts per bibliographic source type, total and by year."""
    total: Counter = Counter()
    per_year: dict[int, Counter] = {}
    for article in corpus.articles:
        year_counts = per_year.setdefault(article.year, Counter())
        for ref in article.references:
            total[ref.source_type] += 1
            year_counts[ref.source_type] += 1
    return FormatBreakdown(
        total=Histogram("reference formats", dict(total)),
        per_year={y: Histogram(f"reference formats ({y})", dict(c)) for y, c in sorted(per_year.items())},
    )


# --- age profile -------------------------------------------------------------

@dataclass
class AgeBin:
    """One ordered age bin: an exact age or an inclusive range."""

    low: int
    high: int | None  # None = open-ended
    label: str
    count: int

    @property
    def width(self) -> int:
        return 1 if self.high is None else self.high - self.low + 1


@dataclass
class AgeProfile:
    bins: list[AgeBin]
    undated: int
    half_life_integer: int
    half_life_interpolated: float

    @property
    def dated_total(self) -> int:
        return sum(b.count for b in self.bins)

    @property
    def total(self) -> int:
        return self.dated_total + self.undated

    def ages(self) -> Histogram:
        return Histogram("citation ages", {b.label: b.count for b in self.bins})

    def cumulative_share(self, max_age: int) -> float:
        """Share of all references (undated included) aged at most `max_age`."""
        covered = sum(b.count for b in self.bins if b.high is not None and b.high <= max_age)
        return covered / self.total if self.total else 0.0

    def cumulative_series(self) -> list[tuple[int, int]]:
        """(age, cumulative dated citations) pairs, for plotting."""
        out = []
        cum = 0
        for b in self.bins:
            cum += b.count
            out.append((b.high if b.high is not None else b.low, cum))
        return out


def _half_life(bins: list[AgeBin]) -> tuple[int, float]:
    dated = sum(b.count for b in bins)
    if dated == 0:
        return 0, 0.0
    need = dated / 2
    cum = 0
    for b in bins:
        prev = cum
        cum += b.count
        if cum >= need:
            integer = b.low if b.high is None else b.high
            inside = (need - prev) / b.count if b.count else 0.0
            low_edge = integer - b.width
            return integer, low_edge + inside * b.width
    raise AssertionError("cumulative never reached half of total")


def _profile_from_bins(bins: list[AgeBin], undated: int) -> AgeProfile:
    integer, interpolated = _half_life(bins)
    return AgeProfile(
        bins=bins,
        undated=undated,
        half_life_integer=integer,
        half_life_interpolated=interpolated,
    )


def age_profile(corpus: Corpus) -> AgeProfile:
    """Citation ages from the full corpus.

    Age is citing-article year minus reference year, clamped at zero; ages
    0 and 1 merge into the first bin (labeled "1").
    """
    counts: Counter = Counter()
    undated = 0
    for article in corpus.articles:
        for ref in article.references:
            if ref.pub_year is None:
                undated += 1
            else:
                counts[max(max(article.year - ref.pub_year, 0), 1)] += 1
    bins = [AgeBin(low=0 if age == 1 else age, high=age, label=str(age), count=counts[age])
            for age in sorted(counts)]
    return _profile_from_bins(bins, undated)


def _parse_age_key(key) -> tuple[int, int | None] | None:
    """(low, high) bounds for an age-histogram key; None marks undated."""
    text = str(key).strip().lower()
    if text in ("undated", "unknown"):
        return None
    if text.startswith("up to"):
        text = text.split()[-1]
    if text.endswith("+"):
        return (int(text[:-1]), None)
    for sep in ("-", "–"):
        if sep in text:
            lo, hi = (part.strip() for part in text.split(sep, 1))
            if hi in ("", "above", "and above"):
                return (int(lo), None)
            return (int(lo), int(hi))
    if text.endswith("and above"):
        return (int(text.split()[0]), None)
    age = int(text)
    return (0 if age == 1 else age, age)


def age_profile_from_histogram(hist: Histogram) -> AgeProfile:
    """Citation ages from a pre-tabulated age histogram.

    Keys may be exact ages ("1".."30"), ranges ("31-40", "51+") and an
    "undated" row; the first bin covers ages up to 1.
    """
    undated = 0
    parsed = []
    for key, count in hist.bins.items():
        try:
            bounds = _parse_age_key(key)
        except ValueError:
            raise MissingBin(f"unrecognized age key {key!r}")
        if bounds is None:
            undated += count
        else:
            parsed.append(AgeBin(low=bounds[0], high=bounds[1], label=str(key), count=count))
    parsed.sort(key=lambda b: (b.low, b.high if b.high is not None else float("inf")))
    return _profile_from_bins(parsed, undated)


# --- publication-year matrix --------------------------------------------------

@dataclass
class PublicationYearMatrix:
    """Reference publication years crossed with citing years.

    Row key None collects undated references.
    """

    cells: dict[tuple[int | None, int], int]

    def row_totals(self) -> dict[int | None, int]:
        totals: Counter = Counter()
        for (pub, _), n in self.cells.items():
            totals[pub] += n
        return dict(totals)

    def column_totals(self) -> dict[int, int]:
        totals: Counter = Counter()
        for (_, citing), n in self.cells.items():
            totals[citing] += n
        return dict(totals)

    def citing_years(self) -> list[int]:
        return sorted({citing for _, citing in self.cells})

    def pub_years(self) -> list[int | None]:
        years = sorted({pub for pub, _ in self.cells if pub is not None}, reverse=True)
        if any(pub is None for pub, _ in self.cells):
            years.append(None)
        return years


def publication_year_matrix(corpus: Corpus) -> PublicationYearMatrix:
    cells: Counter = Counter()
    for article in corpus.articles:
        for ref in article.references:
            cells[(ref.pub_year, article.year)] += 1
    return PublicationYearMatrix(cells=dict(cells))


# --- cited journals and zones -------------------------------------------------

def journal_frequency(corpus: Corpus, include_self: bool = False) -> Histogram:
    """Ranked frequency table of cited journal titles (normalized).

    The corpus journal's own title is excluded by default; self-citation is
    reported separately. Use ranked() for the descending order.
    """
    self_key = corpus.journal_key
    counts: Counter = Counter()
    for article in corpus.articles:
        for ref in article.references:
            if ref.source_type == "journal":
                key = normalize_journal_title(ref.journal_title)
                if include_self or key != self_key:
                    counts[key] += 1
    return Histogram("cited journals", dict(counts))


@dataclass
class ZoneRecord:
    journal_count: int
    citation_count: int
    titles: list[str] = field(default_factory=list)


@dataclass
class BradfordPartition:
    zones: list[ZoneRecord]
    ratios: list[float]
    b_estimate: float

    def journal_counts(self) -> list[int]:
        return [z.journal_count for z in self.zones]

    def citation_counts(self) -> list[int]:
        return [z.citation_count for z in self.zones]


def bradford_partition(freqs: Histogram, k: int = 3) -> BradfordPartition:
    """Split the ranked journal list into k zones of near-equal citation yield.

    Walking down the ranking, zone m ends at the first journal whose
    inclusion makes the cumulative citation count reach m * total / k; the
    boundary journal stays in the earlier zone. A dominant head journal can
    leave later zones empty.
    """
    if k < 2:
        raise ValueError("zone count must be at least 2")
    ranked = freqs.ranked()
    if len(ranked) < k:
        raise TooFewJournals(f"need at least {k} journals, have {len(ranked)}")
    total = freqs.total()
    zones = [ZoneRecord(0, 0) for _ in range(k)]
    zone = 0
    cum = 0
    for title, count in ranked:
        cum += count
        rec = zones[zone]
        rec.journal_count += 1
        rec.citation_count += count
        rec.titles.append(str(title))
        while zone < k - 1 and cum * k >= (zone + 1) * total:
            zone += 1
    n1 = zones[0].journal_count
    nk = zones[-1].journal_count
    ratios = [z.journal_count / n1 if n1 else math.inf for z in zones]
    b = (nk / n1) ** (1 / (k - 1)) if n1 else math.inf
    return BradfordPartition(zones=zones, ratios=ratios, b_estimate=b)


# --- self-citation and language -----------------------------------------------

@dataclass
class SelfCitationSummary:
    journal: str
    per_year: dict[int, tuple[int, int]]
    citing_articles: int
    self_citations: int
    total_references: int

    @property
    def rate(self) -> float:
        return self.self_citations / self.total_references if self.total_references else 0.0


def self_citation(corpus: Corpus, journal_name: str | None = None) -> SelfCitationSummary:
    """References whose journal title matches the corpus journal itself.

    A reference is a self-citation when its normalized journal title equals
    the (normalized) corpus journal name. Rate = self / total references.
    """
    key = normalize_journal_title(journal_name) if journal_name else corpus.journal_key
    per_year: dict[int, list[int]] = {}
    citing_articles = 0
    for article in corpus.articles:
        pair = per_year.setdefault(article.year, [0, 0])
        hit = False
        for ref in article.references:
            pair[1] += 1
            if ref.source_type == "journal" and normalize_journal_title(ref.journal_title) == key:
                pair[0] += 1
                hit = True
        citing_articles += hit
    return SelfCitationSummary(
        journal=journal_name or corpus.journal_name,
        per_year={y: (s, t) for y, (s, t) in sorted(per_year.items())},
        citing_articles=citing_articles,
        self_citations=sum(s for s, _ in per_year.values()),
        total_references=sum(t for _, t in per_year.values()),
    )


@dataclass
class LanguageBreakdown:
    languages: Histogram
    non_english: list[tuple[str, str, int]]  # (journal title, language, count)

    def non_english_total(self) -> int:
        return sum(n for _, _, n in self.non_english)


def language_distribution(corpus: Corpus) -> LanguageBreakdown:
    """Reference counts per language label; default label is English."""
    languages: Counter = Counter()
    titles: Counter = Counter()
    for article in corpus.articles:
        for ref in article.references:
            languages[ref.language] += 1
            if ref.language != "English":
                title = normalize_journal_title(ref.journal_title) if ref.journal_title else "(untitled)"
                titles[(title, ref.language)] += 1
    return LanguageBreakdown(
        languages=Histogram("reference languages", dict(languages)),
        non_english=[(t, lang, n) for (t, lang), n in sorted(titles.items())],
    )
