"""Productivity time series, power-law fitting of author output, core authors.

The author-productivity law fitted here states that the number of authors
with n publications falls off as a1 / n^c. The classical two-point method
estimates c from the n=1 and n=2 bins only; a least-squares variant over
all bins is provided as a clearly-labeled alternative.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus, unique_authors
from .errors import MissingBin
from .histogram import Histogram
from .numfmt import round_half_up


@dataclass
class ArticlesPerYear:
    counts: Histogram
    mean: float

    def percentages(self) -> list[tuple[int, int, float, float]]:
        """Rows of (year, count, pct, cumulative pct) at full precision."""
        total = self.counts.total()
        rows = []
        cum = 0
        for year, n in self.counts.items_by_key():
            cum += n
            rows.append((year, n, 100.0 * n / total, 100.0 * cum / total))
        return rows


def articles_per_year(corpus: Corpus) -> ArticlesPerYear:
    counts = Counter(a.year for a in corpus.articles)
    hist = Histogram("articles per year", dict(counts))
    mean = hist.total() / len(counts) if counts else 0.0
    return ArticlesPerYear(counts=hist, mean=mean)


def authorships_per_year(corpus: Corpus) -> Histogram:
    """Authorship slots (not unique names) per publication year."""
    counts: Counter = Counter()
    for article in corpus.articles:
        counts[article.year] += len(article.authors)
    return Histogram("authorships per year", {y: n for y, n in counts.items() if n})


def author_productivity_histogram(corpus: Corpus) -> Histogram:
    """Observed frequency of authors with n publications (n -> authors)."""
    counts = Counter(unique_authors(corpus).values())
    return Histogram("authors with n publications", dict(counts))


@dataclass
class LotkaFit:
    """Result of fitting expected author counts a1 / n^c to an observed table.

    `expected` bins are rounded half-up to integers. `max_abs_dev` is the
    largest |observed - expected| over the observed bins. The chi-square
    statistic is computed over bins with expected count >= 5; no pass
    threshold is applied.
    """

    c: float
    a1: int
    observed: Histogram
    expected: Histogram
    max_abs_dev: int
    total_observed: int
    total_expected: int
    chi_square: float
    chi_square_bins: int
    method: str = "two-point"


def lotka_expected(a1: int, c: float, ns) -> Histogram:
    """Expected counts round_half_up(a1 / n^c) for each n in `ns`."""
    if a1 < 0:
        raise ValueError("a1 must be non-negative")
    if c <= 0:
        raise ValueError("exponent must be positive")
    bins = {int(n): round_half_up(a1 / float(n) ** c) for n in ns}
    return Histogram(f"expected authors (c={c:g})", bins)


def _fit(observed: Histogram, c: float, method: str) -> LotkaFit:
    a1 = observed.get(1)
    ns = sorted(int(k) for k in observed.bins)
    expected = lotka_expected(a1, c, ns)
    max_abs_dev = max(abs(observed.get(n) - expected.get(n)) for n in ns)
    chi = 0.0
    chi_bins = 0
    for n in ns:
        e = expected.get(n)
        if e >= 5:
            chi += (observed.get(n) - e) ** 2 / e
            chi_bins += 1
    return LotkaFit(
        c=c,
        a1=a1,
        observed=observed,
        expected=expected,
        max_abs_dev=max_abs_dev,
        total_observed=observed.total(),
        total_expected=expected.total(),
        chi_square=chi,
        chi_square_bins=chi_bins,
        method=method,
    )


def _require_bin(observed: Histogram, n: int) -> int:
    value = observed.get(n)
    if value <= 0:
        raise MissingBin(f"observed histogram needs a non-zero n={n} bin")
    return value


def lotka_fit_two_point(observed: Histogram) -> LotkaFit:
    """Fit the exponent from the n=1 and n=2 bins: c = log(a1/a2) / log 2."""
    a1 = _require_bin(observed, 1)
    a2 = _require_bin(observed, 2)
    c = math.log(a1 / a2) / math.log(2)
    return _fit(observed, c, method="two-point")


def lotka_fit_fixed(observed: Histogram, c: float) -> LotkaFit:
    """Expected-vs-observed comparison at a caller-chosen exponent."""
    _require_bin(observed, 1)
    return _fit(observed, float(c), method=f"fixed-c{c:g}")


def lotka_fit_c2(observed: Histogram) -> LotkaFit:
    """Comparison against the classical inverse-square law (c fixed at 2)."""
    return lotka_fit_fixed(observed, 2.0)


def lotka_fit_least_squares(observed: Histogram) -> LotkaFit:
    """Least-squares fit of log(a_n) on log(n) over all non-zero bins.

    Not the classical two-point method; provided as an alternative only.
    """
    _require_bin(observed, 1)
    points = [(math.log(int(n)), math.log(v)) for n, v in observed.bins.items() if v > 0]
    if len(points) < 2:
        raise MissingBin("least-squares fit needs at least two non-zero bins")
    n = len(points)
    sx = sum(x for x, _ in points)
    sy = sum(y for _, y in points)
    sxx = sum(x * x for x, _ in points)
    sxy = sum(x * y for x, y in points)
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    return _fit(observed, -slope, method="least-squares")


def two_point_c_display(a1: int, a2: int) -> str:
    """The exponent as the source convention prints it.

    Intermediate base-10 logs are rounded to 3 decimals before dividing and
    the quotient is shown to 1 decimal, so 1084/204 comes out as "2.4".
    """
    num = round(math.log10(a1 / a2), 3)
    den = round(math.log10(2), 3)
    return f"{num / den:.1f}"


@dataclass
class AuthorCohort:
    rank_group: int
    paper_count: int
    members: list[tuple[str, str]] = field(default_factory=list)


def core_authors(corpus: Corpus, min_count: int = 1) -> list[AuthorCohort]:
    """Authors grouped by identical paper count, most productive first.

    Within a cohort, names sort lexicographically. The affiliation shown is
    the author's most frequent one (ties broken lexicographically).
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts = unique_authors(corpus)
    affiliations: dict[str, Counter] = {}
    for article in corpus.articles:
        for author in article.authors:
            affiliations.setdefault(author.name, Counter())[author.affiliation] += 1
    by_count: dict[int, list[str]] = {}
    for name, n in counts.items():
        if n >= min_count:
            by_count.setdefault(n, []).append(name)
    cohorts = []
    for rank, n in enumerate(sorted(by_count, reverse=True), start=1):
        members = []
        for name in sorted(by_count[n]):
            main_affiliation = min(
                affiliations[name].items(), key=lambda kv: (-kv[1], kv[0])
            )[0]
            members.append((name, main_affiliation))
        cohorts.append(AuthorCohort(rank_group=rank, paper_count=n, members=members))
    return cohorts
