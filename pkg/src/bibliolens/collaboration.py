"""Co-authorship patterns, degree of collaboration, country and affiliation splits.

The degree of collaboration is the multi-authored fraction of output,
C = Nm / (Nm + Ns). Collaboration classes follow the four-way scheme:
single author, all authors sharing one affiliation, several affiliations
within one country, and authors from several countries.

Authors with country "unknown" are excluded from country sets: they never
make an article purely foreign, and an article whose authors are all
unknown counts as purely home.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .corpus import Article, Corpus, UNKNOWN_COUNTRY, normalize_name
from .errors import EmptyCorpus, NoAuthors
from .histogram import Histogram

SINGLE = "single"
SAME_AFFILIATION = "same_affiliation"
DIFF_AFFILIATION_SAME_COUNTRY = "diff_affiliation_same_country"
DIFF_COUNTRIES = "diff_countries"
CLASSES = (SINGLE, SAME_AFFILIATION, DIFF_AFFILIATION_SAME_COUNTRY, DIFF_COUNTRIES)


@dataclass
class CoauthorshipPattern:
    total: Histogram
    per_year: dict[int, Histogram] = field(default_factory=dict)


def coauthorship_histogram(corpus: Corpus) -> CoauthorshipPattern:
    """Articles per author-count, overall and by year."""
    total: Counter = Counter()
    per_year: dict[int, Counter] = {}
    for article in corpus.articles:
        k = len(article.authors)
        total[k] += 1
        per_year.setdefault(article.year, Counter())[k] += 1
    return CoauthorshipPattern(
        total=Histogram("authors per article", dict(total)),
        per_year={y: Histogram(f"authors per article ({y})", dict(c)) for y, c in sorted(per_year.items())},
    )


@dataclass
class CollaborationSummary:
    ns: int
    nm: int
    c: float
    per_year: dict[int, tuple[int, int, float]] = field(default_factory=dict)


def degree_of_collaboration(corpus: Corpus) -> CollaborationSummary:
    """C = Nm / (Nm + Ns) overall and per year, at full precision."""
    if not corpus.articles:
        raise EmptyCorpus("degree of collaboration needs at least one article")
    ns = nm = 0
    per_year: dict[int, list[int]] = {}
    for article in corpus.articles:
        multi = len(article.authors) > 1
        nm += multi
        ns += not multi
        pair = per_year.setdefault(article.year, [0, 0])
        pair[1 if multi else 0] += 1
    return CollaborationSummary(
        ns=ns,
        nm=nm,
        c=nm / (nm + ns),
        per_year={
            y: (s, m, m / (m + s)) for y, (s, m) in sorted(per_year.items())
        },
    )


def _countries(article: Article) -> set[str]:
    return {a.country for a in article.authors if a.country != UNKNOWN_COUNTRY}


def classify_collaboration(article: Article) -> str:
    if not article.authors:
        raise NoAuthors(f"article {article.id!r} has no authors")
    if len(article.authors) == 1:
        return SINGLE
    if len(_countries(article)) >= 2:
        return DIFF_COUNTRIES
    affiliations = {normalize_name(a.affiliation) for a in article.authors}
    if len(affiliations) == 1:
        return SAME_AFFILIATION
    return DIFF_AFFILIATION_SAME_COUNTRY


@dataclass
class CollabClassCounts:
    single: int
    same_affiliation: int
    diff_affiliation_same_country: int
    diff_countries: int
    per_year: dict[int, dict[str, int]] = field(default_factory=dict)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.single, self.same_affiliation,
                self.diff_affiliation_same_country, self.diff_countries)


def classify_counts(corpus: Corpus) -> CollabClassCounts:
    total: Counter = Counter()
    per_year: dict[int, Counter] = {}
    for article in corpus.articles:
        cls = classify_collaboration(article)
        total[cls] += 1
        per_year.setdefault(article.year, Counter())[cls] += 1
    return CollabClassCounts(
        single=total[SINGLE],
        same_affiliation=total[SAME_AFFILIATION],
        diff_affiliation_same_country=total[DIFF_AFFILIATION_SAME_COUNTRY],
        diff_countries=total[DIFF_COUNTRIES],
        per_year={
            y: {cls: c[cls] for cls in CLASSES} for y, c in sorted(per_year.items())
        },
    )


PURELY_HOME = "purely_home"
MIXED = "mixed"
PURELY_FOREIGN = "purely_foreign"


@dataclass
class CountrySplit:
    home: str
    authorships_per_year: dict[int, tuple[int, int]]
    home_authorships: int
    foreign_authorships: int
    articles_per_year: dict[int, tuple[int, int, int]]
    purely_home: int
    mixed: int
    purely_foreign: int


def split_article(article: Article, home: str) -> str:
    """purely_home / mixed / purely_foreign based on known countries only."""
    countries = _countries(article)
    if not countries:
        return PURELY_HOME
    has_home = home in countries
    has_foreign = bool(countries - {home})
    if has_home and has_foreign:
        return MIXED
    return PURELY_HOME if has_home else PURELY_FOREIGN


def country_split(corpus: Corpus, home: str) -> CountrySplit:
    """Home vs foreign authorships per year plus the article-level split."""
    if not home:
        raise ValueError("home country label must be non-empty")
    auth_years: dict[int, list[int]] = {}
    art_years: dict[int, Counter] = {}
    for article in corpus.articles:
        pair = auth_years.setdefault(article.year, [0, 0])
        for author in article.authors:
            # unknown-country authors count on the home side of the tally
            pair[0 if author.country in (home, UNKNOWN_COUNTRY) else 1] += 1
        art_years.setdefault(article.year, Counter())[split_article(article, home)] += 1
    totals = Counter()
    for c in art_years.values():
        totals.update(c)
    return CountrySplit(
        home=home,
        authorships_per_year={y: (h, f) for y, (h, f) in sorted(auth_years.items())},
        home_authorships=sum(h for h, _ in auth_years.values()),
        foreign_authorships=sum(f for _, f in auth_years.values()),
        articles_per_year={
            y: (c[PURELY_HOME], c[MIXED], c[PURELY_FOREIGN]) for y, c in sorted(art_years.items())
        },
        purely_home=totals[PURELY_HOME],
        mixed=totals[MIXED],
        purely_foreign=totals[PURELY_FOREIGN],
    )


def country_pair_matrix(corpus: Corpus) -> dict[tuple[str, ...], int]:
    """Article counts per distinct multi-country combination.

    Keys are sorted country tuples; only articles spanning at least two
    known countries appear.
    """
    matrix: Counter = Counter()
    for article in corpus.articles:
        countries = _countries(article)
        if len(countries) >= 2:
            matrix[tuple(sorted(countries))] += 1
    return dict(matrix)


@dataclass
class AffiliationBreakdown:
    """Unique-affiliation and unique-author counts per affiliation type.

    Affiliation identity is the normalized string; author identity the
    normalized name. "Home" is membership of the given country label.
    """

    home: str
    affiliations: dict[str, tuple[int, int]]
    authors: dict[str, tuple[int, int]]

    def affiliation_total(self) -> int:
        return sum(h + f for h, f in self.affiliations.values())

    def author_total(self) -> int:
        return sum(h + f for h, f in self.authors.values())


def affiliation_type_distribution(corpus: Corpus, home: str) -> AffiliationBreakdown:
    affil_seen: dict[str, tuple[str, bool]] = {}
    author_seen: dict[str, tuple[str, bool]] = {}
    for article in corpus.articles:
        for author in article.authors:
            is_home = author.country in (home, UNKNOWN_COUNTRY)
            affil_seen.setdefault(normalize_name(author.affiliation), (author.affiliation_type, is_home))
            author_seen.setdefault(author.name, (author.affiliation_type, is_home))
    affiliations: dict[str, list[int]] = {}
    for _, (atype, is_home) in affil_seen.items():
        affiliations.setdefault(atype, [0, 0])[0 if is_home else 1] += 1
    authors: dict[str, list[int]] = {}
    for _, (atype, is_home) in author_seen.items():
        authors.setdefault(atype, [0, 0])[0 if is_home else 1] += 1
    return AffiliationBreakdown(
        home=home,
        affiliations={t: (h, f) for t, (h, f) in sorted(affiliations.items())},
        authors={t: (h, f) for t, (h, f) in sorted(authors.items())},
    )
