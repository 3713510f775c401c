"""Corpus data model, ingestion, validation and name normalization.

A Corpus is an immutable collection of Article records for one journal
over an inclusive year range. It is the root input of every full-record
analysis; aggregate analyses accept Histograms instead (see histogram.py).

The JSON schema is documented in the README. Strict loading rejects
unknown keys; lenient loading warns about them instead.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

from .errors import (
    DuplicateAuthorInArticle,
    DuplicateId,
    SchemaError,
    YearOutOfRange,
)

log = logging.getLogger(__name__)

ARTICLE_TYPES = frozenset(
    ["original", "cme", "case_report", "short_communication", "correspondence", "editorial", "other"]
)
AFFILIATION_TYPES = frozenset(
    ["hospital", "higher_institution", "government_agency", "medical_center",
     "clinic", "private_org", "international_org", "unknown"]
)
SOURCE_TYPES = frozenset(
    ["journal", "book", "conference", "web", "government", "international_org",
     "thesis", "newspaper", "other"]
)
DOC_TYPES = frozenset(
    ["journal_article", "thesis", "book", "conference", "government", "other"]
)

UNKNOWN_COUNTRY = "unknown"


def normalize_name(raw: str) -> str:
    """Canonical form of an author name.

    Trims, collapses internal whitespace runs to single spaces, uppercases,
    and strips terminal periods. Idempotent; empty input gives empty output.
    """
    collapsed = " ".join(raw.split())
    return collapsed.upper().rstrip(" .")


def normalize_journal_title(raw: str) -> str:
    """Canonical form of a journal title (same rules as author names)."""
    return normalize_name(raw)


@dataclass(frozen=True)
class AuthorRecord:
    name: str
    affiliation: str
    affiliation_type: str
    country: str


@dataclass(frozen=True)
class Reference:
    """One work cited by an article.

    `pub_year` is None for undated references; they stay in totals but are
    excluded from age statistics. `journal_title` is present exactly when
    `source_type` is "journal".
    """

    source_type: str
    pub_year: int | None
    journal_title: str | None = None
    language: str = "English"


@dataclass(frozen=True)
class ReceivedCitation:
    citing_year: int
    doc_type: str
    citing_countries: tuple[str, ...] = ()
    citing_source: str | None = None
    is_self: bool = False


@dataclass(frozen=True)
class Article:
    id: str
    year: int
    title: str
    article_type: str
    keywords: tuple[str, ...] = ()
    authors: tuple[AuthorRecord, ...] = ()
    references: tuple[Reference, ...] = ()
    received: tuple[ReceivedCitation, ...] = ()
    funders: tuple[str, ...] = ()


@dataclass(frozen=True)
class Corpus:
    """Immutable article collection; safe to share across threads."""

    journal_name: str
    year_start: int
    year_end: int
    articles: tuple[Article, ...] = ()

    @property
    def years(self) -> range:
        return range(self.year_start, self.year_end + 1)

    @property
    def journal_key(self) -> str:
        return normalize_journal_title(self.journal_name)

    def articles_in(self, year: int) -> list[Article]:
        return [a for a in self.articles if a.year == year]


# --- ingestion -------------------------------------------------------------

_ARTICLE_KEYS = {"id", "year", "title", "type", "keywords", "authors", "references", "received", "funders"}
_AUTHOR_KEYS = {"name", "affiliation", "affiliation_type", "country"}
_REFERENCE_KEYS = {"source_type", "pub_year", "journal_title", "language"}
_RECEIVED_KEYS = {"citing_year", "doc_type", "citing_countries", "citing_source", "is_self"}
_TOP_KEYS = {"journal", "year_start", "year_end", "articles"}


def _check_keys(obj: dict, allowed: set, required: set, locator: str, strict: bool) -> None:
    unknown = set(obj) - allowed
    if unknown:
        if strict:
            raise SchemaError(f"unknown keys {sorted(unknown)}", locator=locator)
        log.warning("ignoring unknown keys %s at %s", sorted(unknown), locator)
    missing = required - set(obj)
    if missing:
        raise SchemaError(f"missing keys {sorted(missing)}", locator=locator)


def _expect(value, types, what: str, locator: str):
    if not isinstance(value, types) or isinstance(value, bool) and types is int:
        raise SchemaError(f"{what} must be {types}, got {type(value).__name__}", locator=locator)
    return value


def _parse_enum(value, allowed: frozenset, what: str, locator: str) -> str:
    if not isinstance(value, str) or value not in allowed:
        raise SchemaError(f"{what} {value!r} is not one of {sorted(allowed)}", locator=locator)
    return value


def _parse_author(obj, locator: str, strict: bool) -> AuthorRecord:
    if not isinstance(obj, dict):
        raise SchemaError("author must be an object", locator=locator)
    _check_keys(obj, _AUTHOR_KEYS, _AUTHOR_KEYS, locator, strict)
    name = normalize_name(_expect(obj["name"], str, "name", locator))
    if not name:
        raise SchemaError("author name is empty", locator=locator)
    country = _expect(obj["country"], str, "country", locator)
    if not country:
        raise SchemaError("country label is empty (use 'unknown')", locator=locator)
    return AuthorRecord(
        name=name,
        affiliation=_expect(obj["affiliation"], str, "affiliation", locator),
        affiliation_type=_parse_enum(obj["affiliation_type"], AFFILIATION_TYPES, "affiliation_type", locator),
        country=country,
    )


def _parse_reference(obj, locator: str, strict: bool) -> Reference:
    if not isinstance(obj, dict):
        raise SchemaError("reference must be an object", locator=locator)
    _check_keys(obj, _REFERENCE_KEYS, {"source_type", "pub_year"}, locator, strict)
    source_type = _parse_enum(obj["source_type"], SOURCE_TYPES, "source_type", locator)
    pub_year = obj["pub_year"]
    if pub_year is not None:
        pub_year = _expect(pub_year, int, "pub_year", locator)
    journal_title = obj.get("journal_title")
    if source_type == "journal":
        if not journal_title:
            raise SchemaError("journal reference without journal_title", locator=locator)
        journal_title = _expect(journal_title, str, "journal_title", locator)
    elif journal_title is not None:
        raise SchemaError(f"journal_title given for source_type {source_type!r}", locator=locator)
    language = obj.get("language", "English")
    return Reference(
        source_type=source_type,
        pub_year=pub_year,
        journal_title=journal_title,
        language=_expect(language, str, "language", locator),
    )


def _parse_received(obj, locator: str, strict: bool) -> ReceivedCitation:
    if not isinstance(obj, dict):
        raise SchemaError("received citation must be an object", locator=locator)
    _check_keys(obj, _RECEIVED_KEYS, {"citing_year", "doc_type", "citing_countries", "is_self"}, locator, strict)
    countries = obj["citing_countries"]
    if not isinstance(countries, list) or not all(isinstance(c, str) for c in countries):
        raise SchemaError("citing_countries must be a list of strings", locator=locator)
    source = obj.get("citing_source")
    if source is not None:
        source = _expect(source, str, "citing_source", locator)
    if not isinstance(obj["is_self"], bool):
        raise SchemaError("is_self must be a boolean", locator=locator)
    return ReceivedCitation(
        citing_year=_expect(obj["citing_year"], int, "citing_year", locator),
        doc_type=_parse_enum(obj["doc_type"], DOC_TYPES, "doc_type", locator),
        citing_countries=tuple(countries),
        citing_source=source,
        is_self=obj["is_self"],
    )


def _parse_article(obj, index: int, strict: bool) -> Article:
    locator = f"articles[{index}]"
    if not isinstance(obj, dict):
        raise SchemaError("article must be an object", locator=locator)
    _check_keys(obj, _ARTICLE_KEYS, _ARTICLE_KEYS, locator, strict)
    title = _expect(obj["title"], str, "title", locator)
    if not title.strip():
        raise SchemaError("title is empty", locator=locator)
    article_type = _parse_enum(obj["type"], ARTICLE_TYPES, "type", locator)
    keywords = obj["keywords"]
    if not isinstance(keywords, list) or not all(isinstance(k, str) for k in keywords):
        raise SchemaError("keywords must be a list of strings", locator=locator)
    funders = obj["funders"]
    if not isinstance(funders, list) or not all(isinstance(fn, str) for fn in funders):
        raise SchemaError("funders must be a list of strings", locator=locator)
    authors = tuple(
        _parse_author(a, f"{locator}.authors[{i}]", strict) for i, a in enumerate(obj["authors"])
    )
    if not authors and article_type not in ("editorial", "other"):
        raise SchemaError(
            f"article of type {article_type!r} has no authors", locator=locator
        )
    references = tuple(
        _parse_reference(r, f"{locator}.references[{i}]", strict) for i, r in enumerate(obj["references"])
    )
    received = tuple(
        _parse_received(r, f"{locator}.received[{i}]", strict) for i, r in enumerate(obj["received"])
    )
    return Article(
        id=str(_expect(obj["id"], (str, int), "id", locator)),
        year=_expect(obj["year"], int, "year", locator),
        title=title,
        article_type=article_type,
        keywords=tuple(keywords),
        authors=authors,
        references=references,
        received=received,
        funders=tuple(funders),
    )


def corpus_from_dict(data: dict, strict: bool = True) -> Corpus:
    """Build and validate a Corpus from parsed JSON data."""
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    _check_keys(data, _TOP_KEYS, _TOP_KEYS, "top level", strict)
    journal = _expect(data["journal"], str, "journal", "top level")
    year_start = _expect(data["year_start"], int, "year_start", "top level")
    year_end = _expect(data["year_end"], int, "year_end", "top level")
    if year_end < year_start:
        raise SchemaError(f"year_end {year_end} before year_start {year_start}", locator="top level")
    if not isinstance(data["articles"], list):
        raise SchemaError("articles must be a list", locator="top level")
    articles = tuple(_parse_article(a, i, strict) for i, a in enumerate(data["articles"]))
    seen_ids: set[str] = set()
    for i, article in enumerate(articles):
        if article.id in seen_ids:
            raise DuplicateId(f"duplicate article id {article.id!r} (articles[{i}])")
        seen_ids.add(article.id)
        if not (year_start <= article.year <= year_end):
            raise YearOutOfRange(
                f"article {article.id!r} year {article.year} outside {year_start}..{year_end}"
            )
    return Corpus(journal_name=journal, year_start=year_start, year_end=year_end, articles=articles)


def load_corpus(path, strict: bool = True) -> Corpus:
    """Load, validate and normalize a corpus JSON file."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc.msg}", locator=f"{path}:{exc.lineno}")
    return corpus_from_dict(data, strict=strict)


def corpus_to_dict(corpus: Corpus) -> dict:
    """Serialize a Corpus back to its JSON object form (round-trippable)."""
    articles = []
    for a in corpus.articles:
        obj = {
            "id": a.id,
            "year": a.year,
            "title": a.title,
            "type": a.article_type,
            "keywords": list(a.keywords),
            "authors": [
                {"name": au.name, "affiliation": au.affiliation,
                 "affiliation_type": au.affiliation_type, "country": au.country}
                for au in a.authors
            ],
            "references": [],
            "received": [
                {k: v for k, v in (
                    ("citing_year", r.citing_year), ("doc_type", r.doc_type),
                    ("citing_countries", list(r.citing_countries)),
                    ("citing_source", r.citing_source), ("is_self", r.is_self))
                 if not (k == "citing_source" and v is None)}
                for r in a.received
            ],
            "funders": list(a.funders),
        }
        for r in a.references:
            ref = {"source_type": r.source_type, "pub_year": r.pub_year}
            if r.journal_title is not None:
                ref["journal_title"] = r.journal_title
            if r.language != "English":
                ref["language"] = r.language
            obj["references"].append(ref)
        articles.append(obj)
    return {
        "journal": corpus.journal_name,
        "year_start": corpus.year_start,
        "year_end": corpus.year_end,
        "articles": articles,
    }


def save_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(corpus_to_dict(corpus), fh, ensure_ascii=False, indent=1)
        fh.write("\n")


def unique_authors(corpus: Corpus) -> dict[str, int]:
    """Publication count per unique (normalized) author name.

    Each article contributes one count per listed author; the same name
    twice on one article is a data error, not a double contribution.
    """
    counts: dict[str, int] = {}
    for article in corpus.articles:
        seen: set[str] = set()
        for author in article.authors:
            if author.name in seen:
                raise DuplicateAuthorInArticle(
                    f"author {author.name!r} listed twice on article {article.id!r}"
                )
            seen.add(author.name)
            counts[author.name] = counts.get(author.name, 0) + 1
    return counts


def total_authorships(corpus: Corpus) -> int:
    return sum(len(a.authors) for a in corpus.articles)
