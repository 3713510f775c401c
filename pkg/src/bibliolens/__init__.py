"""bibliolens: bibliometric indicators for journal-article corpora.

Ingests full article corpora (JSON) or pre-tabulated frequency histograms
(CSV) and computes the classical indicator suite: productivity series,
author-productivity power-law fits, collaboration degrees and patterns,
reference profiles with citation half-life, core-journal zones,
self-citation, received-citation profiles and impact factors.
"""

from .corpus import (
    Article,
    AuthorRecord,
    Corpus,
    ReceivedCitation,
    Reference,
    corpus_from_dict,
    corpus_to_dict,
    load_corpus,
    normalize_journal_title,
    normalize_name,
    save_corpus,
    total_authorships,
    unique_authors,
)
from .histogram import Histogram, load_histogram, save_histogram

__version__ = "0.1.0"

__all__ = [
    "Article",
    "AuthorRecord",
    "Corpus",
    "Histogram",
    "ReceivedCitation",
    "Reference",
    "corpus_from_dict",
    "corpus_to_dict",
    "load_corpus",
    "load_histogram",
    "normalize_journal_title",
    "normalize_name",
    "save_corpus",
    "save_histogram",
    "total_authorships",
    "unique_authors",
]
