"""Exception hierarchy.

Two families matter to callers: ``ValidationError`` covers malformed or
inconsistent input data, ``AnalysisError`` covers analyses invoked on data
that does not satisfy their preconditions. The CLI maps them to exit codes
2 and 3 respectively.
"""


class BiblioError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(BiblioError):
    """Input data is malformed or violates a corpus invariant."""


class SchemaError(ValidationError):
    """File does not match the expected schema.

    ``locator`` identifies the offending record or line where known.
    """

    def __init__(self, message, locator=None):
        self.locator = locator
        super().__init__(f"{message} (at {locator})" if locator else message)


class DuplicateId(ValidationError):
    """Two articles share the same id."""


class YearOutOfRange(ValidationError):
    """An article year falls outside the corpus year range."""


class NegativeCount(ValidationError):
    """A histogram count is negative."""


class DuplicateAuthorInArticle(ValidationError):
    """The same normalized author name appears twice on one article."""


class AnalysisError(BiblioError):
    """An analysis precondition is not met."""


class MissingBin(AnalysisError):
    """A required histogram bin is absent or zero."""


class EmptyCorpus(AnalysisError):
    """The analysis needs at least one article."""


class NoAuthors(AnalysisError):
    """The article has no authors."""


class BadEdges(AnalysisError):
    """Bucket edges are not strictly increasing."""


class TooFewJournals(AnalysisError):
    """Fewer journals than requested zones."""


class ZeroDenominator(AnalysisError):
    """Impact factor denominator is zero."""


class InsufficientYears(AnalysisError):
    """The citation window extends before the corpus year range."""
