"""Generic frequency table.

A Histogram is the carrier for every aggregate result in the toolkit and
for aggregate-mode inputs: any analysis that can run from a pre-tabulated
frequency table accepts one directly, so published tables can be fed in
without a full record corpus.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

from .errors import NegativeCount, SchemaError

Key = int | str


@dataclass
class Histogram:
    """Frequency table mapping keys (ints or text) to non-negative counts."""

    label: str = ""
    bins: dict[Key, int] = field(default_factory=dict)

    def __post_init__(self):
        for k, v in self.bins.items():
            if not isinstance(v, int) or v < 0:
                raise NegativeCount(f"count for {k!r} is {v!r}")

    def total(self) -> int:
        return sum(self.bins.values())

    def get(self, key: Key, default: int = 0) -> int:
        return self.bins.get(key, default)

    def add(self, key: Key, n: int = 1) -> None:
        if n < 0:
            raise NegativeCount(f"cannot add {n} to {key!r}")
        self.bins[key] = self.bins.get(key, 0) + n

    def items_by_key(self) -> list[tuple[Key, int]]:
        """Bins sorted by key (numerically for int keys)."""
        return sorted(self.bins.items(), key=lambda kv: (isinstance(kv[0], str), kv[0]))

    def ranked(self) -> list[tuple[Key, int]]:
        """Bins sorted by descending count; ties broken lexicographically."""
        return sorted(self.bins.items(), key=lambda kv: (-kv[1], str(kv[0])))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Histogram):
            return NotImplemented
        return self.label == other.label and self.bins == other.bins


def load_histogram(path, key_kind: str = "integer", label: str | None = None) -> Histogram:
    """Load a two-column CSV (header ``key,count``) into a Histogram.

    `key_kind` is "integer" or "text". Counts must be non-negative integers.
    """
    if key_kind not in ("integer", "text"):
        raise ValueError(f"key_kind must be 'integer' or 'text', not {key_kind!r}")
    bins: dict[Key, int] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError("empty histogram file", locator=str(path))
        if [h.strip() for h in header] != ["key", "count"]:
            raise SchemaError(f"expected header 'key,count', got {header!r}", locator=f"{path}:1")
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise SchemaError(f"expected 2 columns, got {len(row)}", locator=f"{path}:{lineno}")
            raw_key, raw_count = row[0], row[1].strip()
            try:
                count = int(raw_count)
            except ValueError:
                raise SchemaError(f"count {raw_count!r} is not an integer", locator=f"{path}:{lineno}")
            if count < 0:
                raise NegativeCount(f"negative count {count} at {path}:{lineno}")
            if key_kind == "integer":
                try:
                    key: Key = int(raw_key)
                except ValueError:
                    raise SchemaError(f"key {raw_key!r} is not an integer", locator=f"{path}:{lineno}")
            else:
                key = raw_key
            if key in bins:
                raise SchemaError(f"duplicate key {key!r}", locator=f"{path}:{lineno}")
            bins[key] = count
    return Histogram(label=label if label is not None else str(path), bins=bins)


def save_histogram(hist: Histogram, path) -> None:
    """Write a Histogram back to ``key,count`` CSV (LF endings, sorted keys)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["key", "count"])
        for key, count in hist.items_by_key():
            writer.writerow([key, count])
