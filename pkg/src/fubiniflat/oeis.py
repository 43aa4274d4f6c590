"""OEIS b-file parsing and computed-vs-catalog sequence comparison.

b-files are plain text: one "index value" pair per line, '#' lines are
comments.  Files are always read locally; nothing here touches the network.
Catalog entries use varying index offsets, so comparisons take an explicit
offset: computed index i is matched with file index i + offset.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

__all__ = [
    "BFileParseError",
    "BFile",
    "parse_bfile",
    "load_bfile",
    "SequenceComparison",
    "compare_prefix",
]


class BFileParseError(ValueError):
    """The b-file text does not follow the 'index value' line grammar."""


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) pairs with strictly increasing indices."""

    sequence_id: str
    terms: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def index_min(self) -> int:
        return self.terms[0][0]

    @property
    def index_max(self) -> int:
        return self.terms[-1][0]

    def __len__(self) -> int:
        return len(self.terms)


def parse_bfile(text: str, sequence_id: str = "") -> BFile:
    terms: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(f"line {lineno}: non-integer field in {raw!r}") from None
        if terms and index <= terms[-1][0]:
            raise BFileParseError(
                f"line {lineno}: index {index} does not increase past {terms[-1][0]}"
            )
        terms.append((index, value))
    if not terms:
        raise BFileParseError("b-file contains no terms")
    return BFile(sequence_id=sequence_id, terms=tuple(terms))


def load_bfile(path: str | Path, sequence_id: str = "") -> BFile:
    return parse_bfile(Path(path).read_text(encoding="ascii"), sequence_id=sequence_id)


@dataclass(frozen=True)
class SequenceComparison:
    """Agreement record between computed values and a b-file over their overlap."""

    sequence_id: str
    generator: str
    offset: int
    compared: tuple[tuple[int, int, int], ...]  # (index, computed, catalog)

    @property
    def mismatches(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(t for t in self.compared if t[1] != t[2])

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def index_range(self) -> tuple[int, int]:
        indices = [t[0] for t in self.compared]
        return min(indices), max(indices)

    def to_text(self) -> str:
        lo, hi = self.index_range
        lines = [
            f"sequence {self.sequence_id} vs generator {self.generator} "
            f"(offset {self.offset}): indices {lo}..{hi}, {len(self.compared)} terms"
        ]
        for index, computed, catalog in self.mismatches:
            lines.append(f"  MISMATCH at {index}: computed={computed} catalog={catalog}")
        lines.append("result: " + ("AGREE" if self.ok else "DISAGREE"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        lo, hi = self.index_range
        payload = {
            "format": "sequence-comparison/v1",
            "sequence_id": self.sequence_id,
            "generator": self.generator,
            "offset": self.offset,
            "index_range": [lo, hi],
            "terms_compared": len(self.compared),
            "mismatches": [
                {"index": i, "computed": c, "catalog": e} for i, c, e in self.mismatches
            ],
            "ok": self.ok,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def compare_prefix(
    computed: Mapping[int, int],
    bfile: BFile,
    generator: str = "",
    offset: int = 0,
) -> SequenceComparison:
    """Compare computed[i] against the b-file value at index i + offset.

    Raises ValueError when the index ranges do not overlap at all.
    """
    catalog = bfile.as_dict()
    compared = tuple(
        (i, computed[i], catalog[i + offset])
        for i in sorted(computed)
        if i + offset in catalog
    )
    if not compared:
        raise ValueError(
            f"no comparable range: computed indices {min(computed)}..{max(computed)} "
            f"with offset {offset} do not meet b-file indices "
            f"{bfile.index_min}..{bfile.index_max}"
        )
    return SequenceComparison(
        sequence_id=bfile.sequence_id,
        generator=generator,
        offset=offset,
        compared=compared,
    )
