"""Fubini rankings, their contents, runs, and the four flattened families.

A Fubini ranking of length n records the outcome of a competition among n
competitors where ties are allowed: if m competitors share rank v, the ranks
v+1, ..., v+m-1 are skipped and v+m is the next rank available.  Equivalently,
when the entries are sorted weakly increasingly, each distinct value v makes
its first appearance at position v (1-indexed).

A run of ascents (weak ascents) is a maximal contiguous strictly (weakly)
increasing segment.  A ranking is flattened when the leading terms of its runs
increase strictly from left to right, and weakly flattened when they increase
weakly.  Crossing the two run modes with the two leading-term modes gives four
families, named here flat_runs, flat_wruns, wflat_runs and wflat_wruns.

The empty ranking (n = 0) is treated as valid, with zero runs, and as a member
of all four families; command-line entry points reject n = 0 unless explicitly
allowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

__all__ = [
    "NotFubiniError",
    "InvalidContentError",
    "RunMode",
    "FlatMode",
    "FlattenVariant",
    "Ranking",
    "Content",
    "ReducedContent",
    "RunDecomposition",
    "is_fubini",
    "content_of",
    "runs",
    "leading_terms",
    "is_flattened",
    "classify",
]


class NotFubiniError(ValueError):
    """The entry sequence is not a valid Fubini ranking."""


class InvalidContentError(ValueError):
    """The multiplicity vector cannot arise as the content of a Fubini ranking."""


class RunMode(str, Enum):
    STRICT = "strict"
    WEAK = "weak"


class FlatMode(str, Enum):
    STRICT = "strict"
    WEAK = "weak"


class FlattenVariant(Enum):
    """One of the four flattened families: (run mode, leading-term mode)."""

    FLAT_RUNS = (RunMode.STRICT, FlatMode.STRICT)
    FLAT_WRUNS = (RunMode.WEAK, FlatMode.STRICT)
    WFLAT_RUNS = (RunMode.STRICT, FlatMode.WEAK)
    WFLAT_WRUNS = (RunMode.WEAK, FlatMode.WEAK)

    @property
    def run_mode(self) -> RunMode:
        return self.value[0]

    @property
    def flat_mode(self) -> FlatMode:
        return self.value[1]

    @property
    def cli_name(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_cli_name(cls, name: str) -> "FlattenVariant":
        key = name.strip().lower().replace("-", "_")
        try:
            return cls[key.upper()]
        except KeyError:
            valid = ", ".join(v.cli_name for v in cls)
            raise ValueError(f"unknown variant {name!r}; expected one of {valid}") from None


def is_fubini(entries: Sequence[int]) -> bool:
    """Classify an arbitrary integer sequence as a Fubini ranking or not.

    Total over all integer sequences; entries outside [1, n] simply make the
    answer False.  The empty sequence counts as valid by convention.
    """
    n = len(entries)
    ordered = sorted(entries)
    seen = None
    for position, value in enumerate(ordered, start=1):
        if value != seen:
            if value != position:
                return False
            seen = value
    return True


@dataclass(frozen=True)
class Ranking:
    """A validated Fubini ranking; construction rejects invalid entry sequences."""

    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int]):
        object.__setattr__(self, "entries", tuple(entries))
        if not is_fubini(self.entries):
            raise NotFubiniError(f"not a Fubini ranking: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"

    def content(self) -> "Content":
        return content_of(self)


@dataclass(frozen=True)
class Content:
    """Full-length multiplicity vector of a Fubini ranking.

    Entry i (1-indexed) is the number of competitors with rank i; zeros are
    kept, so the vector always has length n and sums to n.  Each nonzero entry
    a_i is followed by exactly a_i - 1 zeros.
    """

    multiplicities: tuple[int, ...]

    def __init__(self, multiplicities: Sequence[int]):
        ms = tuple(multiplicities)
        object.__setattr__(self, "multiplicities", ms)
        self._validate()

    def _validate(self) -> None:
        ms = self.multiplicities
        n = len(ms)
        if any(m < 0 for m in ms):
            raise InvalidContentError(f"negative multiplicity in {ms}")
        if sum(ms) != n:
            raise InvalidContentError(f"multiplicities {ms} do not sum to the length {n}")
        i = 0
        while i < n:
            if ms[i] == 0:
                raise InvalidContentError(
                    f"{ms} is not a Fubini content: expected a positive entry at position {i + 1}"
                )
            block = ms[i]
            if any(ms[j] != 0 for j in range(i + 1, min(i + block, n))):
                raise InvalidContentError(
                    f"{ms} is not a Fubini content: entry {block} at position {i + 1} "
                    f"must be followed by {block - 1} zeros"
                )
            i += block

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __iter__(self) -> Iterator[int]:
        return iter(self.multiplicities)

    def reduced(self) -> "ReducedContent":
        """Drop the zero entries, keeping order."""
        return ReducedContent(tuple(m for m in self.multiplicities if m != 0))

    def word(self) -> tuple[int, ...]:
        """The weakly increasing entry sequence with this content."""
        out: list[int] = []
        for value, mult in enumerate(self.multiplicities, start=1):
            out.extend([value] * mult)
        return tuple(out)


@dataclass(frozen=True)
class ReducedContent:
    """Content with zeros removed: a composition of n into positive parts.

    Part i has an associated rank value v_i, with v_1 = 1 and
    v_{i+1} = v_i + a_i; expanding places part a_i at position v_i followed by
    a_i - 1 zeros, and reduce(expand(rc)) is the identity.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        ps = tuple(parts)
        if any(p <= 0 for p in ps):
            raise InvalidContentError(f"reduced content parts must be positive: {ps}")
        object.__setattr__(self, "parts", ps)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def values(self) -> tuple[int, ...]:
        """Rank values v_1, ..., v_k carried by the parts."""
        vs = []
        v = 1
        for p in self.parts:
            vs.append(v)
            v += p
        return tuple(vs)

    def to_content(self) -> Content:
        out = [0] * self.n
        for value, part in zip(self.values, self.parts):
            out[value - 1] = part
        return Content(out)

    def word(self) -> tuple[int, ...]:
        """The weakly increasing entry sequence with this reduced content."""
        return tuple(v for v, p in zip(self.values, self.parts) for _ in range(p))


def content_of(r: Ranking | Sequence[int]) -> Content:
    """Multiplicity vector of a valid Fubini ranking; rejects invalid input."""
    entries = r.entries if isinstance(r, Ranking) else tuple(r)
    if not isinstance(r, Ranking) and not is_fubini(entries):
        raise NotFubiniError(f"not a Fubini ranking: {entries}")
    counts = [0] * len(entries)
    for value in entries:
        counts[value - 1] += 1
    return Content(counts)


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal decomposition of a word into runs under one run mode."""

    runs: tuple[tuple[int, ...], ...]
    run_mode: RunMode = field(default=RunMode.STRICT)

    @property
    def k(self) -> int:
        return len(self.runs)

    @property
    def leading_terms(self) -> tuple[int, ...]:
        return tuple(run[0] for run in self.runs)

    def word(self) -> tuple[int, ...]:
        return tuple(x for run in self.runs for x in run)


def _entries(word: Ranking | Sequence[int]) -> tuple[int, ...]:
    return word.entries if isinstance(word, Ranking) else tuple(word)


def runs(word: Ranking | Sequence[int], mode: RunMode = RunMode.STRICT) -> RunDecomposition:
    """Split a word into maximal runs of ascents (strict) or weak ascents."""
    entries = _entries(word)
    mode = RunMode(mode)
    out: list[tuple[int, ...]] = []
    if entries:
        start = 0
        for i in range(1, len(entries)):
            joined = entries[i - 1] < entries[i] if mode is RunMode.STRICT else (
                entries[i - 1] <= entries[i]
            )
            if not joined:
                out.append(entries[start:i])
                start = i
        out.append(entries[start:])
    return RunDecomposition(tuple(out), mode)


def leading_terms(word: Ranking | Sequence[int], mode: RunMode) -> tuple[int, ...]:
    return runs(word, mode).leading_terms


def _monotone(values: Sequence[int], strict: bool) -> bool:
    if strict:
        return all(a < b for a, b in zip(values, values[1:]))
    return all(a <= b for a, b in zip(values, values[1:]))


def is_flattened(word: Ranking | Sequence[int], variant: FlattenVariant) -> bool:
    """True iff the run leading terms are increasing per the variant's flat mode."""
    leaders = leading_terms(word, variant.run_mode)
    return _monotone(leaders, strict=variant.flat_mode is FlatMode.STRICT)


def classify(word: Ranking | Sequence[int]) -> frozenset[FlattenVariant]:
    """The subset of the four flattened families the word belongs to."""
    entries = _entries(word)
    members = []
    for mode in (RunMode.STRICT, RunMode.WEAK):
        leaders = leading_terms(entries, mode)
        weak_ok = _monotone(leaders, strict=False)
        strict_ok = weak_ok and _monotone(leaders, strict=True)
        for variant in FlattenVariant:
            if variant.run_mode is not mode:
                continue
            if variant.flat_mode is FlatMode.STRICT:
                if strict_ok:
                    members.append(variant)
            elif weak_ok:
                members.append(variant)
    return frozenset(members)
