"""Existence criteria, witness constructions, and run-count bounds.

The extremal results need exact comparisons against the median of the entry
multiset; with an even number of entries the median is the average of the two
middle entries and can be a half-integer, so it is kept as a Fraction.
Floating point here would corrupt the case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Content, Ranking, ReducedContent

__all__ = [
    "InadmissibleContent",
    "MedianProfile",
    "median_profile",
    "exists_flat_runs",
    "first_inadmissible_index",
    "construct_flat_runs",
    "construct_canonical",
    "max_runs_wflat_wruns",
    "max_runs_bound_weak",
    "min_runs_wflat_runs",
    "construct_min_runs_wflat_runs",
    "flat_wruns_k_bound",
    "unique_single_run",
]


class InadmissibleContent(ValueError):
    """No ranking of the requested kind exists for this (reduced) content."""


def _rc(rc: ReducedContent | Sequence[int]) -> ReducedContent:
    return rc if isinstance(rc, ReducedContent) else ReducedContent(rc)


def _content(c: Content | Sequence[int]) -> Content:
    return c if isinstance(c, Content) else Content(c)


@dataclass(frozen=True)
class MedianProfile:
    """Median of the entry multiset and the counts on either side of it."""

    median: Fraction
    below: int
    above: int
    equal: int


def median_profile(content: Content | Sequence[int]) -> MedianProfile:
    c = _content(content)
    entries = sorted(c.word())
    n = len(entries)
    if n == 0:
        raise ValueError("median of an empty ranking is undefined")
    if n % 2:
        median = Fraction(entries[n // 2])
    else:
        median = Fraction(entries[n // 2 - 1] + entries[n // 2], 2)
    below = sum(1 for x in entries if x < median)
    above = sum(1 for x in entries if x > median)
    return MedianProfile(median=median, below=below, above=above, equal=n - below - above)


def max_runs_wflat_wruns(content: Content | Sequence[int]) -> int:
    """Largest weak-run count over weakly flattened weak-runs rankings with this content.

    Case split on the median profile: with everything equal to the median the
    word is constant (one run); with entries only above it, each of the above
    entries can close a run (M+1 runs); only below, each below entry can open
    one (m runs); with both sides inhabited the bound min(m + M, ceil(n/2))
    is attained.
    """
    p = median_profile(content)
    n = _content(content).n
    if p.below == 0 and p.above == 0:
        return 1
    if p.below == 0:
        return p.above + 1
    if p.above == 0:
        return p.below
    return min(p.below + p.above, (n + 1) // 2)


def max_runs_bound_weak(n: int) -> int:
    """Weak-run count bound ceil(n/2): counts above it vanish for both
    weak-runs families, and every k up to it is attained."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (n + 1) // 2


def first_inadmissible_index(rc: ReducedContent | Sequence[int]) -> int | None:
    """First position (1-indexed) where a_i > i, or None when admissible."""
    for i, part in enumerate(_rc(rc).parts, start=1):
        if part > i:
            return i
    return None


def exists_flat_runs(rc: ReducedContent | Sequence[int]) -> bool:
    """Whether a flattened strict-runs ranking with this reduced content exists:
    true iff a_i <= i for every part."""
    return first_inadmissible_index(rc) is None


def construct_flat_runs(rc: ReducedContent | Sequence[int]) -> Ranking:
    """Build a flattened strict-runs ranking with the given reduced content.

    Iterative insertion: for each value v_i (ascending), append one or two
    copies at the right end, then drop each remaining copy immediately to the
    left of the rightmost copy of v_j, for j = 2 up to a_i - 1.  The inserted
    copy extends the run it lands in, and the displaced v_j starts a fresh run
    whose leading term keeps the leaders strictly increasing.
    """
    reduced = _rc(rc)
    bad = first_inadmissible_index(reduced)
    if bad is not None:
        raise InadmissibleContent(
            f"no flattened strict-runs ranking exists: part a_{bad}="
            f"{reduced.parts[bad - 1]} exceeds its position {bad}"
        )
    values = reduced.values
    word: list[int] = []
    for i, (value, mult) in enumerate(zip(values, reduced.parts), start=1):
        word.extend([value] * min(mult, 2))
        for j in range(2, mult):
            target = values[j - 1]
            pos = len(word) - 1 - word[::-1].index(target)
            word.insert(pos, value)
    return Ranking(word)


def construct_canonical(rc: ReducedContent | Sequence[int]) -> Ranking:
    """The weakly increasing ranking v_1^{a_1} v_2^{a_2} ... v_k^{a_k}.

    A single weak run, hence a member of both weak-runs families with k = 1;
    this is the witness showing every composition is a realizable reduced
    content.
    """
    return Ranking(_rc(rc).word())


def min_runs_wflat_runs(content: Content | Sequence[int]) -> int:
    """Fewest strict runs over weakly flattened strict-runs rankings: max multiplicity.

    Equal values can never share a strict run, so max(a) is a lower bound; the
    layered construction below attains it.
    """
    c = _content(content)
    if c.n == 0:
        raise ValueError("content of an empty ranking has no run count")
    return max(c.multiplicities)


def construct_min_runs_wflat_runs(content: Content | Sequence[int]) -> Ranking:
    """Layered witness with exactly max(a) strict runs.

    Repeatedly emit one copy of every still-available value in increasing
    order; each layer is one strict run, consecutive layers begin weakly
    higher, and the number of layers is the maximum multiplicity.
    """
    c = _content(content)
    remaining = list(c.multiplicities)
    word: list[int] = []
    while any(remaining):
        for value, left in enumerate(remaining, start=1):
            if left:
                word.append(value)
                remaining[value - 1] -= 1
    return Ranking(word)


def flat_wruns_k_bound(rc: ReducedContent | Sequence[int]) -> int:
    """Exclusive upper bound max(m, 2) on weak-run counts of flattened
    weak-runs rankings with an m-part reduced content; not guaranteed tight."""
    return max(len(_rc(rc).parts), 2)


def unique_single_run(content: Content | Sequence[int]) -> Ranking:
    """The unique flattened weak-runs ranking with one run: the sorted word."""
    return Ranking(_content(content).word())
