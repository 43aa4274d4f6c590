"""Exhaustive streams and exact count tables for Fubini rankings.

Rankings of length n are generated by reduced content: the reduced contents
are the compositions of n, and the rankings with a given reduced content are
exactly the distinct permutations of the induced value multiset.  This never
instantiates the n^n ambient space.  Orders are deterministic: compositions in
lexicographic order of their part tuples, and multiset permutations in
lexicographic order of the word, so streams are reproducible and diffable.

Counting uses plain Python integers (arbitrary precision) throughout; no
floating point is involved anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .config import Limits, resolve_limits
from .core import FlattenVariant, Ranking, ReducedContent

__all__ = [
    "compositions",
    "weak_compositions",
    "multiset_permutations",
    "fubini_stream",
    "fubini_by_reduced_content",
    "count_filtered",
    "count_table",
    "CountTable",
    "StirlingPermutation",
    "stirling_stream",
    "descents",
]


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into positive parts, in lexicographic order.

    These are exactly the reduced contents of Fubini rankings of length n;
    there are 2^(n-1) of them for n >= 1, and the single empty composition
    for n = 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of `parts` nonnegative integers summing to `total`, lexicographic."""
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def multiset_permutations(word: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, in lexicographic order.

    Classic next-permutation stepping (pivot/successor/reverse), which visits
    each distinct arrangement exactly once.
    """
    a = sorted(word)
    n = len(a)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(a)
        j = n - 2
        while j >= 0 and a[j] >= a[j + 1]:
            j -= 1
        if j < 0:
            return
        l = n - 1
        while a[j] >= a[l]:
            l -= 1
        a[j], a[l] = a[l], a[j]
        a[j + 1 :] = a[n - 1 : j : -1]


def fubini_by_reduced_content(
    rc: ReducedContent | Sequence[int], limits: Limits | None = None
) -> Iterator[Ranking]:
    """All Fubini rankings with the given reduced content, each exactly once.

    Yields multinomial(n; a_1, ..., a_k) rankings in lexicographic word order.
    """
    if not isinstance(rc, ReducedContent):
        rc = ReducedContent(rc)
    limits = limits if limits is not None else resolve_limits()
    limits.check_length(rc.n)
    for word in multiset_permutations(rc.word()):
        yield Ranking(word)


def fubini_stream(n: int, limits: Limits | None = None) -> Iterator[Ranking]:
    """Every Fubini ranking of length n exactly once, deterministically ordered."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    limits = limits if limits is not None else resolve_limits()
    if n == 0:
        yield Ranking(())
        return
    limits.check_length(n)
    for parts in compositions(n):
        yield from fubini_by_reduced_content(ReducedContent(parts), limits=limits)


def _scan(word: Sequence[int]):
    """Single pass over a word: run counts and leading-term monotonicity.

    Returns (strict_k, strict_leaders_strictly_up, strict_leaders_weakly_up,
             weak_k, weak_leaders_strictly_up, weak_leaders_weakly_up).
    Run counts are only meaningful while the corresponding flags hold; callers
    gate on the flags.
    """
    sk = wk = 1
    s_lead = w_lead = word[0]
    ss = sw = ws = ww = True
    prev = word[0]
    for x in word[1:]:
        if x <= prev:
            sk += 1
            if x < s_lead:
                ss = sw = False
            elif x == s_lead:
                ss = False
            s_lead = x
            if x < prev:
                wk += 1
                if x < w_lead:
                    ws = ww = False
                elif x == w_lead:
                    ws = False
                w_lead = x
            if not (sw or ww or ws):
                break
        prev = x
    return sk, ss, sw, wk, ws, ww


@lru_cache(maxsize=None)
def _variant_profiles(n: int) -> dict[FlattenVariant, tuple[int, ...]]:
    """Counts by exact run number for all four families, in one pruned pass.

    Every member of any flattened family starts with entry 1 (the run holding
    the mandatory value 1 leads with it, and leading terms increase), so only
    permutations with first entry 1 are visited; in the lexicographic stream
    those form the initial contiguous block for each reduced content.
    """
    vec_fr = [0] * n
    vec_fw = [0] * n
    vec_wfr = [0] * n
    vec_wfw = [0] * n
    for parts in compositions(n):
        rc = ReducedContent(parts)
        for word in multiset_permutations(rc.word()):
            if word[0] != 1:
                break
            sk, ss, sw, wk, ws, ww = _scan(word)
            if sw:
                vec_wfr[sk - 1] += 1
                if ss:
                    vec_fr[sk - 1] += 1
            if ww:
                vec_wfw[wk - 1] += 1
                if ws:
                    vec_fw[wk - 1] += 1
    return {
        FlattenVariant.FLAT_RUNS: tuple(vec_fr),
        FlattenVariant.FLAT_WRUNS: tuple(vec_fw),
        FlattenVariant.WFLAT_RUNS: tuple(vec_wfr),
        FlattenVariant.WFLAT_WRUNS: tuple(vec_wfw),
    }


def count_filtered(
    n: int,
    variant: FlattenVariant,
    k: int | None = None,
    limits: Limits | None = None,
):
    """Exact count of variant members of length n with exactly k runs.

    With k=None, returns the whole vector over k = 1..n.  Counts come from
    exhaustive enumeration, never from closed forms; this is the oracle the
    formula layer is checked against.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    limits = limits if limits is not None else resolve_limits()
    limits.check_length(n)
    vec = _variant_profiles(n)[variant]
    if k is None:
        return vec
    if 1 <= k <= n:
        return vec[k - 1]
    return 0


@dataclass(frozen=True)
class CountTable:
    """Exact counts indexed by (length n, run count k) for one family."""

    variant: FlattenVariant
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"row n={n} outside 1..{self.n_max}")
        return self.rows[n - 1]

    def cell(self, n: int, k: int) -> int:
        row = self.row(n)
        return row[k - 1] if 1 <= k <= len(row) else 0

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def to_csv(self) -> str:
        header = "n," + ",".join(f"k={k}" for k in range(1, self.n_max + 1))
        lines = [header]
        for n, row in enumerate(self.rows, start=1):
            padded = list(row) + [0] * (self.n_max - len(row))
            lines.append(str(n) + "," + ",".join(str(c) for c in padded))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "format": "count-table/v1",
            "variant": self.variant.cli_name,
            "n_max": self.n_max,
            "rows": [list(row) for row in self.rows],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        payload = json.loads(text)
        if payload.get("format") != "count-table/v1":
            raise ValueError(f"unsupported table format: {payload.get('format')!r}")
        return cls(
            variant=FlattenVariant.from_cli_name(payload["variant"]),
            n_max=int(payload["n_max"]),
            rows=tuple(tuple(int(c) for c in row) for row in payload["rows"]),
        )

    def to_text(self) -> str:
        width = max(
            [len(str(c)) for row in self.rows for c in row]
            + [len(f"k={self.n_max}"), len(str(self.n_max))]
        )
        head = " | ".join([f"{'n':>{width}}"] + [f"{f'k={k}':>{width}}" for k in range(1, self.n_max + 1)])
        lines = [f"counts for {self.variant.cli_name}", head, "-" * len(head)]
        for n, row in enumerate(self.rows, start=1):
            padded = list(row) + [0] * (self.n_max - len(row))
            lines.append(" | ".join([f"{n:>{width}}"] + [f"{c:>{width}}" for c in padded]))
        return "\n".join(lines) + "\n"


def count_table(n_max: int, variant: FlattenVariant, limits: Limits | None = None) -> CountTable:
    """Assemble the full (n, k) count table for a family, n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    limits = limits if limits is not None else resolve_limits()
    limits.check_length(n_max)
    rows = tuple(_variant_profiles(n)[variant] for n in range(1, n_max + 1))
    return CountTable(variant=variant, n_max=n_max, rows=rows)


@dataclass(frozen=True)
class StirlingPermutation:
    """Word over {1,1,2,2,...,m,m} where entries between the copies of i exceed i."""

    word: tuple[int, ...]

    def __init__(self, word: Sequence[int]):
        ws = tuple(word)
        object.__setattr__(self, "word", ws)
        m, rem = divmod(len(ws), 2)
        if rem or sorted(ws) != [v for v in range(1, m + 1) for _ in range(2)]:
            raise ValueError(f"not a word over the doubled multiset 1..m: {ws}")
        first: dict[int, int] = {}
        for i, v in enumerate(ws):
            if v in first:
                between = ws[first[v] + 1 : i]
                if any(x <= v for x in between):
                    raise ValueError(f"entries between the copies of {v} must exceed it: {ws}")
            else:
                first[v] = i

    @property
    def order(self) -> int:
        return len(self.word) // 2

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return "".join(str(v) for v in self.word) if self.order < 5 else str(self.word)


def _stirling_words(m: int) -> Iterator[tuple[int, ...]]:
    # Pair insertion: the two copies of the largest value are always adjacent,
    # so each order-m word arises from exactly one order-(m-1) word.
    if m == 0:
        yield ()
        return
    for parent in _stirling_words(m - 1):
        for gap in range(len(parent) + 1):
            yield parent[:gap] + (m, m) + parent[gap:]


def stirling_stream(m: int, limits: Limits | None = None) -> Iterator[StirlingPermutation]:
    """All (2m-1)!! Stirling permutations of order m, each exactly once."""
    if m < 1:
        raise ValueError("order m must be at least 1")
    limits = limits if limits is not None else resolve_limits()
    limits.check_stirling_order(m)
    for word in _stirling_words(m):
        yield StirlingPermutation(word)


def descents(word: StirlingPermutation | Sequence[int], convention: str = "plain") -> int:
    """Number of descents of a word.

    "plain" counts positions i with w_i > w_{i+1}; "sentinel" additionally
    counts a final descent, as if a terminal 0 were appended.
    """
    ws = tuple(word.word if isinstance(word, StirlingPermutation) else word)
    if convention not in ("plain", "sentinel"):
        raise ValueError(f"unknown descent convention {convention!r}")
    count = sum(1 for a, b in zip(ws, ws[1:]) if a > b)
    if convention == "sentinel" and ws:
        count += 1
    return count
