"""Independent brute-force oracles the package is checked against.

Everything here is deliberately written from first principles with different
algorithms than the package uses: validity via value/multiplicity prefix sums
instead of sorted positions, streams via itertools filtering instead of
composition-driven generation, run splitting via boundary lists, Fubini
numbers via the binomial convolution recurrence instead of the double sum.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import permutations, product


def reference_is_fubini(entries) -> bool:
    # Distinct values v_1 < v_2 < ... with multiplicities m_i are a valid rank
    # set iff v_1 = 1 and v_{i+1} = v_i + m_i.
    if not entries:
        return True
    counts = Counter(entries)
    expected = 1
    for value in sorted(counts):
        if value != expected:
            return False
        expected += counts[value]
    return expected == len(entries) + 1


def brute_rankings(n: int) -> set[tuple[int, ...]]:
    """All Fubini rankings of length n by filtering the full ambient [n]^n."""
    if n == 0:
        return {()}
    return {
        word for word in product(range(1, n + 1), repeat=n) if reference_is_fubini(word)
    }


def rankings_with_multiset(word) -> set[tuple[int, ...]]:
    """Distinct rearrangements via the stdlib, duplicates thrown away."""
    return set(permutations(word))


def reference_runs(word, weak: bool) -> list[tuple[int, ...]]:
    if not word:
        return []
    boundaries = [0]
    for i in range(1, len(word)):
        ascended = word[i - 1] <= word[i] if weak else word[i - 1] < word[i]
        if not ascended:
            boundaries.append(i)
    boundaries.append(len(word))
    return [tuple(word[a:b]) for a, b in zip(boundaries, boundaries[1:])]


def reference_fubini_number(n: int) -> int:
    # a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
    values = [1]
    for m in range(1, n + 1):
        values.append(sum(math.comb(m, k) * values[m - k] for k in range(1, m + 1)))
    return values[n]


def double_factorial_odd(m: int) -> int:
    """(2m - 1)!! = 1 * 3 * 5 * ... * (2m - 1)."""
    out = 1
    for i in range(1, 2 * m, 2):
        out *= i
    return out


def is_stirling_word(word) -> bool:
    counts = Counter(word)
    m = len(word) // 2
    if len(word) != 2 * m or any(counts[v] != 2 for v in range(1, m + 1)):
        return False
    for v in range(1, m + 1):
        first = word.index(v)
        second = word.index(v, first + 1)
        if any(word[t] <= v for t in range(first + 1, second)):
            return False
    return True


def brute_stirling_words(m: int) -> set[tuple[int, ...]]:
    base = [v for v in range(1, m + 1) for _ in range(2)]
    return {word for word in set(permutations(base)) if is_stirling_word(word)}


def brute_bk_matrices(row_totals, columns: int) -> int:
    """Exhaustive matrix count: rows are weak compositions, column sums >= 1."""
    if columns == 0:
        return 1 if all(a == 0 for a in row_totals) else 0

    def weak_comps(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in weak_comps(total - first, parts - 1):
                yield (first,) + rest

    count = 0
    for combo in product(*(list(weak_comps(a, columns)) for a in row_totals)):
        sums = [0] * columns
        for row in combo:
            for idx, val in enumerate(row):
                sums[idx] += val
        if all(s >= 1 for s in sums):
            count += 1
    return count
