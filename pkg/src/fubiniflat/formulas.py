"""Closed-form counting formulas for the flattened Fubini families.

Everything returns exact Python integers.  The binomial convention is pinned
so that the degenerate boundary cases of the nested-sum formulas come out
right: C(m, 0) = 1 for every integer m, including negative m.  This is forced
by the a_1 = 1 case of the weak-runs nested sum, where the unique placement
must contribute 1 while the top index dips below zero; it was verified against
brute force before being frozen.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Sequence

from .core import Content, ReducedContent

__all__ = [
    "binomial",
    "fubini_number",
    "weakly_monotone_count",
    "wwenum_count",
    "wsenum_count",
    "ends_in_one_count",
    "count_bk",
    "end_in_one_with_k_runs",
    "HypothesisViolation",
    "INTERPRETATIONS",
]

INTERPRETATIONS = ("literal", "proof")


class HypothesisViolation(ValueError):
    """Inputs fall outside a statement's hypothesis; distinct from a zero count."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient as a total function.

    0 for k < 0; 1 for k = 0 (any n, negative included); 0 for n < 0 with
    k > 0; otherwise the usual C(n, k), which is 0 when k > n.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0 or k > n:
        return 0
    return math.comb(n, k)


def fubini_number(n: int) -> int:
    """Number of Fubini rankings of length n (ordered Bell number).

    Evaluates the double sum over k and j of (-1)^(k-j) C(k,j) j^n exactly;
    the n = 0 value is 1 via the 0^0 = 1 convention.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        (-1) ** (k - j) * math.comb(k, j) * j**n for k in range(n + 1) for j in range(k + 1)
    )


def weakly_monotone_count(n: int) -> int:
    """Number of weakly increasing (equally, weakly decreasing) Fubini rankings."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 ** (n - 1)


def _parts(rc: ReducedContent | Sequence[int]) -> tuple[int, ...]:
    return rc.parts if isinstance(rc, ReducedContent) else ReducedContent(rc).parts


def wwenum_count(rc: ReducedContent | Sequence[int]) -> int:
    """Weakly flattened rankings with runs of weak ascents and reduced content rc.

    Nested sum over j_2..j_k (how many copies of each value land after the
    current end of the word); the factor at level i places the remaining
    a_i - j_i copies into a_1 + j_2 + ... + j_{i-1} - 1 gaps with repetition:
    C(a_1 + j_2 + ... + j_{i-1} + (a_i - j_i) - 2, a_i - j_i).

    Evaluated iteratively over the whole index vector to keep memory flat.
    """
    a = _parts(rc)
    k = len(a)
    if k <= 1:
        return 1
    a1 = a[0]
    total = 0
    for js in product(*(range(ai + 1) for ai in a[1:])):
        term = 1
        acc = 0
        for ai, ji in zip(a[1:], js):
            placed = ai - ji
            term *= binomial(a1 + acc + placed - 2, placed)
            if term == 0:
                break
            acc += ji
        total += term
    return total


def wsenum_count(rc: ReducedContent | Sequence[int]) -> int:
    """Weakly flattened rankings with runs of strict ascents and reduced content rc.

    Same index-vector shape as the weak-runs sum, but each gap admits at most
    one copy, so level i contributes C(a_1 + j_2 + ... + j_{i-1} - 1, a_i - j_i).
    """
    a = _parts(rc)
    k = len(a)
    if k <= 1:
        return 1
    a1 = a[0]
    total = 0
    for js in product(*(range(ai + 1) for ai in a[1:])):
        term = 1
        acc = 0
        for ai, ji in zip(a[1:], js):
            term *= binomial(a1 + acc - 1, ai - ji)
            if term == 0:
                break
            acc += ji
        total += term
    return total


def ends_in_one_count(rc: ReducedContent | Sequence[int]) -> int:
    """Weakly flattened weak-runs rankings with reduced content rc whose final entry is 1.

    Product formula prod_{i>=2} C(a_1 + a_i - 2, a_i); zero whenever some part
    cannot be buried between the 1s (in particular for the all-ones content
    with n > 1), and invariant under permuting the parts after the first.
    """
    a = _parts(rc)
    result = 1
    for ai in a[1:]:
        result *= binomial(a[0] + ai - 2, ai)
        if result == 0:
            return 0
    return result


def _bk_rows(content: Content | Sequence[int], interp: str) -> tuple[int, ...]:
    ms = content.multiplicities if isinstance(content, Content) else Content(content).multiplicities
    if interp == "literal":
        return ms
    if interp == "proof":
        return ms[1:]
    raise ValueError(f"unknown interpretation {interp!r}; expected one of {INTERPRETATIONS}")


def count_bk(content: Content | Sequence[int], k: int, interp: str = "proof") -> int:
    """Number of matrices with k-1 columns, row i a weak composition of a_i,
    and every column sum >= 1.

    interp selects the row range: "literal" uses all rows i = 1..n, "proof"
    uses rows i = 2..n (only the values larger than 1 get distributed).
    Counted by inclusion-exclusion over the set of empty columns.  With k = 1
    the matrix has no columns, which exists exactly when every row total in
    range is 0 (the empty weak composition).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = _bk_rows(content, interp)
    cols = k - 1
    total = 0
    for empty in range(cols + 1):
        width = cols - empty
        prod_rows = 1
        for a in rows:
            if width == 0:
                if a != 0:
                    prod_rows = 0
                    break
            else:
                prod_rows *= math.comb(a + width - 1, a)
        total += (-1) ** empty * math.comb(cols, empty) * prod_rows
    return total


def end_in_one_with_k_runs(
    content: Content | Sequence[int], k: int, interp: str = "proof"
) -> int:
    """Weakly flattened weak-runs rankings with the given content, exactly k
    runs, and final entry 1: C(a_1 - 1, k - 1) * |B_k(content)|.

    The hypothesis k <= a_1 <= n - k + 1 is enforced (every run must open with
    a 1, and the k - 1 earlier runs each need an entry above 1 to close them);
    violations raise HypothesisViolation so they are never confused with a
    legitimate zero count.
    """
    c = content if isinstance(content, Content) else Content(content)
    if k < 1:
        raise HypothesisViolation(f"k={k} must be at least 1")
    a1 = c.multiplicities[0] if c.n else 0
    if k > a1:
        raise HypothesisViolation(f"hypothesis k <= a_1 fails: k={k}, a_1={a1}")
    if a1 > c.n - k + 1:
        raise HypothesisViolation(
            f"hypothesis a_1 <= n - k + 1 fails: a_1={a1}, n={c.n}, k={k}"
        )
    return binomial(a1 - 1, k - 1) * count_bk(c, k, interp)
