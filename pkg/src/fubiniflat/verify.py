"""Sweeps that pit every closed-form count against exhaustive enumeration.

For each length n up to a requested bound, every reduced content (composition
of n) is enumerated and the formula value is compared with the filtered brute
force count.  The enumeration side deliberately goes through the plain public
run-decomposition predicates rather than the optimized counting pass, so the
two routes stay independent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .config import Limits, resolve_limits
from .core import FlattenVariant, ReducedContent, is_flattened, runs
from .enumeration import compositions, multiset_permutations
from .formulas import (
    HypothesisViolation,
    INTERPRETATIONS,
    end_in_one_with_k_runs,
    ends_in_one_count,
    wsenum_count,
    wwenum_count,
)

__all__ = [
    "Mismatch",
    "FormulaCheck",
    "FORMULA_NAMES",
    "verify_formula",
    "verify_wwenum",
    "verify_wsenum",
    "verify_ends_in_one",
    "verify_end_in_one_k_runs",
]


@dataclass(frozen=True)
class Mismatch:
    subject: str
    claimed: int
    computed: int


@dataclass(frozen=True)
class FormulaCheck:
    """Outcome of sweeping one formula against the oracle over all contents."""

    formula: str
    n_max: int
    checked: int
    mismatches: tuple[Mismatch, ...]
    winner: str | None = field(default=None)
    per_interpretation: tuple[tuple[str, int], ...] = field(default=())

    @property
    def ok(self) -> bool:
        if self.per_interpretation:
            return self.winner is not None
        return not self.mismatches

    def to_text(self) -> str:
        lines = [f"verify {self.formula}: n <= {self.n_max}, {self.checked} cases checked"]
        for m in self.mismatches:
            lines.append(f"  MISMATCH {m.subject}: formula={m.claimed} oracle={m.computed}")
        if self.per_interpretation:
            for interp, bad in self.per_interpretation:
                status = "matches everywhere" if bad == 0 else f"{bad} mismatches"
                lines.append(f"  interpretation {interp}: {status}")
            lines.append(
                f"  winner: {self.winner}" if self.winner else "  winner: none (all fail)"
            )
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "format": "verify-report/v1",
            "formula": self.formula,
            "n_max": self.n_max,
            "checked": self.checked,
            "mismatches": [
                {"subject": m.subject, "claimed": m.claimed, "computed": m.computed}
                for m in self.mismatches
            ],
            "winner": self.winner,
            "per_interpretation": dict(self.per_interpretation),
            "ok": self.ok,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _oracle_count(rc: ReducedContent, predicate: Callable[[tuple[int, ...]], bool]) -> int:
    return sum(1 for word in multiset_permutations(rc.word()) if predicate(word))


def _sweep(
    formula: str,
    n_max: int,
    closed_form: Callable[[ReducedContent], int],
    predicate: Callable[[tuple[int, ...]], bool],
    limits: Limits,
) -> FormulaCheck:
    mismatches = []
    checked = 0
    for n in range(1, n_max + 1):
        limits.check_length(n)
        for parts in compositions(n):
            rc = ReducedContent(parts)
            claimed = closed_form(rc)
            computed = _oracle_count(rc, predicate)
            checked += 1
            if claimed != computed:
                mismatches.append(Mismatch(subject=f"rc={parts}", claimed=claimed, computed=computed))
    return FormulaCheck(formula=formula, n_max=n_max, checked=checked, mismatches=tuple(mismatches))


def verify_wwenum(n_max: int, limits: Limits | None = None) -> FormulaCheck:
    limits = limits if limits is not None else resolve_limits()
    return _sweep(
        "wwenum",
        n_max,
        wwenum_count,
        lambda w: is_flattened(w, FlattenVariant.WFLAT_WRUNS),
        limits,
    )


def verify_wsenum(n_max: int, limits: Limits | None = None) -> FormulaCheck:
    limits = limits if limits is not None else resolve_limits()
    return _sweep(
        "wsenum",
        n_max,
        wsenum_count,
        lambda w: is_flattened(w, FlattenVariant.WFLAT_RUNS),
        limits,
    )


def verify_ends_in_one(n_max: int, limits: Limits | None = None) -> FormulaCheck:
    limits = limits if limits is not None else resolve_limits()
    return _sweep(
        "ends-in-one",
        n_max,
        ends_in_one_count,
        lambda w: w[-1] == 1 and is_flattened(w, FlattenVariant.WFLAT_WRUNS),
        limits,
    )


def verify_end_in_one_k_runs(n_max: int, limits: Limits | None = None) -> FormulaCheck:
    """Sweep both matrix-row interpretations over every hypothesis-satisfying
    (content, k) and name the interpretation(s) that match the oracle everywhere."""
    limits = limits if limits is not None else resolve_limits()
    mismatches: dict[str, list[Mismatch]] = {interp: [] for interp in INTERPRETATIONS}
    checked = 0
    for n in range(1, n_max + 1):
        limits.check_length(n)
        for parts in compositions(n):
            rc = ReducedContent(parts)
            content = rc.to_content()
            by_k = [0] * (n + 1)
            for word in multiset_permutations(rc.word()):
                if word[-1] == 1 and is_flattened(word, FlattenVariant.WFLAT_WRUNS):
                    by_k[runs(word, FlattenVariant.WFLAT_WRUNS.run_mode).k] += 1
            for k in range(1, n + 1):
                try:
                    values = {
                        interp: end_in_one_with_k_runs(content, k, interp)
                        for interp in INTERPRETATIONS
                    }
                except HypothesisViolation:
                    continue
                checked += 1
                for interp, claimed in values.items():
                    if claimed != by_k[k]:
                        mismatches[interp].append(
                            Mismatch(
                                subject=f"content={content.multiplicities} k={k} [{interp}]",
                                claimed=claimed,
                                computed=by_k[k],
                            )
                        )
    winners = [interp for interp in INTERPRETATIONS if not mismatches[interp]]
    winner = "both" if len(winners) == 2 else (winners[0] if winners else None)
    flat = tuple(m for interp in INTERPRETATIONS for m in mismatches[interp])
    return FormulaCheck(
        formula="end-in-one-k-runs",
        n_max=n_max,
        checked=checked,
        mismatches=flat,
        winner=winner,
        per_interpretation=tuple((interp, len(mismatches[interp])) for interp in INTERPRETATIONS),
    )


FORMULA_NAMES: dict[str, Callable[[int, Limits | None], FormulaCheck]] = {
    "wwenum": verify_wwenum,
    "wsenum": verify_wsenum,
    "ends-in-one": verify_ends_in_one,
    "end-in-one-k-runs": verify_end_in_one_k_runs,
}


def verify_formula(name: str, n_max: int, limits: Limits | None = None) -> FormulaCheck:
    try:
        fn = FORMULA_NAMES[name]
    except KeyError:
        raise ValueError(
            f"unknown formula {name!r}; expected one of {', '.join(FORMULA_NAMES)}"
        ) from None
    return fn(n_max, limits)
