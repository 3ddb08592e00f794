"""Structured pass/fail reports and the identity-evaluation engine.

A check evaluates named identity families over finite witness grids
(basis index tuples).  The verdict is always computed over the full grid;
``max_witnesses`` only truncates how many violations are listed.  The
grid may be partitioned into contiguous chunks evaluated on a thread
pool; chunks are merged back in order, so the report is identical for
every worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

DEFAULT_MAX_WITNESSES = 10


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple[int, ...]
    residual: tuple


@dataclass
class CheckReport:
    """Outcome of one identity suite.

    ``passed`` is true exactly when no violation exists anywhere, listed
    or not; ``truncated`` records that the listing was capped.
    """

    passed: bool
    violations: list[Violation]
    truncated: bool
    total_violations: int
    evaluations: int
    info: dict = dc_field(default_factory=dict)

    def witnesses(self, identity: str | None = None) -> list[tuple[int, ...]]:
        return [v.witness for v in self.violations if identity in (None, v.identity)]

    def failed_identities(self) -> list[str]:
        seen: list[str] = []
        for v in self.violations:
            if v.identity not in seen:
                seen.append(v.identity)
        return seen


class IdentitySuite:
    """Accumulates identity families and runs them deterministically."""

    def __init__(self, max_witnesses: int = DEFAULT_MAX_WITNESSES, workers: int = 1):
        self.max_witnesses = max_witnesses
        self.workers = max(1, workers)
        self._groups: list[tuple[str, list[tuple[int, ...]], object]] = []
        self._info: dict = {}

    def add(self, identity: str, witnesses, evaluate) -> None:
        """Register a family; ``evaluate(witness)`` returns the residual
        as a sequence of scalars (all falsy means the identity holds)."""
        self._groups.append((identity, list(witnesses), evaluate))

    def note(self, key: str, value) -> None:
        self._info[key] = value

    def run(self) -> CheckReport:
        listed: list[Violation] = []
        total = 0
        evaluations = 0
        for identity, witnesses, evaluate in self._groups:
            for witness, residual in self._scan(witnesses, evaluate):
                evaluations += 1
                if residual is None:
                    continue
                total += 1
                if len(listed) < self.max_witnesses:
                    listed.append(Violation(identity, witness, residual))
        return CheckReport(
            passed=(total == 0),
            violations=listed,
            truncated=(total > len(listed)),
            total_violations=total,
            evaluations=evaluations,
            info=dict(self._info),
        )

    def _scan(self, witnesses, evaluate):
        def eval_chunk(chunk):
            out = []
            for w in chunk:
                residual = evaluate(w)
                if any(residual):
                    out.append((w, tuple(residual)))
                else:
                    out.append((w, None))
            return out

        if self.workers == 1 or len(witnesses) < 2 * self.workers:
            yield from eval_chunk(witnesses)
            return
        size = -(-len(witnesses) // self.workers)
        chunks = [witnesses[i : i + size] for i in range(0, len(witnesses), size)]
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            for part in pool.map(eval_chunk, chunks):
                yield from part


def grid(*dims: int):
    """Witness tuples for nested basis loops, lexicographic order."""
    if not dims:
        return [()]
    out = [()]
    for d in dims:
        out = [w + (i,) for w in out for i in range(d)]
    return out
