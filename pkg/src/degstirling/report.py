"""Pass/fail records produced by every identity check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional



def _jsonify(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


@dataclass(frozen=True)
class Counterexample:
    indices: dict[str, int]
    # LambdaPoly for scalar identities, NormalForm for operator identities
    lhs: object
    rhs: object
    # table cells read while evaluating this instance: (kind, n, k)
    cells: frozenset = field(default_factory=frozenset)

    def to_json(self) -> dict:
        return {
            "indices": dict(self.indices),
            "lhs": _jsonify(self.lhs),
            "rhs": _jsonify(self.rhs),
            "cells": [list(c) for c in sorted(self.cells)],
        }


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    range_checked: str
    instances: int = 0
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        ce = self.counterexample
        if ce is not None and ce.lhs == ce.rhs:
            raise ValueError("counterexample with equal sides")

    @property
    def status(self) -> str:
        return "fail" if self.counterexample is not None else "pass"

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        out = {
            "id": self.identity_id,
            "range": self.range_checked,
            "instances": self.instances,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        return out

    def to_text(self) -> str:
        line = f"{self.status.upper():4} {self.identity_id:7} {self.range_checked} ({self.instances} instances)"
        ce = self.counterexample
        if ce is not None:
            idx = ", ".join(f"{k}={v}" for k, v in ce.indices.items())
            line += f"\n     at {idx}: lhs = {ce.lhs}, rhs = {ce.rhs}"
        return line


class RecordingTable:
    """Wraps a table and remembers which ``(kind, n, k)`` cells were read."""

    def __init__(self, table, seen: set):
        self._table = table
        self._seen = seen

    def __getitem__(self, index):
        n, k = index
        if 0 <= k <= n:
            self._seen.add((self._table.kind.value, n, k))
        return self._table[index]

    def __getattr__(self, name):
        return getattr(self._table, name)


def run_check(identity_id: str, range_checked: str, instances, evaluate, tables: dict) -> IdentityReport:
    """Evaluate ``evaluate(tables, **idx)`` -> ``(lhs, rhs)`` over ``instances``.

    Stops at the first mismatch; that instance is re-run against recording
    wrappers so the counterexample lists the table cells it depends on.
    """
    count = 0
    for idx in instances:
        count += 1
        lhs, rhs = evaluate(tables, **idx)
        if lhs != rhs:
            seen: set = set()
            wrapped = {name: RecordingTable(t, seen) for name, t in tables.items()}
            evaluate(wrapped, **idx)
            ce = Counterexample(dict(idx), lhs, rhs, frozenset(seen))
            return IdentityReport(identity_id, range_checked, count, ce)
    return IdentityReport(identity_id, range_checked, count)
