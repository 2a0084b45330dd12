"""Per-length cycle-spectrum reports with provenance and a JSON wire format.

Statuses:

witnessed  a constructive pipeline produced the cycle; the witness is stored
present    an exhaustive-search oracle found the cycle; witness stored too
absent     an exhaustive search completed without finding the cycle
unknown    nothing proved either way (budget ran out, or a constructive
           precondition failed); the detail names why

``absent`` is only ever emitted by a search that exhausted its space, so it
is a proof of absence, not a timeout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import CycleWitness

WITNESSED = "witnessed"
PRESENT = "present"
ABSENT = "absent"
UNKNOWN = "unknown"

_STATUS_RANK = {WITNESSED: 3, PRESENT: 2, ABSENT: 2, UNKNOWN: 1}


@dataclass(frozen=True)
class LengthEntry:
    status: str
    witness: CycleWitness | None = None
    source: str = ""
    provenance: str = ""
    detail: str = ""

    def __post_init__(self):
        if self.status not in _STATUS_RANK:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status in (WITNESSED, PRESENT) and self.witness is None:
            raise ValueError(f"status {self.status!r} requires a witness")
        if self.status in (ABSENT, UNKNOWN) and self.witness is not None:
            raise ValueError(f"status {self.status!r} must not carry a witness")


@dataclass(frozen=True)
class StepRecord:
    """One pipeline step: which check ran, with what numbers, and how it went."""

    name: str
    inequality: str
    outcome: str  # "ok" | "failed" | "error:<ExceptionName>"
    detail: str = ""


@dataclass
class SpectrumReport:
    """Status of every investigated cycle length of one graph."""

    n: int
    entries: dict[int, LengthEntry] = field(default_factory=dict)
    steps: list[StepRecord] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def status_of(self, length: int) -> str:
        entry = self.entries.get(length)
        return entry.status if entry is not None else UNKNOWN

    def present_set(self) -> frozenset[int]:
        return frozenset(
            ell
            for ell, e in self.entries.items()
            if e.status in (WITNESSED, PRESENT)
        )

    def absent_set(self) -> frozenset[int]:
        return frozenset(ell for ell, e in self.entries.items() if e.status == ABSENT)

    def unknown_set(self) -> frozenset[int]:
        return frozenset(
            ell for ell, e in self.entries.items() if e.status == UNKNOWN
        )

    def is_pancyclic_verdict(self) -> bool | None:
        """True/False when decided for every length in [3, n]; None otherwise."""
        for ell in range(3, self.n + 1):
            status = self.status_of(ell)
            if status == ABSENT:
                return False
            if status == UNKNOWN:
                return None
        return True

    def to_json_dict(self) -> dict:
        lengths = {}
        for ell in sorted(self.entries):
            e = self.entries[ell]
            item: dict = {"status": e.status, "source": e.source}
            if e.witness is not None:
                item["witness"] = list(e.witness.vertices)
            if e.provenance:
                item["provenance"] = e.provenance
            if e.detail:
                item["detail"] = e.detail
            lengths[str(ell)] = item
        out: dict = {"n": self.n, "lengths": lengths}
        if self.steps:
            out["steps"] = [
                {
                    "name": s.name,
                    "inequality": s.inequality,
                    "outcome": s.outcome,
                    **({"detail": s.detail} if s.detail else {}),
                }
                for s in self.steps
            ]
        if self.flags:
            out["flags"] = list(self.flags)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "SpectrumReport":
        report = cls(n=int(data["n"]))
        for key, item in data.get("lengths", {}).items():
            witness = None
            if "witness" in item:
                witness = CycleWitness(tuple(item["witness"]))
            report.entries[int(key)] = LengthEntry(
                status=item["status"],
                witness=witness,
                source=item.get("source", ""),
                provenance=item.get("provenance", ""),
                detail=item.get("detail", ""),
            )
        for s in data.get("steps", []):
            report.steps.append(
                StepRecord(
                    name=s["name"],
                    inequality=s.get("inequality", ""),
                    outcome=s.get("outcome", ""),
                    detail=s.get("detail", ""),
                )
            )
        report.flags.extend(data.get("flags", []))
        return report

    @classmethod
    def from_json(cls, text: str) -> "SpectrumReport":
        return cls.from_json_dict(json.loads(text))


def better_entry(a: LengthEntry | None, b: LengthEntry) -> LengthEntry:
    """Merge rule: constructive beats oracle beats unknown; a decided
    present/absent clash is a soundness bug and raises."""
    if a is None:
        return b
    decided = {WITNESSED, PRESENT}
    if (a.status in decided and b.status == ABSENT) or (
        b.status in decided and a.status == ABSENT
    ):
        from .errors import InternalContradiction

        raise InternalContradiction(
            f"one producer claims presence and another absence "
            f"({a.source!r} vs {b.source!r})"
        )
    return b if _STATUS_RANK[b.status] > _STATUS_RANK[a.status] else a
