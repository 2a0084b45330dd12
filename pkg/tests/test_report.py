import json

import pytest

from pancyclic.core import CycleWitness
from pancyclic.errors import InternalContradiction
from pancyclic.report import (
    ABSENT,
    PRESENT,
    UNKNOWN,
    WITNESSED,
    LengthEntry,
    SpectrumReport,
    StepRecord,
    better_entry,
)


class TestLengthEntryRules:
    def test_witnessed_requires_witness(self):
        with pytest.raises(ValueError):
            LengthEntry(status=WITNESSED)

    def test_absent_refuses_witness(self):
        with pytest.raises(ValueError):
            LengthEntry(status=ABSENT, witness=CycleWitness((0, 1, 2)))

    def test_unknown_status_rejected(self):
        with pytest.raises(ValueError):
            LengthEntry(status="maybe")


class TestBetterEntry:
    def w(self, status, source=""):
        witness = CycleWitness((0, 1, 2)) if status in (WITNESSED, PRESENT) else None
        return LengthEntry(status=status, witness=witness, source=source)

    def test_constructive_beats_oracle(self):
        merged = better_entry(self.w(PRESENT, "oracle"), self.w(WITNESSED, "chain"))
        assert merged.status == WITNESSED and merged.source == "chain"
        merged = better_entry(self.w(WITNESSED, "chain"), self.w(PRESENT, "oracle"))
        assert merged.status == WITNESSED and merged.source == "chain"

    def test_anything_beats_unknown(self):
        unknown = LengthEntry(status=UNKNOWN, detail="budget")
        assert better_entry(unknown, self.w(PRESENT)).status == PRESENT
        assert better_entry(None, unknown).status == UNKNOWN

    def test_presence_absence_clash_raises(self):
        with pytest.raises(InternalContradiction):
            better_entry(self.w(WITNESSED, "chain"),
                         LengthEntry(status=ABSENT, source="oracle"))

    def test_ties_keep_first(self):
        merged = better_entry(self.w(PRESENT, "first"), self.w(PRESENT, "second"))
        assert merged.source == "first"


class TestVerdict:
    def test_undecided_when_any_unknown(self):
        rep = SpectrumReport(n=4)
        rep.entries[3] = LengthEntry(status=PRESENT, witness=CycleWitness((0, 1, 2)))
        rep.entries[4] = LengthEntry(status=UNKNOWN, detail="budget")
        assert rep.is_pancyclic_verdict() is None

    def test_false_on_any_absence(self):
        rep = SpectrumReport(n=4)
        rep.entries[3] = LengthEntry(status=ABSENT)
        assert rep.is_pancyclic_verdict() is False

    def test_missing_length_counts_as_unknown(self):
        rep = SpectrumReport(n=4)
        rep.entries[3] = LengthEntry(status=PRESENT, witness=CycleWitness((0, 1, 2)))
        assert rep.is_pancyclic_verdict() is None


class TestWireFormat:
    DOCUMENTED = {
        "n": 5,
        "lengths": {
            "3": {"status": "absent", "source": "cycle_of_length"},
            "5": {
                "status": "witnessed",
                "witness": [0, 1, 2, 3, 4],
                "source": "hamilton_cycle",
                "provenance": "upper_range_chain",
            },
            "4": {"status": "unknown", "source": "cycle_of_length",
                  "detail": "search budget exhausted"},
        },
        "steps": [
            {"name": "middle:pool_count",
             "inequality": "t = floor(eps*k^2/40) = 0 >= 1",
             "outcome": "failed"}
        ],
        "flags": ["example flag"],
    }

    def test_parses_documented_schema(self):
        rep = SpectrumReport.from_json(json.dumps(self.DOCUMENTED))
        assert rep.n == 5
        assert rep.present_set() == {5}
        assert rep.absent_set() == {3}
        assert rep.unknown_set() == {4}
        assert rep.entries[5].witness.vertices == (0, 1, 2, 3, 4)
        assert rep.steps[0].outcome == "failed"
        assert rep.flags == ["example flag"]

    def test_emits_documented_schema(self):
        rep = SpectrumReport.from_json(json.dumps(self.DOCUMENTED))
        out = rep.to_json_dict()
        assert out == self.DOCUMENTED

    def test_json_is_stable(self):
        rep = SpectrumReport.from_json(json.dumps(self.DOCUMENTED))
        assert rep.to_json() == rep.to_json()
        assert json.loads(rep.to_json()) == self.DOCUMENTED

    def test_round_trip_preserves_step_log(self):
        rep = SpectrumReport(n=3)
        rep.steps.append(StepRecord(name="x", inequality="a > b", outcome="ok",
                                    detail="why"))
        back = SpectrumReport.from_json(rep.to_json())
        assert back.steps == rep.steps
