from pathlib import Path

import pytest

from bicmgraphs.audit import run_audit
from bicmgraphs.errors import SizeGuardError

GOLDEN = Path(__file__).parent / "golden" / "audit_n4.json"


def test_audit_small_counts():
    report = run_audit(5)
    assert report.ok
    assert [r.scanned for r in report.rows] == [1, 2, 6, 21]
    assert [r.bicm for r in report.rows] == [1, 1, 2, 3]
    assert [r.bipartite_bicm for r in report.rows] == [1, 0, 1, 0]
    assert [r.inseparable_bicm for r in report.rows] == [1, 0, 1, 0]
    assert report.char_disagreements == []


def test_audit_bicm_classes_at_four():
    report = run_audit(4)
    found = {tuple(sorted(tuple(e) for e in cls)) for cls in report.bicm_classes[4]}
    path = ((1, 2), (2, 3), (3, 4))
    complete = tuple((i, j) for i in range(1, 5) for j in range(i + 1, 5))
    assert found == {path, complete}


def test_audit_deterministic_across_seeds():
    a = run_audit(4, seed=0).to_json()
    b = run_audit(4, seed=12345).to_json()
    assert a == b


def test_audit_matches_golden():
    report = run_audit(4)
    assert GOLDEN.exists(), "golden file missing; regenerate with the CLI --regen"
    assert report.to_json() == GOLDEN.read_text()


def test_audit_guards():
    with pytest.raises(SizeGuardError):
        run_audit(7)
    with pytest.raises(SizeGuardError):
        run_audit(9, big=True)


def test_audit_field_override():
    report = run_audit(3, characteristics=(0, 3))
    assert report.ok
    assert report.characteristics == (0, 3)
