import json

import pytest

from blockledger.blocks import BlockLabel
from blockledger.partition import Partition, partition_count
from blockledger.verifier import SweepConfig, check_block, sweep


def test_small_sweep_is_clean():
    report = sweep(SweepConfig(10, [2, 3]))
    assert report.ok and report.violations == []
    for p in (2, 3):
        for n in range(1, 11):
            rows = [r for r in report.rows if r["p"] == p and r["n"] == n]
            assert sum(r["members"] for r in rows) == partition_count(n)


def test_trivial_sweep():
    report = sweep(SweepConfig(1, [2]))
    assert len(report.rows) == 1
    row = report.rows[0]
    assert (row["core"], row["weight"], row["dl"], row["ht"]) == ("1", 0, 0, [0])
    assert report.ok


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(0, [2])
    with pytest.raises(ValueError):
        SweepConfig(5, [])
    with pytest.raises(ValueError):
        SweepConfig(5, [6])
    cfg = SweepConfig(30, [3, 2, 3])
    assert cfg.primes == [2, 3]
    assert cfg.cross_check(25) and not cfg.cross_check(26)
    assert SweepConfig(30, [2], cross_check_heights=True).cross_check(30)


def test_report_is_independent_of_jobs():
    cfg = dict(max_n=14, primes=[2, 3], include_alternating=True)
    one = sweep(SweepConfig(**cfg, jobs=1))
    many = sweep(SweepConfig(**cfg, jobs=3))
    assert json.dumps(one.to_json()) == json.dumps(many.to_json())


def test_paper_gaps_are_flagged_not_violations():
    report = sweep(SweepConfig(7, [2], include_alternating=True))
    assert report.ok
    gaps = {(g["n"], g["core"]) for g in report.paper_gaps}
    assert (5, "1") in gaps and (7, "2,1") in gaps


def test_check_block_reports_problems(monkeypatch):
    import blockledger.verifier as v
    from blockledger.constructions import FamilyCheck

    monkeypatch.setattr(v, "verify_family", lambda label: FamilyCheck(False, 2, "forced"))
    rows = check_block(BlockLabel(2, Partition(()), 2), True, False)
    assert rows[0]["problems"] == ["family: forced"]
