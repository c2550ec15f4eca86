"""Acceptance criteria, each run at its stated range and tolerance."""
import time
from math import factorial

import pytest

from blockledger.abacus import core_tower, from_core_quotient, from_tower, p_core, p_quotient
from blockledger.alternating import restrict_block, verify_alt
from blockledger.blocks import BlockLabel, block_labels, enumerate_block, height_tower, height_valuation
from blockledger.constructions import lambda_family
from blockledger.dataio import bundled, check_all
from blockledger.groupcalc import derived_length, nilpotency_class, sylow_symmetric, unitriangular
from blockledger.partition import Partition, degree, partition_count, partitions
from blockledger.verifier import SweepConfig, sweep

from oracles import count_syt, cores_by_stripping


def criterion(number, title):
    return pytest.mark.criterion(number, title)


@criterion(1, "dl(D) <= |ht(B)| <= |cd(B)| for every block, n <= 30, p in {2,3,5,7}, under 120 s")
def test_ac1_block_sweep():
    start = time.perf_counter()
    report = sweep(SweepConfig(30, [2, 3, 5, 7], jobs=1))
    elapsed = time.perf_counter() - start
    print(f"AC1 sweep: {len(report.rows)} blocks, {len(report.violations)} violations, {elapsed:.1f} s")
    assert report.violations == []
    for row in report.rows:
        assert row["dl"] <= len(row["ht"]) <= row["cd_count"]
    assert elapsed < 120


@criterion(2, "tower height formula equals valuation height, n <= 25, p in {2,3,5}")
def test_ac2_height_formulas_agree():
    checked = 0
    for p in (2, 3, 5):
        for n in range(1, 26):
            for label in block_labels(n, p):
                for lam in enumerate_block(label):
                    assert height_tower(lam, label) == height_valuation(lam, label), (lam, p)
                    checked += 1
    print(f"AC2: {checked} (partition, p) pairs agree")


@criterion(3, "family has k distinct members with heights 0..k-1 in every weighted block of the sweep range")
def test_ac3_family_ladder():
    families = 0
    for p in (2, 3, 5, 7):
        for n in range(1, 31):
            for label in block_labels(n, p):
                if label.weight == 0:
                    continue
                fam = lambda_family(label)
                k = len(_base(label.weight, p))
                assert fam.k == k
                assert len(set(fam.members)) == k
                for j, lam in enumerate(fam.members):
                    assert sum(lam) == n
                    if n <= 16:
                        assert cores_by_stripping(tuple(lam), p) == {tuple(label.core)}
                    else:
                        assert p_core(lam, p) == label.core
                    assert height_valuation(lam, label) == j
                families += 1
    print(f"AC3: {families} families checked")


def _base(w, p):
    digits = ""
    while w:
        digits = str(w % p) + digits
        w //= p
    return digits


@criterion(4, "tower and core/quotient round trips for n <= 20; block sizes sum to p(n) for n <= 30")
def test_ac4_round_trips():
    for p in (2, 3, 5):
        for n in range(21):
            for lam in partitions(n):
                assert from_tower(core_tower(lam, p)) == lam
                assert from_core_quotient(p_core(lam, p), p_quotient(lam, p), p) == lam
    for p in (2, 3, 5, 7):
        for n in range(1, 31):
            total = sum(len(enumerate_block(label)) for label in block_labels(n, p))
            assert total == partition_count(n), (n, p)


@criterion(5, "hook-length degrees equal tableau counts for |lambda| <= 8; sum of squares is n! for n <= 10")
def test_ac5_hook_length_formula():
    for n in range(9):
        for lam in partitions(n):
            assert degree(lam) == count_syt(tuple(lam))
    for n in range(11):
        assert sum(degree(lam) ** 2 for lam in partitions(n)) == factorial(n)


@criterion(6, "alternating-group check for 5 <= n <= 25, p in {2,3,5}, exact dl(Q) when wp <= 16 at p = 2")
def test_ac6_alternating():
    for p in (2, 3, 5):
        for n in range(5, 26):
            for label in block_labels(n, p):
                check = verify_alt(label)
                assert check.ok, str(label)
                assert check.view.dlq_mode != "skipped"
                if p == 2 and 1 <= label.weight and 2 * label.weight <= 16:
                    assert check.view.dlq_mode == "exact", str(label)
    label = BlockLabel(2, Partition((1,)), 2)
    view = restrict_block(label)
    assert (view.k, len(view.ht_set), view.dl_q) == (2, 1, 1)
    assert verify_alt(label).ok and view.paper_gap


@criterion(7, "Sylow dl = k, unitriangular class = n - 1, dl <= class, under 60 s")
def test_ac7_groups():
    start = time.perf_counter()
    for p, k in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]:
        G = sylow_symmetric(p**k, p)
        dl, cls = derived_length(G), nilpotency_class(G)
        assert dl == k and dl <= cls, (p, k)
    for p, top in [(2, 5), (3, 4)]:
        for n in range(1, top + 1):
            U = unitriangular(n, p)
            cls = nilpotency_class(U)
            assert cls == n - 1 and derived_length(U) <= cls
    elapsed = time.perf_counter() - start
    print(f"AC7 groups: {elapsed:.1f} s")
    assert elapsed < 60


@criterion(8, "bundled order-28431 group: a = 2 > b = 1, dl <= |ht| fails 3 > 2, question A passes 3 <= 4")
def test_ac8_counterexample():
    data = bundled()
    [block] = data.blocks
    assert data.group_order == 28431 and data.prime == 3
    assert sorted(block.degrees) == [1, 3, 13, 39]
    assert sorted(block.defect_group_cd) == [1, 3, 9] and block.defect_group_dl == 3
    verdicts = {v.check: v for v in check_all(data)}
    conj = verdicts["height_conjecture"]
    assert conj.status == "counterexample" and conj.detail == {"a": 2, "b": 1}
    assert verdicts["dl_le_ht"].status == "fail"
    assert (verdicts["dl_le_ht"].detail["dl"], verdicts["dl_le_ht"].detail["ht_count"]) == (3, 2)
    assert verdicts["question_a"].status == "pass"
    assert verdicts["question_a"].detail == {"dl": 3, "cd_count": 4}
