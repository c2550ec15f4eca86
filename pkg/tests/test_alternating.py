from collections import Counter

import pytest

from blockledger.alternating import restrict_block, verify_alt
from blockledger.blocks import BlockLabel, block_labels, block_report
from blockledger.partition import Partition, conjugate

P = Partition


def test_a5_principal_2_block():
    view = restrict_block(BlockLabel(2, P((1,)), 2))
    # A_5 has degrees 1, 3, 3, 4, 5; the 4 is a block of defect zero
    assert sorted(view.degrees) == [1, 3, 3, 5]
    assert view.ht_set == {0}
    assert (view.k, view.dl_q, view.dlq_mode) == (2, 1, "exact")
    assert view.q_order_valuation == 2
    assert view.paper_gap
    assert verify_alt(BlockLabel(2, P((1,)), 2)).ok


def test_a6_principal_3_block():
    view = restrict_block(BlockLabel(3, P(()), 2))
    # A_6 has degrees 1, 5, 5, 8, 8, 9, 10; the 9 has defect zero
    assert sorted(view.degrees) == [1, 5, 5, 8, 8, 10]
    assert view.ht_set == {0} and view.dl_q == 1 and view.dlq_mode == "formula"
    assert verify_alt(BlockLabel(3, P(()), 2)).ok


def test_defect_zero_block():
    view = restrict_block(BlockLabel(3, P((3, 1, 1)), 0))
    assert view.degrees == [3, 3] and view.ht_set == {0} and view.dl_q == 0
    assert verify_alt(BlockLabel(3, P((3, 1, 1)), 0)).ok
    view = restrict_block(BlockLabel(5, P((3, 2)), 0))
    assert view.degrees == [5] and view.ht_set == {0}


def test_small_n_rejected():
    with pytest.raises(ValueError):
        restrict_block(BlockLabel(2, P(()), 2))


def test_odd_p_views_match_source_blocks():
    for p in (3, 5):
        for n in range(5, 26):
            for lab in block_labels(n, p):
                view = restrict_block(lab)
                report = block_report(lab)
                assert view.ht_set == report.ht_set
                if conjugate(lab.core) != lab.core:
                    assert Counter(view.degrees) == Counter(report.degrees)
                else:
                    expected = Counter()
                    for lam, d in zip(report.members, report.degrees):
                        if lam == conjugate(lam):
                            expected[d // 2] += 2
                        elif lam > conjugate(lam):
                            expected[d] += 1
                    assert Counter(view.degrees) == expected


def test_two_split_heights_drop_by_one():
    for n in range(5, 21):
        for lab in block_labels(n, 2):
            if lab.weight == 0:
                continue
            report = block_report(lab)
            view = restrict_block(lab)
            heights = iter(view.heights)
            for lam, h in zip(report.members, report.heights):
                lam_c = conjugate(lam)
                if lam_c == lam:
                    assert next(heights) == next(heights) == h - 1
                elif lam > lam_c:
                    assert next(heights) == h


def test_exact_mode_for_small_two_blocks():
    for n in range(5, 26):
        for lab in block_labels(n, 2):
            view = restrict_block(lab)
            if 1 <= lab.weight and 2 * lab.weight <= 16:
                assert view.dlq_mode == "exact"
                assert view.dl_q <= view.k
