import pytest

from blockledger.abacus import core_tower, is_p_core, p_core
from blockledger.blocks import BlockLabel, block_labels, block_report, height_valuation
from blockledger.constructions import family_towers, gamma_a, lambda_family, verify_family
from blockledger.errors import CorruptionError
from blockledger.partition import Partition, conjugate, partitions

P = Partition


@pytest.mark.parametrize("p,a,expected", [(3, 2, (3, 1, 1)), (2, 1, (2, 1)), (5, 1, (5, 1))])
def test_gamma_a(p, a, expected):
    g = gamma_a(p, a)
    assert g == expected and sum(g) == p + a and is_p_core(g, p)


@pytest.mark.parametrize("p,a", [(3, 0), (3, 3), (2, 2)])
def test_gamma_a_range(p, a):
    with pytest.raises(ValueError):
        gamma_a(p, a)


def test_family_of_principal_2_block_of_s4():
    f = lambda_family(BlockLabel(2, P(()), 2))
    assert f.k == 2 and f.heights == [0, 1]
    assert f.members[1] == (2, 2)
    # the height-1 member of this block is unique
    lab = BlockLabel(2, P(()), 2)
    assert [lam for lam in partitions(4) if height_valuation(lam, lab) == 1] == [(2, 2)]
    assert height_valuation(f.members[0], lab) == 0


def test_family_single_digit_weight():
    for p in (3, 5, 7):
        for w in range(1, p):
            f = lambda_family(BlockLabel(p, P(()), w))
            assert f.k == 1 and f.heights == [0]
            assert f.towers[0].to_json()[1][0] == str(w)


def test_family_s5_block():
    lab = BlockLabel(2, P((1,)), 2)
    f = lambda_family(lab)
    assert f.members[1] == (3, 1, 1)
    assert f.towers[1].to_json() == [["1"], ["1", "1"]]
    assert f.heights == [0, 1]
    assert f.self_conjugate_flags == [False, True]


def test_family_needs_positive_weight():
    with pytest.raises(ValueError):
        lambda_family(BlockLabel(3, P((1,)), 0))


def test_verify_family_examples():
    assert verify_family(BlockLabel(2, P(()), 2)).ok
    assert verify_family(BlockLabel(5, P((1,)), 3)).ok
    check = verify_family(BlockLabel(3, P(()), 4))
    assert check.ok and check.k == 2
    assert lambda_family(BlockLabel(3, P(()), 4)).heights == [0, 1]


def test_rewrite_rejects_unexpected_layers():
    import blockledger.constructions as c

    with pytest.raises(CorruptionError):
        c._rewrite_upper((P((2, 2)), P(()), P(())), 3, 1)
    with pytest.raises(CorruptionError):
        c._rewrite_lower((P((1,)), P((1,)), P(())), 3, 1)


def test_ladder_properties_over_range():
    for p in (2, 3, 5, 7):
        for n in range(1, 31):
            for lab in block_labels(n, p):
                if lab.weight == 0:
                    continue
                towers = family_towers(lab)
                k = len(towers)
                f = lambda_family(lab)
                assert f.heights == list(range(k))
                assert len(set(f.members)) == k
                for j in range(1, k):
                    lo, hi = k - j, k - j + 1
                    assert towers[j].layer_size(lo) == towers[j - 1].layer_size(lo) + p
                    assert towers[j].layer_size(hi) == towers[j - 1].layer_size(hi) - 1
                for i, lam in enumerate(f.members):
                    assert p_core(lam, p) == lab.core and core_tower(lam, p) == towers[i]
                    if conjugate(lam) in f.members:
                        assert f.members.index(conjugate(lam)) == i


def test_family_heights_witness_the_block_heights():
    lab = BlockLabel(3, P(()), 9)
    f = lambda_family(lab)
    assert set(f.heights) <= set(block_report(lab).ht_set)
