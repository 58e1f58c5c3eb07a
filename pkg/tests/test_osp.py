import pytest

from deligne_o.diagram import k_invariants
from deligne_o.osp import (
    OspTensor,
    SuperRank,
    UnsupportedCaseError,
    ds_image,
    is_nonzero,
    is_projective_tensor,
    k_zero_specialization,
    lambda_r,
    summands_report,
    tensor_summands,
)
from deligne_o.partition import BOX, EMPTY, Partition, partitions_up_to

P = lambda *p: Partition(p)  # noqa: E731
G = SuperRank


def test_super_rank():
    g = G(5, 2)
    assert (g.delta, g.ell, g.cutoff) == (1, 2, 2)
    assert str(g) == "OSp(5|4)"
    with pytest.raises(ValueError):
        G(-1, 0)


def test_lambda_r_examples():
    assert set(lambda_r(2, 3)) == {P(2), P(1, 1), EMPTY}
    assert set(lambda_r(2, 0)) == {P(2), P(1, 1)}
    assert all(lambda_r(1, d) == [BOX] for d in range(-3, 4))
    assert lambda_r(0, 0) == [EMPTY]


def test_lambda_r_parity():
    for r in range(7):
        for d in (-1, 0, 2):
            assert all(lam.size % 2 == r % 2 for lam in lambda_r(r, d))


def test_is_nonzero_examples():
    assert is_nonzero(P(2), G(3, 1))
    assert not is_nonzero(P(2), G(1, 0))
    assert all(is_nonzero(EMPTY, G(m, n)) for m in range(5) for n in range(3))


def test_tensor_summands_examples():
    assert set(tensor_summands(G(3, 1), 2)) == {P(2), P(1, 1), EMPTY}
    assert tensor_summands(G(1, 0), 2) == [EMPTY]
    # the box is negligible at delta = 0, so nothing survives for OSp(0|0)
    assert tensor_summands(G(0, 0), 1) == []


def test_projective_examples():
    assert is_projective_tensor(P(2), G(3, 1))
    assert not is_projective_tensor(EMPTY, G(3, 1))
    for lam in partitions_up_to(4):
        if k_invariants(lam, 5).k == 0:
            assert is_projective_tensor(lam, G(5, 0))
    with pytest.raises(ValueError):
        is_projective_tensor(P(2), G(1, 0))


def test_ds_examples():
    assert ds_image(P(2), G(3, 1)) is None
    assert ds_image(EMPTY, G(3, 1)) == OspTensor(EMPTY, G(1, 0))
    assert ds_image(BOX, G(4, 1)) == OspTensor(BOX, G(2, 0))
    with pytest.raises(ValueError):
        ds_image(BOX, G(1, 1))
    with pytest.raises(ValueError):
        ds_image(BOX, G(4, 0))


def test_specialization_examples():
    assert k_zero_specialization(P(2), G(3, 0))
    assert not k_zero_specialization(P(2), G(0, 1))
    # 2 + 2 <= 3 fails, and indeed k((2,2), -1) = 1
    assert not k_zero_specialization(P(2, 2), G(1, 1))
    assert k_invariants(P(2, 2), -1).k == 1
    with pytest.raises(UnsupportedCaseError):
        k_zero_specialization(BOX, G(2, 1))


def test_specializations_agree_with_k():
    for lam in partitions_up_to(10):
        for a in range(7):
            for g in (G(a, 0), G(0, a), G(1, a)):
                assert k_zero_specialization(lam, g) == (k_invariants(lam, g.delta).k == 0)


def test_ds_summand_count_monotone():
    for m in range(2, 8):
        for n in range(1, 4):
            for r in range(7):
                assert len(tensor_summands(G(m, n), r)) >= len(tensor_summands(G(m - 2, n - 1), r))


def test_ds_image_lands_in_summands():
    for m in range(2, 7):
        for n in range(1, 4):
            for r in range(5):
                for lam in tensor_summands(G(m, n), r):
                    img = ds_image(lam, G(m, n))
                    if img is not None:
                        assert img.partition in tensor_summands(img.rank, r)


def test_kernel_index_increases():
    for m in range(0, 6):
        for n in range(0, 4):
            assert G(m + 2, n + 1).cutoff + 1 > G(m, n).cutoff + 1


def test_classical_semisimple_regime():
    for r in range(6):
        m = 2 * r + 1
        assert tensor_summands(G(m, 0), r) == lambda_r(r, m)


def test_report():
    rep = summands_report(G(3, 1), 2)
    assert rep["m"] == 3 and rep["n"] == 1 and rep["r"] == 2
    flags = {tuple(row["partition"]): row["projective"] for row in rep["summands"]}
    assert flags == {(): False, (2,): True, (1, 1): True}
