import random
from fractions import Fraction

import pytest

from deligne_o.brauer import (
    ArityError,
    BrauerDiagram,
    BrauerElement,
    UndefinedIdempotentError,
    cap,
    compose,
    count_diagrams,
    cup,
    diagrams,
    dim_R,
    e_lambda,
    e_lambda_i,
    hom_dim,
    idempotent_classes,
    identity,
    is_local,
    permutation,
    primitive_decomposition,
    tensor,
    verify,
    young_symmetrizer,
)
from deligne_o.diagram import k_invariants
from deligne_o.osp import lambda_r
from deligne_o.partition import BOX, EMPTY, Partition, partitions_up_to
from deligne_o.ring import bilinear_form

P = lambda *p: Partition(p)  # noqa: E731
DELTAS = (-2, -1, 0, 1, 2, 3)


def el(d, delta, c=1):
    return BrauerElement.from_diagram(d, delta, c)


def cupcap():
    return compose(cap(), cup())[0]


def test_compose_examples():
    d, b = compose(cup(), cap())
    assert d.type == (0, 0) and b == 1
    for r in range(4):
        assert compose(identity(r), identity(r)) == (identity(r), 0)
    assert compose(cupcap(), cupcap()) == (cupcap(), 1)
    with pytest.raises(ArityError):
        compose(cup(), cup())


def test_diagram_validation():
    with pytest.raises(ValueError):
        BrauerDiagram(1, 1, (0, 0))
    with pytest.raises(ValueError):
        BrauerDiagram(1, 0, (0,))
    d = BrauerDiagram.from_pairs(2, 2, [(0, 3), (1, 2)])
    assert d == permutation([1, 0])
    assert BrauerDiagram.from_index(2, 2, d.index) == d


def test_basis_sizes():
    assert [count_diagrams(2 * r) for r in range(6)] == [1, 1, 3, 15, 105, 945]
    for r in range(5):
        ds = list(diagrams(r, r))
        assert len(ds) == count_diagrams(2 * r)
        assert len({d.partner for d in ds}) == len(ds)
        assert [d.index for d in ds] == list(range(len(ds)))


def test_tensor_and_permutations():
    assert tensor(identity(1), identity(2)) == identity(3)
    s = permutation([1, 0])
    assert compose(s, s) == (identity(2), 0)
    assert tensor(cup(), cap()).type == (2, 2)
    assert sum(1 for d in diagrams(3, 3) if d.is_permutation()) == 6


def test_algebra_examples():
    delta = Fraction(5)
    e = el(cupcap(), delta)
    assert e @ e == e * delta
    assert not e.projection_pi()
    s = el(permutation([1, 0]), delta)
    assert s.projection_pi() == s
    with pytest.raises(ArityError):
        el(cup(), delta) @ el(cup(), delta)


def test_associativity():
    rng = random.Random(5)
    for _ in range(100):
        a, b, c, d = (rng.choice([0, 2, 4]) for _ in range(4))
        if a + b > 6 or b + c > 6 or c + d > 6:
            continue
        delta = Fraction(rng.randint(-3, 3))
        x = el(rng.choice(list(diagrams(a, b))), delta)
        y = el(rng.choice(list(diagrams(b, c))), delta)
        z = el(rng.choice(list(diagrams(c, d))), delta)
        assert (z @ y) @ x == z @ (y @ x)


def test_young_symmetrizers():
    assert young_symmetrizer(BOX) == BrauerElement.identity(1, 0)
    s = permutation([1, 0])
    z2 = young_symmetrizer(P(2), 3)
    assert z2 == (el(identity(2), 3) + el(s, 3)) * Fraction(1, 2)
    z11 = young_symmetrizer(P(1, 1), 3)
    assert z11 == (el(identity(2), 3) - el(s, 3)) * Fraction(1, 2)
    assert z2 + z11 == BrauerElement.identity(2, 3)
    for lam in partitions_up_to(4):
        z = young_symmetrizer(lam, 1)
        assert z.is_idempotent()
        assert z.projection_pi() == z


def test_e_lambda_examples():
    assert e_lambda(BOX, 7) == BrauerElement.identity(1, 7)
    assert e_lambda(P(2), 0) == young_symmetrizer(P(2), 0)
    for delta in (1, 2, -3, Fraction(1, 2)):
        expected = young_symmetrizer(P(2), delta) - el(cupcap(), delta, Fraction(1) / Fraction(delta))
        assert e_lambda(P(2), delta) == expected


@pytest.mark.parametrize("delta", DELTAS)
def test_e_lambda_properties(delta):
    for lam in partitions_up_to(3):
        e = e_lambda(lam, delta)
        assert e.is_idempotent()
        assert e.projection_pi()
        assert is_local(e)


def test_decomposition_is_orthogonal():
    for delta in (0, 2):
        pieces = primitive_decomposition(BrauerElement.identity(3, delta))
        total = BrauerElement.zero(3, 3, delta)
        for i, a in enumerate(pieces):
            total = total + a
            for j, b in enumerate(pieces):
                assert (a @ b == a) if i == j else not (a @ b)
        assert total == BrauerElement.identity(3, delta)


def test_e_lambda_i():
    for lam, delta in [(P(2), 2), (BOX, 0), (EMPTY, 3), (P(1, 1), -1)]:
        for i in range(3):
            e = e_lambda_i(lam, i, delta)
            assert e.type == (lam.size + 2 * i,) * 2
            assert e.is_idempotent()
    assert e_lambda_i(P(2), 0, 2) == e_lambda(P(2), 2)
    with pytest.raises(UndefinedIdempotentError):
        e_lambda_i(EMPTY, 1, 0)


def test_hom_dim_examples():
    assert hom_dim(BOX, BOX, 2) == 1
    assert hom_dim(P(2), EMPTY, 0) == 1
    assert hom_dim(P(2), P(1, 1), 5) == 0
    assert hom_dim(P(2), BOX, 1) == 0


@pytest.mark.parametrize("delta", DELTAS)
def test_hom_dim_matches_form(delta):
    small = list(partitions_up_to(3))
    for a in small:
        for b in small:
            if (a.size - b.size) % 2 == 0:
                assert hom_dim(a, b, delta) == bilinear_form(a, b, delta)


def test_dim_examples():
    for delta in DELTAS:
        assert dim_R(EMPTY, delta) == 1
        assert dim_R(BOX, delta) == delta
        expected = 0 if delta == 0 else Fraction(delta * (delta + 1), 2) - 1
        assert dim_R(P(2), delta) == expected


@pytest.mark.parametrize("delta", DELTAS)
def test_dim_vanishes_iff_k_positive(delta):
    for lam in partitions_up_to(3):
        assert (dim_R(lam, delta) != 0) == (k_invariants(lam, delta).k == 0)


@pytest.mark.parametrize("delta", (0, 1, 2))
def test_idempotent_class_count(delta):
    for r in range(4):
        assert len(idempotent_classes(r, delta)) == len(lambda_r(r, delta))


def test_json_dump():
    e = e_lambda(P(2), 2)
    data = e.to_json()
    assert {"pairing": [[0, 1], [2, 3]], "coefficient": "-1/2"} in data
    assert BrauerElement.from_json(2, 2, data, 2) == e


def test_verify_small():
    results = verify(2, [0, 3])
    assert len(results) == 6 and all(r.ok for r in results)
