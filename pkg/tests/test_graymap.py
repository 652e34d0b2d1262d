import random

import pytest

from butsoncodes.butson import LogMatrix, fourier, is_butson
from butsoncodes.graymap import (
    gray_context, inner_product_matrix, lift_phi, lift_psi, map_word, phi, psi, reduce_squarefree,
)
from butsoncodes.ring import PhaseParams, distance
from butsoncodes.ring import factorize
from suite import BH48, suite


def ctx(p, s, m=1):
    return gray_context(PhaseParams(p, s, m))


def test_inner_product_matrix_is_sylvester():
    D = inner_product_matrix(2, 2)
    assert D.rows == ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 1), (0, 1, 1, 0))
    assert is_butson(inner_product_matrix(3, 2))


def test_phi_tables():
    c = ctx(2, 2)
    assert [phi(x, c) for x in range(4)] == [(0, 0), (0, 1), (1, 1), (1, 0)]
    c = ctx(3, 2)
    assert phi(1, c) == (0, 1, 2) and phi(2, c) == (0, 2, 1)
    assert phi(4, ctx(2, 3)) == (1, 1, 1, 1)


def test_psi_composite():
    c = ctx(2, 2, 3)
    assert psi(1, c) == (5, 2)
    assert psi(0, c) == (0, 0)
    assert psi(2, c) == (1, 1)
    with pytest.raises(ValueError):
        phi(1, c)


def test_map_word():
    assert map_word("phi", (0, 2), ctx(2, 2)) == (0, 0, 1, 1)
    assert map_word("psi", (0,), ctx(2, 2, 3)) == (0, 0)
    assert map_word("phi", (1, 3), ctx(2, 2)) == (0, 1, 1, 0)
    with pytest.raises(ValueError):
        map_word("phi", (4,), ctx(2, 2))


def test_psi_reduces_to_phi_when_m_is_one():
    for p, s in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        c = ctx(p, s)
        assert all(psi(x, c) == phi(x, c) for x in range(p**s))


@pytest.mark.parametrize("p,s,m", [(2, 2, 1), (2, 3, 1), (3, 2, 1), (2, 2, 3), (3, 2, 5), (2, 2, 5)])
def test_maps_are_injective_isometries(p, s, m):
    c = ctx(p, s, m)
    P = c.params
    images = [psi(x, c) for x in range(P.k)]
    assert len(set(images)) == P.k
    for x in range(P.k):
        for y in range(P.k):
            assert distance("dagger", (x,), (y,), P) == sum(a != b for a, b in zip(images[x], images[y]))


def test_lift_examples():
    assert lift_psi(LogMatrix(((0,),), 9), 3).rows == ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    H = lift_psi(BH48, 2)
    assert (H.n, H.k) == (16, 2) and is_butson(H)
    F = lift_psi(fourier(27), 3)
    assert (F.n, F.k) == (243, 3) and is_butson(F)
    assert lift_phi(BH48) == H


def test_reduce_squarefree():
    F6 = fourier(6)
    assert reduce_squarefree(F6) == F6
    R = reduce_squarefree(LogMatrix(((0,),), 9))
    assert R.rows == ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    R = reduce_squarefree(BH48)
    assert (R.n, R.k) == (16, 2) and is_butson(R)
    R = reduce_squarefree(fourier(36))
    assert (R.n, R.k) == (36 * 6, 6) and is_butson(R)


def test_lift_psi_on_suite_is_butson():
    for name, M in suite().items():
        for p in factorize(M.k):
            if M.n * M.k <= 2048:
                assert is_butson(lift_psi(M, p)), (name, p)


def test_lift_rejects_foreign_prime():
    with pytest.raises(ValueError):
        lift_psi(fourier(4), 3)


def test_random_word_isometry():
    rng = random.Random(3)
    for cfg in [(2, 3, 1), (3, 2, 5)]:
        c = ctx(*cfg)
        k = c.params.k
        for _ in range(200):
            n = rng.randrange(1, 8)
            x = tuple(rng.randrange(k) for _ in range(n))
            y = tuple(rng.randrange(k) for _ in range(n))
            fx, fy = map_word("psi", x, c), map_word("psi", y, c)
            assert distance("dagger", x, y, c.params) == sum(a != b for a, b in zip(fx, fy))
