import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from butsoncodes.butson import (
    LogMatrix, MonomialPair, apply_monomial, build_generator, dephase, embed_phase, fourier,
    gram_offdiag_max, is_balanced, is_butson, is_butson_pairwise, kron_factors, kronecker,
    kronecker_all, row_stats, span_rows, verify_kron_factorization,
)
from suite import BH48, BH84, BH88, span_matrix, span_params, suite


def test_fourier_examples():
    assert fourier(1).rows == ((0,),)
    assert fourier(4).rows == ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 0, 2), (0, 3, 2, 1))
    assert fourier(3).rows == ((0, 0, 0), (0, 1, 2), (0, 2, 1))


def test_log_matrix_validation():
    with pytest.raises(ValueError):
        LogMatrix(((0, 1), (0,)), 2)
    with pytest.raises(ValueError):
        LogMatrix(((0, 2), (0, 0)), 2)
    with pytest.raises(ValueError):
        LogMatrix((), 2)


def test_embed_phase():
    assert embed_phase(fourier(2), 8).rows == ((0, 0), (0, 4))
    assert embed_phase(BH84, 4) == BH84
    e = embed_phase(fourier(4), 8)
    assert e.rows == tuple(tuple(2 * x for x in r) for r in fourier(4).rows)
    assert is_butson(e)
    with pytest.raises(ValueError):
        embed_phase(fourier(4), 6)


def test_kronecker_examples():
    assert embed_phase(kronecker(fourier(2), fourier(4)), 8) == BH88
    A = fourier(5)
    assert kronecker(A, LogMatrix(((0,),), 5)) == A
    K = kronecker(fourier(2), fourier(2))
    assert K.k == 2
    assert K.rows == ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 1), (0, 1, 1, 0))


def test_kronecker_matches_numpy():
    A, B = fourier(3), fourier(4)
    K = kronecker(A, B)
    assert np.allclose(K.complex(), np.kron(A.complex(), B.complex()))


def test_butson_examples():
    assert is_butson(BH48)
    assert not is_butson(LogMatrix(((0, 0), (0, 0)), 2))
    assert is_butson(BH84)


def test_butson_agrees_with_pairwise_and_float():
    rng = random.Random(11)
    for name, M in suite().items():
        assert is_butson(M) == is_butson_pairwise(M) == True, name  # noqa: E712
        assert gram_offdiag_max(M) < 1e-9 * M.n
        if M.n > 1:
            rows = [list(r) for r in M.rows]
            i, j = rng.randrange(1, M.n), rng.randrange(M.n)
            rows[i][j] = (rows[i][j] + 1) % max(M.k, 2)
            bad = LogMatrix(tuple(map(tuple, rows)), max(M.k, 2))
            assert is_butson(bad) == is_butson_pairwise(bad) == (gram_offdiag_max(bad) < 1e-9 * M.n)


def test_dephase():
    M, pair = dephase(BH48)
    assert M == BH48 and pair == MonomialPair.identity(4)
    rows = [list(r) for r in fourier(4).rows]
    rows[1] = [(x + 1) % 4 for x in rows[1]]
    shifted = LogMatrix(tuple(map(tuple, rows)), 4)
    D, pair = dephase(shifted)
    assert D.is_dephased() and is_butson(D)
    assert apply_monomial(shifted, pair) == D


def test_monomial_action():
    F = fourier(4)
    assert apply_monomial(F, MonomialPair.identity(4)) == F
    swap = MonomialPair((1, 0, 2, 3), (0,) * 4, (0, 1, 2, 3), (0,) * 4)
    assert is_butson(apply_monomial(F, swap))
    phase = MonomialPair((0, 1, 2, 3), (1, 1, 1, 1), (0, 1, 2, 3), (0,) * 4)
    assert apply_monomial(F, phase).rows == tuple(tuple((x + 1) % 4 for x in r) for r in F.rows)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(suite())), st.randoms(use_true_random=False))
def test_monomial_equivalence_preserves_butson(name, rnd):
    M = suite()[name]
    n, k = M.n, M.k
    rp, cp = list(range(n)), list(range(n))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    pair = MonomialPair(tuple(rp), tuple(rnd.randrange(k) for _ in range(n)),
                        tuple(cp), tuple(rnd.randrange(k) for _ in range(n)))
    assert is_butson(apply_monomial(M, pair))


def test_generators():
    assert build_generator(2, 3, (1, 1, 0)).rows == ((0, 0, 0, 0), (0, 2, 4, 6))
    assert build_generator(2, 3, (1, 1, 1)).rows == (
        (0, 0, 0, 0, 0, 0, 0, 0), (0, 2, 4, 6, 0, 2, 4, 6), (0, 0, 0, 0, 4, 4, 4, 4))
    assert build_generator(2, 3, (2, 0, 0)).rows == ((0,) * 8, tuple(range(8)))
    with pytest.raises(ValueError):
        build_generator(4, 1, (1,))
    with pytest.raises(ValueError):
        build_generator(2, 2, (0, 1))


def test_span_examples():
    assert span_rows(build_generator(2, 3, (1, 1, 0))) == BH48
    assert span_rows(build_generator(2, 3, (1, 1, 1))) == BH88
    assert span_rows(build_generator(2, 3, (1, 0, 0))).rows == ((0,),)


def test_kron_factorization_examples():
    assert verify_kron_factorization(2, 3, (1, 1, 1))
    assert verify_kron_factorization(2, 1, (2,))
    assert verify_kron_factorization(3, 2, (2, 0))
    assert len(kron_factors(2, 3, (1, 1, 1))) == 2


@pytest.mark.parametrize("p,s,t", span_params(max_order=81))
def test_every_span_is_butson_and_a_kron_product(p, s, t):
    M = span_matrix(p, s, t)
    assert is_butson(M)
    assert M.row_set() == embed_phase(kronecker_all(kron_factors(p, s, t)), p**s).row_set()


@pytest.mark.parametrize("s,t1", [(1, 2), (1, 4), (2, 2), (2, 3), (3, 2)])
def test_first_generator_only_gives_fourier_power_rows(s, t1):
    # the span of A^{t1,0,...,0} over Z_{2^s} is the row set of F_{2^s} tensored t1 - 1 times
    M = span_matrix(2, s, (t1,) + (0,) * (s - 1))
    assert M.row_set() == kronecker_all([fourier(2**s)] * (t1 - 1)).row_set()


def test_row_stats_examples():
    st48 = row_stats(BH48)
    assert st48.repetitions[0] == 2 and st48.bound_ok
    assert st48.pattern_ok
    assert all(r == 1 for r in row_stats(fourier(7)).repetitions)
    assert row_stats(fourier(6)).p is None


def test_balanced():
    assert is_balanced(fourier(5))
    assert is_balanced(kronecker(fourier(2), fourier(2)))
