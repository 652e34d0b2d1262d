import random

import numpy as np
import pytest

from butsoncodes.butson import LogMatrix, fourier, is_butson
from butsoncodes.cocyclic import (
    CocycleMatrix, FiniteGroup, NotAGroupError, NotInvariantError, center, coboundary,
    cocycle_from_invariant, cocycle_witness, extension_group, group_from_factors,
    is_cocycle, is_group_invariant, is_orthogonal_cocycle, parse_group_spec, transversal_cocycle,
)
from suite import BH84, abelian_groups, cocyclic_suite


def fourier_cocycle(n):
    return CocycleMatrix(fourier(n).rows, n)


def test_group_construction():
    G = group_from_factors([8])
    assert G.order == 8 and G.is_abelian() and G.mul(5, 6) == 3
    G = parse_group_spec("Z2xZ4")
    assert G.order == 8 and G.labels[1] == "(0,1)"
    assert parse_group_spec("Z4xZ4").order == 16
    with pytest.raises(ValueError):
        parse_group_spec("Z2*Z4")


def test_bad_tables_rejected():
    with pytest.raises(NotAGroupError):
        FiniteGroup(((0, 1), (1, 1)), ("a", "b"))
    # Latin square with identity that is not associative
    t = ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    with pytest.raises(NotAGroupError):
        FiniteGroup(t, tuple("abcde"))


def test_nonabelian_group_table():
    import itertools
    elems = list(itertools.permutations(range(3)))
    idx = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(idx[tuple(a[x] for x in b)] for b in elems) for a in elems)
    G = FiniteGroup(table, tuple(map(str, elems)), idx[(0, 1, 2)])
    assert not G.is_abelian()
    assert all(G.mul(a, G.inv(a)) == G.identity for a in range(6))


def test_cocycle_examples():
    rng = random.Random(2)
    G = group_from_factors([2, 4])
    phi = [0] + [rng.randrange(8) for _ in range(7)]
    assert is_cocycle(coboundary(phi, G, 8), G)
    for n in (2, 5, 8):
        assert is_cocycle(fourier_cocycle(n), group_from_factors([n]))
    R = CocycleMatrix(tuple(tuple(rng.randrange(8) for _ in range(8)) for _ in range(8)), 8)
    assert not is_cocycle(R, group_from_factors([8]))


def test_coboundary_by_hand():
    G = group_from_factors([2])
    assert coboundary([0, 0], G, 3).psi == ((0, 0), (0, 0))
    assert coboundary([0, 1], G, 2).psi == ((0, 0), (0, 0))
    assert coboundary([0, 1], G, 4).psi == ((0, 0), (0, 2))


def test_cocycle_witness_brute_force():
    rng = random.Random(9)
    G = group_from_factors([2, 2])
    for _ in range(50):
        psi = CocycleMatrix(tuple(tuple(rng.randrange(2) for _ in range(4)) for _ in range(4)), 2)
        brute = all(
            (psi.psi[g][h] + psi.psi[G.mul(g, h)][c] - psi.psi[g][G.mul(h, c)] - psi.psi[h][c]) % 2 == 0
            for g in range(4) for h in range(4) for c in range(4))
        assert is_cocycle(psi, G) == brute


def test_invariant_matrices():
    G = group_from_factors([5])
    with pytest.raises(NotInvariantError) as e:
        cocycle_from_invariant(fourier(5), G)
    g, h, c = e.value.witness
    rng = random.Random(4)
    f = [rng.randrange(5) for _ in range(5)]
    A = LogMatrix(tuple(tuple(f[(h - g) % 5] for h in range(5)) for g in range(5)), 5)
    assert is_group_invariant(A, G)
    assert is_cocycle(cocycle_from_invariant(A, G), G)
    Z = LogMatrix(((0,) * 4,) * 4, 4)
    assert cocycle_from_invariant(Z, group_from_factors([4])).psi == ((0,) * 4,) * 4


def test_orthogonal_cocycles():
    assert is_orthogonal_cocycle(fourier_cocycle(6), group_from_factors([6]))
    assert not is_orthogonal_cocycle(CocycleMatrix(((0,) * 3,) * 3, 3), group_from_factors([3]))
    assert is_orthogonal_cocycle(CocycleMatrix.from_matrix(BH84), group_from_factors([8]))


def test_orthogonal_iff_butson_on_suite():
    for name, M, G in cocyclic_suite():
        psi = CocycleMatrix.from_matrix(M)
        assert is_orthogonal_cocycle(psi, G) == is_butson(M), name
        assert cocycle_witness(psi, G) is None, name


def test_extension_examples():
    G = group_from_factors([3])
    E = extension_group(CocycleMatrix(((0,) * 3,) * 3, 2), G)
    assert E.order == 6 and E.is_abelian()
    E = extension_group(fourier_cocycle(2), group_from_factors([2]))
    assert E.order == 4
    orders = []
    for a in range(4):
        x, o = a, 1
        while x != E.identity:
            x, o = E.mul(x, a), o + 1
        orders.append(o)
    assert max(orders) == 4
    psi = fourier_cocycle(4)
    E = extension_group(psi, group_from_factors([4]))
    assert E.order == 16 and transversal_cocycle(E, group_from_factors([4]), 4) == psi
    assert len(center(E)) >= 4


@pytest.mark.parametrize("factors", abelian_groups(16))
def test_cocycle_algebra_on_all_small_groups(factors):
    rng = random.Random(hash(factors) & 0xFFFF)
    G = group_from_factors(factors)
    n = G.order
    for k in (2, 4, 6):
        phi = [rng.randrange(k) for _ in range(n)]
        psi = coboundary(phi, G, k)
        assert is_cocycle(psi, G)
        E = extension_group(psi, G)
        assert E.order == k * n
        assert transversal_cocycle(E, G, k) == psi
        f = [rng.randrange(k) for _ in range(n)]
        A = LogMatrix(tuple(tuple(f[G.mul(h, G.inv(g))] for h in range(n)) for g in range(n)), k)
        assert is_cocycle(cocycle_from_invariant(A, G), G)
