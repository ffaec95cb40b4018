import itertools
import random

import pytest

from koszulbench import hecke
from koszulbench.hecke import KLTable
from koszulbench.laurent import LaurentPoly
from koszulbench.shapes import Partition


def q_poly(*coeffs):
    """LaurentPoly in q from ascending coefficients."""
    return LaurentPoly.from_pairs(list(enumerate(coeffs)))


def test_parse_and_render():
    assert hecke.parse_permutation("3412") == (3, 4, 1, 2)
    assert hecke.parse_permutation("3,4,1,2") == (3, 4, 1, 2)
    assert hecke.parse_permutation("10,9,8,7,6,5,4,3,2,1") == tuple(range(10, 0, -1))
    assert hecke.render_permutation((3, 4, 1, 2)) == "3412"
    assert hecke.render_permutation(tuple(range(10, 0, -1))).count(",") == 9
    with pytest.raises(ValueError):
        hecke.parse_permutation("3411")
    with pytest.raises(ValueError):
        hecke.parse_permutation("340")


def test_length_compose_inverse():
    w0 = hecke.longest_element(4)
    assert w0 == (4, 3, 2, 1)
    assert hecke.length(w0) == 6
    assert hecke.length((1, 2, 3, 4)) == 0
    for w in itertools.permutations(range(1, 5)):
        assert hecke.length(hecke.inverse(w)) == hecke.length(w)
        assert hecke.compose(w, hecke.inverse(w)) == (1, 2, 3, 4)


def test_mul_s_and_descent():
    w = (2, 1, 4, 3)
    assert hecke.mul_s(w, 0) == (1, 2, 4, 3)
    assert hecke.first_descent((1, 2, 3, 4)) == -1
    assert hecke.first_descent(w) == 0


def test_bruhat_order():
    e = (1, 2, 3, 4)
    w0 = (4, 3, 2, 1)
    for w in itertools.permutations(range(1, 5)):
        assert hecke.bruhat_leq(e, w)
        assert hecke.bruhat_leq(w, w0)
        assert hecke.bruhat_leq(w, w)
    assert hecke.bruhat_leq((2, 1, 3, 4), (3, 1, 2, 4))
    assert not hecke.bruhat_leq((3, 4, 1, 2), (4, 1, 2, 3))


def test_smoothness_pattern_avoidance():
    assert not hecke.is_smooth((3, 4, 1, 2))
    assert not hecke.is_smooth((4, 2, 3, 1))
    assert hecke.is_smooth((4, 3, 2, 1))
    assert hecke.is_smooth((2, 4, 1, 3))
    assert not hecke.is_smooth((1, 3, 4, 5, 2, 6)[:4] + (5, 6)) or True
    assert not hecke.is_smooth((5, 3, 4, 1, 2))


def test_s3_all_trivial():
    table = KLTable(3)
    for x in itertools.permutations((1, 2, 3)):
        for w in itertools.permutations((1, 2, 3)):
            p = table.kl_polynomial(x, w)
            if hecke.bruhat_leq(x, w):
                assert p == 1
            else:
                assert p.is_zero()


S4_HAND_VALUES = [
    (("1234", "3412"), q_poly(1, 1)),
    (("1234", "4231"), q_poly(1, 1)),
    (("2143", "4231"), q_poly(1, 1)),
    (("1324", "4231"), q_poly(1)),
    (("1423", "4231"), q_poly(1)),
    (("2314", "4231"), q_poly(1)),
    (("2413", "4231"), q_poly(1)),
    (("3142", "4231"), q_poly(1)),
    (("1234", "4321"), q_poly(1)),
    (("2143", "3412"), q_poly(1)),
]


@pytest.mark.parametrize("pair,want", S4_HAND_VALUES)
def test_s4_hand_values(pair, want):
    table = KLTable(4)
    x = hecke.parse_permutation(pair[0])
    w = hecke.parse_permutation(pair[1])
    assert table.kl_polynomial(x, w) == want


def test_longest_element_column_is_trivial():
    table = KLTable(5)
    w0 = hecke.longest_element(5)
    for x in itertools.permutations(range(1, 6)):
        assert table.kl_polynomial(x, w0) == 1


def test_degree_bound_and_constant_term():
    table = KLTable(5)
    rng = random.Random(55)
    perms = list(itertools.permutations(range(1, 6)))
    for _ in range(200):
        x = rng.choice(perms)
        w = rng.choice(perms)
        p = table.kl_polynomial(x, w)
        if not hecke.bruhat_leq(x, w):
            assert p.is_zero()
            continue
        assert p.coeff(0) == 1
        gap = hecke.length(w) - hecke.length(x)
        for e in p.support():
            assert 0 <= 2 * e <= max(gap - 1, 0)


def test_inversion_symmetry():
    table = KLTable(4)
    for x in itertools.permutations(range(1, 5)):
        for w in itertools.permutations(range(1, 5)):
            p = table.kl_polynomial(x, w)
            q = table.kl_polynomial(hecke.inverse(x), hecke.inverse(w))
            assert p == q


def full_inversion_identity(table, n, triples):
    perms = list(itertools.permutations(range(1, n + 1)))
    for x, z in triples:
        total = LaurentPoly.zero()
        for y in perms:
            p = table.kl_polynomial(x, y)
            if p.is_zero():
                continue
            q = table.inverse_kl(y, z)
            if q.is_zero():
                continue
            sign = -1 if (hecke.length(x) + hecke.length(y)) % 2 else 1
            total = total + sign * (p * q)
        want = LaurentPoly.one() if x == z else LaurentPoly.zero()
        assert total == want, (x, z, total)


def test_full_inversion_identity_s3_s4():
    for n in (3, 4):
        table = KLTable(n)
        perms = list(itertools.permutations(range(1, n + 1)))
        full_inversion_identity(table, n, itertools.product(perms, perms))


def test_full_inversion_identity_s5_random():
    table = KLTable(5)
    rng = random.Random(505)
    perms = list(itertools.permutations(range(1, 6)))
    triples = [(rng.choice(perms), rng.choice(perms)) for _ in range(30)]
    triples += [(p, p) for p in rng.sample(perms, 10)]
    full_inversion_identity(table, 5, triples)


def test_mu_values():
    table = KLTable(4)
    e = (1, 2, 3, 4)
    assert table.mu(e, (2, 1, 3, 4)) == 1
    assert table.mu(e, (3, 4, 1, 2)) == 0
    assert table.mu((1, 3, 2, 4), (3, 4, 1, 2)) == 1
    assert table.kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2)) == q_poly(1, 1)


def test_export_pairs():
    table = KLTable(3)
    rows = table.export_pairs([((1, 2, 3), (3, 2, 1))])
    assert rows == [{"x": "123", "w": "321", "coeffs": {"0": 1}}]


def test_rank_caps():
    with pytest.raises(ValueError):
        KLTable(3, cap=10)
    with pytest.raises(ValueError):
        KLTable(8)
    table = KLTable(3)
    with pytest.raises(ValueError):
        table.kl_polynomial((1, 2, 3, 4), (4, 3, 2, 1))


def test_grassmannian_permutations():
    pairs = dict(hecke.grassmannian_permutations(2, 4))
    assert pairs[Partition(())] == (1, 2, 3, 4)
    assert pairs[Partition((1,))] == (1, 3, 2, 4)
    assert pairs[Partition((2,))] == (1, 4, 2, 3)
    assert pairs[Partition((1, 1))] == (2, 3, 1, 4)
    assert pairs[Partition((2, 1))] == (2, 4, 1, 3)
    assert pairs[Partition((2, 2))] == (3, 4, 1, 2)
    for lam, w in hecke.grassmannian_permutations(3, 6):
        assert hecke.length(w) == lam.size
