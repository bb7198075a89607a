import math
import random

import pytest

from pgt import constructors as make
from pgt.errors import InvalidParameter
from pgt.groups import center, derived_subgroup, elements, is_abelian, is_cyclic, is_normal
from pgt.numtheory import pisano_period
from pgt.perms import compose_raw, order_raw


def test_symmetric_orders():
    for n in range(1, 8):
        assert make.symmetric(n).order() == math.factorial(n)


def test_alternating_orders():
    assert make.alternating(3).order() == 3
    assert make.alternating(4).order() == 12
    for n in range(3, 8):
        assert make.alternating(n).order() == math.factorial(n) // 2


def test_cyclic_and_elementary():
    assert make.cyclic(1).order() == 1
    assert make.cyclic(12).order() == 12
    assert is_cyclic(make.cyclic(12))
    e = make.elementary_abelian(3, 2)
    assert e.order() == 9 and is_abelian(e)
    assert e.degree == 6


def test_dihedral():
    assert make.dihedral(16).order() == 16
    assert center(make.dihedral(16)).order == 2
    assert make.dihedral(4).order() == 4
    assert make.dihedral(2).order() == 2
    with pytest.raises(InvalidParameter):
        make.dihedral(7)


def test_quaternion():
    q8 = make.quaternion(8)
    assert q8.order() == 8 and q8.degree == 8
    involutions = [x for x in elements(q8).raws if order_raw(x) == 2]
    assert len(involutions) == 1  # the unique involution
    q16 = make.quaternion(16)
    assert q16.order() == 16
    assert len([x for x in elements(q16).raws if order_raw(x) == 2]) == 1
    with pytest.raises(InvalidParameter):
        make.quaternion(12)
    with pytest.raises(InvalidParameter):
        make.quaternion(4)


def test_direct_product_order_and_embeddings():
    a, b = make.symmetric(3), make.cyclic(5)
    g = make.direct_product(a, b)
    assert g.order() == 30
    left, right = make.direct_embeddings(a, b)
    for x in a.generator_raws:
        for y in b.generator_raws:
            assert compose_raw(left(x), right(y)) == compose_raw(right(y), left(x))


# -- wreath products ----------------------------------------------------------------


def test_wreath_orders():
    w = make.wreath(make.cyclic(2), make.alternating(5))
    assert w.group.order() == 2**5 * 60 == 1920
    w = make.wreath(make.cyclic(3), make.symmetric(3))
    assert w.group.order() == 3**3 * 6 == 162
    w = make.wreath(make.symmetric(3), make.cyclic(1))
    assert w.group.order() == 6  # H wr trivial = H


def test_wreath_base_group():
    w = make.wreath(make.cyclic(3), make.symmetric(3))
    assert w.base.order() == 27
    assert is_normal(w.group, w.base.elements())
    assert w.top.order() == 6


def test_wreath_base_commutator_quotient():
    # |B / [K,B]| = |H / H'| for transitive K
    cases = [
        (make.cyclic(2), make.alternating(4)),
        (make.cyclic(3), make.symmetric(3)),
        (make.cyclic(5), make.cyclic(2)),
        (make.symmetric(3), make.cyclic(2)),
    ]
    for h, k in cases:
        w = make.wreath(h, k)
        kb = w.top_base_commutator()
        h_ab = h.order() // derived_subgroup(h).order()
        assert w.base.order() // kb.order == h_ab


def test_wreath_intransitive_top_warns():
    intransitive = make.PermGroup(3, [make.raw_from_cycles([(0, 1)], 3)])
    with pytest.warns(UserWarning):
        w = make.wreath(make.cyclic(2), intransitive)
    assert w.group.order() == 2**3 * 2


def test_iterated_wreath():
    assert make.iterated_wreath(2, 1).order() == 2
    g2 = make.iterated_wreath(2, 2)
    assert g2.order() == 8
    # D(8) fingerprint: order 8, centre 2, derived 2, not abelian
    d8 = make.dihedral(8)
    assert (center(g2).order, derived_subgroup(g2).order()) == (
        center(d8).order,
        derived_subgroup(d8).order(),
    )
    assert make.iterated_wreath(2, 3).order() == 2**8 * 8 == 2048
    assert make.iterated_wreath(3, 2).order() == 3**3 * 3 == 81


def test_regular_representation():
    g = make.symmetric(3)
    reg = make.regular_representation(g)
    assert reg.degree == 6 and reg.order() == 6


# -- matrix groups ---------------------------------------------------------------------


def test_linear_group_orders():
    assert make.gl(2, 3).order() == 48 == (9 - 1) * (9 - 3)
    assert make.gl(2, 5).order() == make.gl_order(2, 5) == 480
    assert make.sl(2, 2).order() == 6 == make.gl(2, 2).order()
    assert make.sl(2, 3).order() == 24
    assert make.gl(3, 2).order() == 168
    assert make.ut(3, 3).order() == 27
    assert make.ut(4, 2).order() == 64
    for n, p in [(2, 2), (2, 3), (3, 2), (2, 5)]:
        assert make.gl(n, p).order() == make.gl_order(n, p)
        assert make.sl(n, p).order() == make.gl_order(n, p) // (p - 1)
    for n, p in [(2, 3), (3, 3), (4, 2), (5, 2)]:
        assert make.ut(n, p).order() == p ** (n * (n - 1) // 2)


def test_tr2_order():
    assert make.tr2(3).order() == 12 == 2 * 2 * 3
    assert make.tr2(5).order() == 80


def test_prime_field_required():
    with pytest.raises(InvalidParameter):
        make.gl(2, 4)
    with pytest.raises(InvalidParameter):
        make.ut(3, 6)


def test_matrix_perm_homomorphism():
    rng = random.Random(777)
    p = 5
    mats = make.gl_generator_matrices(2, p)
    for _ in range(25):
        a = rng.choice(mats)
        b = rng.choice(mats)
        product = make.mat_mul(a, b, p)
        assert make.linear_perm(product, p) == compose_raw(
            make.linear_perm(a, p), make.linear_perm(b, p)
        )


def test_affine_orders():
    assert make.affine_gl(2, 2).group.order() == 24
    assert make.affine_sl(2, 3).group.order() == 216 == 24 * 9
    assert make.affine_gl(1, 5).group.order() == 20  # AGL(1,p): p(p-1)
    assert make.affine_gl(1, 7).group.order() == 42
    aff = make.affine_gl(2, 3)
    assert aff.translations.order() == 9
    assert aff.linear.order() == 48
    assert is_normal(aff.group, aff.translations.elements())


def test_affine_gl22_is_sym4_fingerprint():
    aff = make.affine_gl(2, 2)
    s4 = make.symmetric(4)
    assert aff.group.order() == 24
    assert center(aff.group).order == 1
    assert derived_subgroup(aff.group).order() == 12 == derived_subgroup(s4).order()


# -- bespoke groups ------------------------------------------------------------------------


def test_sl25_on_f11sq():
    aff = make.sl25_on_f11sq()
    assert aff.group.order() == 14520 == 120 * 121
    assert aff.linear.order() == 120
    assert aff.translations.order() == 121
    from pgt.groups import is_perfect

    assert is_perfect(aff.group)


def test_fib_quotient():
    f2 = make.fib_quotient(2)
    assert f2.group.order() == 12
    assert f2.matrix_order == 3 == pisano_period(2)
    assert f2.irreducible
    # Alt(4) fingerprint
    a4 = make.alternating(4)
    assert center(f2.group).order == center(a4).order == 1
    assert derived_subgroup(f2.group).order() == derived_subgroup(a4).order() == 4

    f3 = make.fib_quotient(3)
    assert f3.group.order() == 72
    assert f3.matrix_order == 8 == pisano_period(3)
    assert f3.irreducible

    assert not make.fib_quotient(5).irreducible


def test_fib_matrix_identity():
    # X^2 = X + I mod p, the recurrence as a matrix identity
    for p in (2, 3, 5, 7):
        x = tuple(tuple(v % p for v in row) for row in ((1, 1), (1, 0)))
        x2 = make.mat_mul(x, x, p)
        expected = tuple(
            tuple((x[i][j] + (1 if i == j else 0)) % p for j in range(2)) for i in range(2)
        )
        assert x2 == expected


def test_aut_sym6():
    aut = make.aut_sym6()
    assert aut.group.order() == 1440
    assert aut.inner.order() == 720
    assert aut.inner_alt.order() == 360
    outer = aut.outer_perm
    assert (outer * outer).is_identity()
    assert outer.raw not in aut.inner.elements().raws
    # the 5-cycle fixed by the outer map
    label = {raw: i for i, raw in enumerate(aut.labels)}
    five_cycle = bytes([1, 2, 3, 4, 0, 5])  # (0 1 2 3 4)
    assert outer(label[five_cycle]) == label[five_cycle]


def test_aut_sym6_inner_is_homomorphic():
    from pgt.perms import conjugate_raw

    aut = make.aut_sym6()
    label = {raw: i for i, raw in enumerate(aut.labels)}
    rng = random.Random(99)
    t = bytes([1, 0, 2, 3, 4, 5])  # the transposition generator
    conj = aut.inner.generator_raws[0]
    for _ in range(50):
        g = rng.choice(aut.labels)
        # the conjugation permutation sends label(g) to label(t^-1 g t)
        assert conj[label[g]] == label[conjugate_raw(g, t)]
