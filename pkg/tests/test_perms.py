import pytest
from hypothesis import given, strategies as st

from pgt.errors import DegreeMismatch, InvalidParameter
from pgt.perms import (
    Permutation,
    commutator_elem,
    compose,
    conjugate,
    cycle_string,
    identity,
    inverse,
    parse_images_line,
)


def perms(degree):
    return st.permutations(range(degree)).map(Permutation)


def test_identity_cases():
    assert identity(1).images == (0,)
    assert identity(3).images == (0, 1, 2)
    with pytest.raises(InvalidParameter):
        identity(0)


@given(perms(4))
def test_identity_law(p):
    assert compose(identity(4), p) == p
    assert compose(p, identity(4)) == p


@given(perms(6), perms(6), perms(6))
def test_associativity(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms(6))
def test_inverse_involution(p):
    assert inverse(inverse(p)) == p
    assert compose(p, inverse(p)) == identity(6)
    assert compose(inverse(p), p) == identity(6)


@given(perms(5))
def test_self_commutator(p):
    assert commutator_elem(p, p).is_identity()


@given(perms(5))
def test_conjugate_by_identity(p):
    assert conjugate(p, identity(5)) == p


@given(perms(5), perms(5))
def test_commutator_definition(x, y):
    lhs = commutator_elem(x, y)
    rhs = compose(compose(compose(inverse(x), inverse(y)), x), y)
    assert lhs == rhs


@given(perms(5), perms(5))
def test_conjugate_definition(g, x):
    assert conjugate(g, x) == compose(compose(inverse(x), g), x)


def test_sym3_commutator_is_three_cycle():
    a = Permutation.from_cycles([(0, 1)], 3)
    b = Permutation.from_cycles([(1, 2)], 3)
    c = commutator_elem(a, b)
    assert c.order() == 3


def test_compose_is_left_to_right():
    p = Permutation.from_cycles([(0, 1)], 3)
    q = Permutation.from_cycles([(1, 2)], 3)
    assert (p * q)(0) == q(p(0)) == 2


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))
    with pytest.raises(DegreeMismatch):
        conjugate(identity(3), identity(4))


def test_validation():
    with pytest.raises(InvalidParameter):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidParameter):
        Permutation([])


@given(perms(7))
def test_order_matches_powering(p):
    n = p.order()
    assert (p**n).is_identity()
    for k in range(1, n):
        if n % k == 0 and k < n:
            assert not (p**k).is_identity() or k == n


def test_large_degree_uses_tuples():
    p = identity(300)
    assert p.degree == 300
    q = Permutation.from_cycles([(0, 299)], 300)
    assert (q * q).is_identity()
    assert q(0) == 299


def test_cycle_string_round_trip():
    p = Permutation.from_cycles([(0, 1, 2), (3, 4)], 6)
    assert cycle_string(p.raw) == "(0 1 2)(3 4)"
    assert cycle_string(identity(4).raw) == "()"


def test_parse_images_line():
    raw = parse_images_line("1 2 0")
    assert raw == bytes([1, 2, 0])
    assert parse_images_line("1, 2, 0") == raw
    with pytest.raises(InvalidParameter):
        parse_images_line("0 0 1")
