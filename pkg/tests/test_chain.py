import random

from pgt.chain import StabilizerChain
from pgt.constructors import alternating, symmetric
from pgt.groups import closure_elements
from pgt.perms import compose_raw, invert_raw, raw_from_cycles, raw_identity


def brute_order(degree, gens):
    return len(closure_elements(degree, gens))


def test_trivial_group():
    chain = StabilizerChain(4)
    assert chain.order() == 1
    assert chain.contains(raw_identity(4))
    assert not chain.contains(raw_from_cycles([(0, 1)], 4))


def test_sym8_order():
    assert symmetric(8).chain.order() == 40320
    # cross-check by brute enumeration
    gens = symmetric(8).generator_raws
    assert brute_order(8, gens) == 40320


def test_alt5_order_brute():
    gens = alternating(5).generator_raws
    assert alternating(5).chain.order() == 60 == brute_order(5, gens)


def test_orbit_product_equals_order():
    group = symmetric(6)
    chain = group.chain
    product = 1
    for length in chain.basic_orbit_lengths():
        product *= length
    assert product == 720


def test_strong_generators_sift_to_identity():
    chain = symmetric(6).chain
    ident = raw_identity(6)
    for g in chain.strong_generators():
        residue, _ = chain.sift(g)
        assert residue == ident


def test_membership_exact():
    group = alternating(6)
    chain = group.chain
    odd = raw_from_cycles([(0, 1)], 6)
    assert not chain.contains(odd)
    even = raw_from_cycles([(0, 1), (2, 3)], 6)
    assert chain.contains(even)


def test_elements_enumeration_matches_brute_closure():
    for gens, degree in [
        (symmetric(5).generator_raws, 5),
        (alternating(5).generator_raws, 5),
        ([raw_from_cycles([(0, 1, 2, 3)], 6), raw_from_cycles([(4, 5)], 6)], 6),
    ]:
        chain = StabilizerChain(degree, gens)
        elems = chain.elements()
        assert len(elems) == chain.order()
        assert frozenset(elems) == closure_elements(degree, gens)


def test_random_subgroups_against_brute_force():
    rng = random.Random(31415)
    for _ in range(12):
        degree = rng.randrange(3, 8)
        gens = []
        for _ in range(rng.randrange(1, 3)):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(bytes(images))
        chain = StabilizerChain(degree, gens)
        assert chain.order() == brute_order(degree, gens)


def test_incremental_extension():
    chain = StabilizerChain(5)
    grew = chain.extend(raw_from_cycles([(0, 1, 2, 3, 4)], 5))
    assert grew and chain.order() == 5
    assert not chain.extend(raw_from_cycles([(0, 1, 2, 3, 4)], 5))
    chain.extend(raw_from_cycles([(0, 1)], 5))
    assert chain.order() == 120


def test_intransitive_group():
    gens = [raw_from_cycles([(0, 1, 2)], 7), raw_from_cycles([(4, 5)], 7)]
    chain = StabilizerChain(7, gens)
    assert chain.order() == 6
    assert chain.contains(compose_raw(gens[0], gens[1]))
    assert chain.contains(invert_raw(gens[0]))
