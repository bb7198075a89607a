"""Cross-cutting invariants checked directly against independent oracles.

The corpus-wide pseudocentre invariants run in the harness properties suite
(exercised by the acceptance tests); this module checks the engine-level
invariants with routes that do not share code with what they verify.
"""

import random

from pgt import harness
from pgt.groups import (
    center,
    closure_elements,
    normal_closure,
    centralizer,
)
from pgt.perms import Permutation, conjugate_raw
from pgt.pseudo import pseudocentre


def _small_corpus(limit):
    for spec, group in harness.corpus():
        if group.order() <= limit:
            yield spec, group


def test_chain_order_matches_independent_closure():
    # the chain never enumerates to count; mulclose does, independently
    for spec, group in _small_corpus(2000):
        gens = list(group.generator_raws)
        assert len(closure_elements(group.degree, gens)) == group.order(), spec


def test_class_reps_partition_elements():
    for spec, group in _small_corpus(500):
        reps, sizes = group.class_partition()
        assert sum(sizes) == group.order(), spec
        covered = set()
        for rep in reps:
            orbit = {rep}
            frontier = [rep]
            while frontier:
                e = frontier.pop()
                for x in group.generator_raws:
                    c = conjugate_raw(e, x)
                    if c not in orbit:
                        orbit.add(c)
                        frontier.append(c)
            assert not (orbit & covered), spec
            covered |= orbit
        assert len(covered) == group.order(), spec


def test_closed_centralizers_constant_on_classes_sampled():
    rng = random.Random(1234)
    samples = [(s, g) for s, g in _small_corpus(200) if g.order() > 1]
    rng.shuffle(samples)
    for spec, group in samples[:8]:
        elems = sorted(group.elements().raws)
        for _ in range(3):
            g = rng.choice(elems)
            base = normal_closure(group, centralizer(group, Permutation._wrap(g)))
            for x in group.generator_raws:
                conj = conjugate_raw(g, x)
                other = normal_closure(group, centralizer(group, Permutation._wrap(conj)))
                assert base == other, spec


def test_quotient_order_identity():
    from pgt.groups import quotient

    for spec, group in _small_corpus(300):
        z = center(group)
        q, _, preimage = quotient(group, z)
        assert group.order() == z.order * q.order(), spec
        assert preimage(q.elements()).order == group.order(), spec


def test_pseudocentre_subgroup_lagrange():
    for spec, group in _small_corpus(400):
        p = pseudocentre(group)
        assert group.order() % p.order == 0, spec


def test_centre_contained_in_pseudocentre():
    for spec, group in _small_corpus(400):
        assert center(group).raws <= pseudocentre(group).raws, spec
