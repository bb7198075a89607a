"""Permutation groups, explicit subgroup sets, and the exact operations on them.

Two representations coexist:

* ``PermGroup`` -- generators plus a lazily built stabilizer chain.  Order
  and membership are chain queries; the full element set is enumerated (and
  cached) only on demand, guarded by the enumeration cap.
* ``SubgroupSet`` -- an explicit, canonically ordered set of permutations.
  Every subgroup an operation returns (centralizers, normal closures,
  intersections, series terms) is one of these.

Normal closures are built on chains so that a closure which blows up to the
whole parent group is detected by its order alone and never enumerated.
"""

from __future__ import annotations

from .chain import StabilizerChain
from .config import enumeration_cap
from .errors import CapacityExceeded, DegreeMismatch, InvalidParameter, NotAMember, NotNormal
from .perms import (
    Permutation,
    commutator_raw,
    compose_raw,
    conjugate_raw,
    invert_raw,
    order_raw,
    raw_from_images,
    raw_identity,
)


def _raw_of(p):
    return p.raw if isinstance(p, Permutation) else p


class SubgroupSet:
    """An explicit set of permutations closed under product and inverse.

    Elements are kept as raw image arrays in a frozenset; the canonically
    (lexicographically) sorted tuple is materialized lazily.
    """

    __slots__ = ("degree", "_raws", "_sorted")

    def __init__(self, degree, raws):
        self.degree = degree
        self._raws = raws if isinstance(raws, frozenset) else frozenset(raws)
        self._sorted = None

    @classmethod
    def from_permutations(cls, perms):
        perms = list(perms)
        if not perms:
            raise InvalidParameter("empty subgroup set")
        degree = perms[0].degree
        return cls(degree, frozenset(p.raw for p in perms))

    @classmethod
    def trivial(cls, degree):
        return cls(degree, frozenset((raw_identity(degree),)))

    @property
    def raws(self):
        return self._raws

    @property
    def sorted_raws(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self._raws))
        return self._sorted

    @property
    def order(self):
        return len(self._raws)

    def __len__(self):
        return len(self._raws)

    def __contains__(self, p):
        return _raw_of(p) in self._raws

    def __iter__(self):
        return (Permutation._wrap(r) for r in self.sorted_raws)

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupSet)
            and self.degree == other.degree
            and self._raws == other._raws
        )

    def __hash__(self):
        return hash((self.degree, self._raws))

    def __le__(self, other):
        return self._raws <= other._raws

    def __repr__(self):
        return f"SubgroupSet(degree={self.degree}, order={len(self._raws)})"

    def as_group(self):
        """This set as a PermGroup (small generating set, elements cached)."""
        gens, chain = small_generating_raws(self.degree, self.sorted_raws)
        group = PermGroup(self.degree, gens)
        group._chain = chain
        group._elements = self
        return group


class PermGroup:
    """A finite permutation group given by generators."""

    __slots__ = ("degree", "_gens", "_chain", "_elements", "_classes", "_cache")

    def __init__(self, degree, gen_raws=()):
        if degree < 1:
            raise InvalidParameter("degree must be >= 1")
        ident = raw_identity(degree)
        gens = []
        for g in gen_raws:
            g = _raw_of(g)
            if len(g) != degree:
                raise DegreeMismatch(f"generator degree {len(g)} != {degree}")
            if g != ident and g not in gens:
                gens.append(g)
        self.degree = degree
        self._gens = tuple(gens)
        self._chain = None
        self._elements = None
        self._classes = None
        self._cache = {}

    @classmethod
    def from_generators(cls, perms, degree=None):
        perms = list(perms)
        if degree is None:
            if not perms:
                raise InvalidParameter("degree needed for an empty generator list")
            degree = perms[0].degree if isinstance(perms[0], Permutation) else len(perms[0])
        return cls(degree, [_raw_of(p) for p in perms])

    @classmethod
    def trivial(cls, degree=1):
        return cls(degree, ())

    @property
    def generator_raws(self):
        return self._gens

    @property
    def generators(self):
        return tuple(Permutation._wrap(g) for g in self._gens)

    @property
    def identity_raw(self):
        return raw_identity(self.degree)

    @property
    def chain(self):
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self._gens)
        return self._chain

    def order(self):
        return self.chain.order()

    def contains(self, p):
        raw = _raw_of(p)
        return len(raw) == self.degree and self.chain.contains(raw)

    def __contains__(self, p):
        return self.contains(p)

    def subgroup(self, gen_raws):
        return PermGroup(self.degree, [_raw_of(g) for g in gen_raws])

    def elements(self, cap=None):
        """The full element set as a SubgroupSet, cached."""
        if self._elements is None:
            limit = enumeration_cap(cap)
            n = self.order()
            if n > limit:
                raise CapacityExceeded(
                    f"group of order {n} exceeds enumeration cap {limit}",
                    required=n,
                    cap=limit,
                )
            self._elements = SubgroupSet(self.degree, frozenset(self.chain.elements()))
        return self._elements

    def class_partition(self, cap=None):
        """Conjugacy class minima and sizes: (reps, sizes), reps sorted.

        Needs the element set plus an orbit map of the same size, so the
        effective requirement is 2*|G| <= cap.
        """
        if self._classes is None:
            limit = enumeration_cap(cap)
            n = self.order()
            if 2 * n > limit:
                raise CapacityExceeded(
                    f"class partition of a group of order {n} stores ~{2 * n} "
                    f"permutations, over cap {limit}",
                    required=2 * n,
                    cap=limit,
                )
            elems = self.elements(cap)
            gens = self._gens
            gen_pairs = [(invert_raw(g), g) for g in gens]
            visited = set()
            reps = []
            sizes = []
            for x in elems.sorted_raws:
                if x in visited:
                    continue
                orbit = {x}
                queue = [x]
                while queue:
                    e = queue.pop()
                    for g_inv, g in gen_pairs:
                        c = compose_raw(compose_raw(g_inv, e), g)
                        if c not in orbit:
                            orbit.add(c)
                            queue.append(c)
                visited |= orbit
                reps.append(x)
                sizes.append(len(orbit))
            self._classes = (reps, sizes)
        return self._classes

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={len(self._gens)})"


# ---------------------------------------------------------------------------
# spec operations on groups


def build_chain(group):
    return group.chain


def order(group):
    return group.order()


def contains(group, p):
    return group.contains(p)


def elements(group, cap=None):
    return group.elements(cap)


def conjugacy_class_reps(group, cap=None):
    reps, _ = group.class_partition(cap)
    return [Permutation._wrap(r) for r in reps]


def commutes_raw(x, g):
    """xg == gx; early-exit elementwise for tuple-backed degrees."""
    if type(x) is bytes:
        return compose_raw(x, g) == compose_raw(g, x)
    return all(g[xi] == x[gi] for xi, gi in zip(x, g))


def centralizer(group, g, cap=None):
    """{x in G : xg = gx}, by brute-force filtering of the element set."""
    raw = _raw_of(g)
    if not group.contains(raw):
        raise NotAMember(f"{g!r} is not in the group")
    elems = group.elements(cap)
    return SubgroupSet(group.degree, frozenset(x for x in elems.raws if commutes_raw(x, raw)))


def center(group, cap=None):
    """Elements commuting with every generator."""
    elems = group.elements(cap)
    gens = group.generator_raws
    raws = frozenset(x for x in elems.raws if all(commutes_raw(x, g) for g in gens))
    return SubgroupSet(group.degree, raws)


def small_generating_raws(degree, raws_in_order):
    """A short generating list for a set of raws, plus its chain."""
    chain = StabilizerChain(degree)
    gens = []
    for x in raws_in_order:
        if not chain.contains(x):
            chain.extend(x)
            gens.append(x)
    return gens, chain


def _seed_raws(source):
    if isinstance(source, SubgroupSet):
        return list(source.sorted_raws)
    if isinstance(source, PermGroup):
        return list(source.generator_raws)
    return [_raw_of(p) for p in source]


def normal_closure_group(group, seed, seed_chain=None, seed_gens=None):
    """Chain-backed smallest normal subgroup of ``group`` containing ``seed``.

    Conjugates of the accumulated generators by the group generators are
    sifted in until stable; closure under generator conjugation plus
    finiteness gives full invariance.  Detecting closure == group costs one
    order comparison, no enumeration.
    """
    degree = group.degree
    if seed_gens is None:
        seed_raws = _seed_raws(seed)
        seed_gens, chain = small_generating_raws(degree, seed_raws)
    else:
        chain = seed_chain if seed_chain is not None else StabilizerChain(degree, seed_gens)
        seed_gens = list(seed_gens)
    full_order = group.order()
    queue = list(seed_gens)
    closure_gens = list(seed_gens)
    top_gens = group.generator_raws
    while queue and chain.order() < full_order:
        h = queue.pop()
        for x in top_gens:
            c = conjugate_raw(h, x)
            if chain.extend(c):
                queue.append(c)
                closure_gens.append(c)
    result = PermGroup(degree, closure_gens)
    result._chain = chain
    return result


def normal_closure(group, seed, cap=None):
    """Normal closure of ``seed`` in ``group`` as an explicit SubgroupSet."""
    closed = normal_closure_group(group, seed)
    n = closed.order()
    if n == group.order() and group._elements is not None:
        return group._elements
    return closed.elements(cap)


def closure_elements(degree, gen_raws, cap=None, parent_order=None):
    """Product/inverse closure of a generating set (plain BFS).

    With ``parent_order`` given, bails out to None once the closure must be
    the whole parent by Lagrange (size exceeding half the parent order).
    """
    limit = enumeration_cap(cap)
    ident = raw_identity(degree)
    gens = [g for g in gen_raws if g != ident]
    elems = {ident}
    frontier = []
    for g in gens:
        if g not in elems:
            elems.add(g)
            frontier.append(g)
    half = parent_order // 2 if parent_order is not None else None
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose_raw(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
                    if half is not None and len(elems) > half:
                        return None
                    if len(elems) > limit:
                        raise CapacityExceeded(
                            f"closure exceeded cap {limit}", required=len(elems), cap=limit
                        )
        frontier = new
    return frozenset(elems)


def generated_subgroup(degree, gens, cap=None):
    """Subgroup generated by permutations/raws, as a SubgroupSet."""
    raws = [_raw_of(g) for g in gens]
    return SubgroupSet(degree, closure_elements(degree, raws, cap))


def subgroup_intersection(a, b):
    if a.degree != b.degree:
        raise DegreeMismatch(f"degree {a.degree} vs {b.degree}")
    return SubgroupSet(a.degree, a.raws & b.raws)


def _gen_raws_of(x):
    """A generating list for a PermGroup or SubgroupSet."""
    if isinstance(x, PermGroup):
        return list(x.generator_raws)
    if isinstance(x, SubgroupSet):
        gens, _ = small_generating_raws(x.degree, x.sorted_raws)
        return gens
    return [_raw_of(p) for p in x]


def commutator_subgroup(h, k, cap=None):
    """[H, K]: the subgroup generated by all commutators [h, k].

    Computed from generator commutators closed under conjugation by <H, K>,
    which generates the same subgroup as the literal all-pairs closure (the
    all-pairs set is already normal in the join).
    """
    degree = h.degree
    if degree != k.degree:
        raise DegreeMismatch(f"degree {degree} vs {k.degree}")
    h_gens = _gen_raws_of(h)
    k_gens = _gen_raws_of(k)
    seeds = [commutator_raw(a, b) for a in h_gens for b in k_gens]
    join = PermGroup(degree, h_gens + k_gens)
    closed = normal_closure_group(join, seeds)
    return closed.elements(cap)


def derived_subgroup(group):
    """[G, G] as a chain-backed PermGroup."""
    gens = group.generator_raws
    seeds = [commutator_raw(a, b) for a in gens for b in gens]
    return normal_closure_group(group, seeds)


def derived_series(group, max_steps=64):
    """G >= G' >= G'' >= ... until stable."""
    series = [group]
    while len(series) <= max_steps:
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.order() == 1:
            break
    return series


def upper_central_series(group, cap=None):
    """Z_0 = 1 <= Z_1 <= ... against generators; a repeated final term marks
    stabilization strictly below G."""
    elems = group.elements(cap)
    gens = group.generator_raws
    terms = [SubgroupSet.trivial(group.degree)]
    while True:
        current = terms[-1].raws
        nxt = frozenset(
            x for x in elems.raws if all(commutator_raw(x, g) in current for g in gens)
        )
        terms.append(SubgroupSet(group.degree, nxt))
        if nxt == current or len(nxt) == elems.order:
            break
    return terms


def nilpotency_class(group, cap=None):
    """Index of the first central-series term equal to G, or None."""
    full = group.order()
    for i, term in enumerate(upper_central_series(group, cap)):
        if term.order == full:
            return i
    return None


def is_normal(group, subgroup):
    """Conjugates of a generating set stay inside the (finite) set."""
    raws = subgroup.raws if isinstance(subgroup, SubgroupSet) else subgroup.elements().raws
    sub_gens = _gen_raws_of(subgroup)
    return all(
        conjugate_raw(h, x) in raws for x in group.generator_raws for h in sub_gens
    )


def is_abelian(x):
    gens = _gen_raws_of(x)
    return all(
        compose_raw(a, b) == compose_raw(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
    )


def _as_group(x):
    return x.as_group() if isinstance(x, SubgroupSet) else x


def is_cyclic(x):
    """True iff some element order equals the group order."""
    group = _as_group(x)
    n = group.order()
    if n == 1:
        return True
    return any(order_raw(e) == n for e in group.elements().raws)


def is_perfect(group):
    group = _as_group(group)
    return derived_subgroup(group).order() == group.order()


def is_nontrivial(x):
    if isinstance(x, SubgroupSet):
        return len(x) > 1
    return x.order() > 1


def is_soluble(group):
    series = derived_series(_as_group(group))
    return series[-1].order() == 1


def minimal_normal_subgroups(group, cap=None):
    """Inclusion-minimal nontrivial normal closures of single elements.

    Single-element closures are constant on conjugacy classes, so class
    minima suffice.
    """
    reps, _ = group.class_partition(cap)
    ident = group.identity_raw
    closures = set()
    for rep in reps:
        if rep == ident:
            continue
        closed = normal_closure_group(group, None, seed_gens=[rep])
        closures.add(closed.elements(cap).raws)
    candidates = sorted(closures, key=len)
    return [
        SubgroupSet(group.degree, raws)
        for raws in candidates
        if not any(other < raws for other in candidates)
    ]


def quotient(group, normal, cap=None):
    """G/N on the right cosets of N: (quotient group, project, preimage).

    Cosets are labelled 0.. in order of their lexicographically least
    element, so the quotient's permutation representation is reproducible.
    """
    if not is_normal(group, normal):
        raise NotNormal("quotient by a non-normal subgroup")
    limit = enumeration_cap(cap)
    elems = group.elements(cap)
    n_raws = normal.raws if isinstance(normal, SubgroupSet) else normal.elements(cap).raws
    index = len(elems.raws) // len(n_raws)
    if index > limit:
        raise CapacityExceeded(
            f"index {index} exceeds cap {limit}", required=index, cap=limit
        )

    coset_id = {}
    reps = []
    members = []
    for x in elems.sorted_raws:
        if x in coset_id:
            continue
        cid = len(reps)
        reps.append(x)
        block = [compose_raw(n, x) for n in n_raws]
        for y in block:
            coset_id[y] = cid
        members.append(block)

    def project_raw(g):
        return raw_from_images(coset_id[compose_raw(r, g)] for r in reps)

    def project(p):
        raw = _raw_of(p)
        if not group.contains(raw):
            raise NotAMember("projection of a non-member")
        result = project_raw(raw)
        return Permutation._wrap(result) if isinstance(p, Permutation) else result

    quotient_group = PermGroup(index, [project_raw(g) for g in group.generator_raws])

    coset_perm = [project_raw(r) for r in reps]

    def preimage(subset):
        target = subset.raws if isinstance(subset, SubgroupSet) else frozenset(
            _raw_of(p) for p in subset
        )
        raws = set()
        for cid, image in enumerate(coset_perm):
            if image in target:
                raws.update(members[cid])
        return SubgroupSet(group.degree, frozenset(raws))

    return quotient_group, project, preimage
