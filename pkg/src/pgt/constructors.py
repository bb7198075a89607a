"""Constructors for the finite group families the verification corpus uses.

Everything is realized as a permutation group:

* classical families get their natural actions (quaternion groups use the
  regular representation);
* matrix groups over a prime field act on the p^n - 1 nonzero row vectors,
  affine groups on all p^n vectors, with vectors labelled by their base-p
  value (little-endian), so representations are reproducible;
* wreath products use the imprimitive action on n * deg(H) points; the
  standard wreath product is obtained by passing K in its regular
  representation.

Matrix-to-permutation conversion uses the right action v -> v*M, which
makes it a homomorphism with respect to left-to-right composition.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations

from .errors import InvalidParameter
from .groups import PermGroup
from .numtheory import is_prime
from .perms import (
    Permutation,
    compose_raw,
    conjugate_raw,
    cycles_raw,
    raw_from_cycles,
    raw_from_images,
    raw_identity,
)

# -- classical families -------------------------------------------------------


def symmetric(n):
    """Sym(n) in its natural action."""
    if n < 1:
        raise InvalidParameter("symmetric(n) needs n >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    gens = [raw_from_cycles([(0, 1)], n)]
    if n >= 3:
        gens.append(raw_from_cycles([tuple(range(n))], n))
    return PermGroup(n, gens)


def alternating(n):
    """Alt(n) in its natural action."""
    if n < 1:
        raise InvalidParameter("alternating(n) needs n >= 1")
    if n <= 2:
        return PermGroup.trivial(n)
    gens = [raw_from_cycles([(0, 1, 2)], n)]
    if n > 3:
        if n % 2:
            gens.append(raw_from_cycles([tuple(range(n))], n))
        else:
            gens.append(raw_from_cycles([tuple(range(1, n))], n))
    return PermGroup(n, gens)


def cyclic(n):
    """C(n) as an n-cycle (regular = natural here)."""
    if n < 1:
        raise InvalidParameter("cyclic(n) needs n >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup(n, [raw_from_cycles([tuple(range(n))], n)])


def dihedral(order):
    """Dihedral group of the given (even) order, on order/2 points."""
    if order < 2 or order % 2:
        raise InvalidParameter(f"dihedral needs an even order >= 2, got {order}")
    if order == 2:
        return cyclic(2)
    if order == 4:
        return elementary_abelian(2, 2)
    n = order // 2
    rotation = raw_from_cycles([tuple(range(n))], n)
    reflection = raw_from_images((n - i) % n for i in range(n))
    return PermGroup(n, [rotation, reflection])


def quaternion(order):
    """Generalized quaternion of order 2^k, k >= 3, in its regular representation."""
    k = order.bit_length() - 1
    if order < 8 or 1 << k != order:
        raise InvalidParameter(f"quaternion needs an order 2^k >= 8, got {order}")
    half = order // 2  # |<a>|
    quarter = order // 4  # b^2 = a^quarter

    def mul(x, y):
        i, e = x
        j, f = y
        if e == 0:
            return ((i + j) % half, f)
        if f == 0:
            return ((i - j) % half, 1)
        return ((i - j + quarter) % half, 0)

    elems = [(i, e) for e in (0, 1) for i in range(half)]
    index = {x: n for n, x in enumerate(elems)}
    gens = []
    for g in [(1, 0), (0, 1)]:
        gens.append(raw_from_images(index[mul(x, g)] for x in elems))
    return PermGroup(order, gens)


def elementary_abelian(p, k):
    """C(p)^k on k disjoint blocks of p points."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if k < 1:
        raise InvalidParameter("need k >= 1")
    degree = p * k
    gens = [
        raw_from_cycles([tuple(range(i * p, (i + 1) * p))], degree) for i in range(k)
    ]
    return PermGroup(degree, gens)


# -- products -----------------------------------------------------------------


def _embed_raw(raw, degree, offset, total):
    images = list(range(total))
    for i, v in enumerate(raw):
        images[offset + i] = offset + v
    return raw_from_images(images)


def direct_product(a, b):
    """A x B acting on the disjoint union of the two point sets."""
    total = a.degree + b.degree
    gens = [_embed_raw(g, a.degree, 0, total) for g in a.generator_raws]
    gens += [_embed_raw(g, b.degree, a.degree, total) for g in b.generator_raws]
    return PermGroup(total, gens)


def direct_embeddings(a, b):
    """The two canonical embeddings into direct_product(a, b), on raws."""
    total = a.degree + b.degree

    def left(raw):
        return _embed_raw(raw, a.degree, 0, total)

    def right(raw):
        return _embed_raw(raw, b.degree, a.degree, total)

    return left, right


@dataclass
class WreathProduct:
    """H wr K on n*deg(H) points, with its named subgroups."""

    group: PermGroup
    base: PermGroup  # direct product of the n copies of H
    top: PermGroup  # the lifted copy of K
    h_degree: int
    n: int

    def lift_top(self, k_raw):
        """Lift a permutation of the top points to the wreath action."""
        images = []
        for block in range(self.n):
            target = k_raw[block] * self.h_degree
            images.extend(target + j for j in range(self.h_degree))
        return raw_from_images(images)

    def embed_base(self, block, h_raw):
        images = list(range(self.n * self.h_degree))
        off = block * self.h_degree
        for i, v in enumerate(h_raw):
            images[off + i] = off + v
        return raw_from_images(images)

    def top_base_commutator(self, cap=None):
        """[K, B] as an explicit SubgroupSet."""
        from .groups import commutator_subgroup

        return commutator_subgroup(self.top, self.base, cap)


def wreath(h, k):
    """H wr K with K acting on its points (imprimitive action).

    The wreath theorems here assume a transitive top group; a warning is
    emitted otherwise, the construction itself stays valid.
    """
    n = k.degree
    dh = h.degree
    total = n * dh

    orbit = {0}
    frontier = [0]
    while frontier:
        pt = frontier.pop()
        for g in k.generator_raws:
            q = g[pt]
            if q not in orbit:
                orbit.add(q)
                frontier.append(q)
    transitive = len(orbit) == n
    if not transitive:
        warnings.warn("wreath: top group is not transitive; case theorems do not apply")

    shell = WreathProduct(group=None, base=None, top=None, h_degree=dh, n=n)
    base_gens = [
        shell.embed_base(block, g) for block in range(n) for g in h.generator_raws
    ]
    top_gens = [shell.lift_top(g) for g in k.generator_raws]
    if transitive and h.generator_raws:
        # one copy of the base generators suffices: K moves it onto the others
        group_gens = [shell.embed_base(0, g) for g in h.generator_raws] + top_gens
    else:
        group_gens = base_gens + top_gens
    shell.group = PermGroup(total, group_gens)
    shell.base = PermGroup(total, base_gens)
    shell.top = PermGroup(total, top_gens)
    return shell


def regular_representation(group, cap=None):
    """Right-regular action on the (sorted) element list; degree = order."""
    elems = group.elements(cap).sorted_raws
    index = {raw: i for i, raw in enumerate(elems)}
    gens = [
        raw_from_images(index[compose_raw(x, g)] for x in elems)
        for g in group.generator_raws
    ]
    return PermGroup(max(len(elems), 1), gens)


def iterated_wreath(p, depth, cap=None):
    """C(p) wr (C(p) wr (... )) with each level in its regular representation."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if depth < 1:
        raise InvalidParameter("depth must be >= 1")
    group = cyclic(p)
    for _ in range(depth - 1):
        group = wreath(cyclic(p), regular_representation(group, cap)).group
    return group


# -- prime-field matrices ------------------------------------------------------


def _check_prime(p):
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not a prime (prime fields only)")


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b, p):
    n = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(n)) % p for j in range(n))
        for i in range(n)
    )


def mat_det(a, p):
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        inv = pow(m[col][col], -1, p)
        det = det * m[col][col] % p
        for r in range(col + 1, n):
            factor = m[r][col] * inv % p
            m[r] = [(m[r][c] - factor * m[col][c]) % p for c in range(n)]
    return det % p


def _vec_label(v, p):
    label = 0
    for i in reversed(range(len(v))):
        label = label * p + v[i]
    return label


def _label_vec(label, n, p):
    v = []
    for _ in range(n):
        v.append(label % p)
        label //= p
    return tuple(v)


def linear_perm(m, p):
    """Permutation of the nonzero row vectors under v -> v*M."""
    n = len(m)
    if mat_det(m, p) == 0:
        raise InvalidParameter(f"singular matrix mod {p}: {m}")
    images = []
    for t in range(1, p**n):
        v = _label_vec(t, n, p)
        w = tuple(sum(v[i] * m[i][j] for i in range(n)) % p for j in range(n))
        images.append(_vec_label(w, p) - 1)
    return raw_from_images(images)


def affine_perm(m, t_vec, p):
    """Permutation of all p^n row vectors under v -> v*M + t."""
    n = len(m)
    if mat_det(m, p) == 0:
        raise InvalidParameter(f"singular matrix mod {p}: {m}")
    images = []
    for t in range(p**n):
        v = _label_vec(t, n, p)
        w = tuple(
            (sum(v[i] * m[i][j] for i in range(n)) + t_vec[j]) % p for j in range(n)
        )
        images.append(_vec_label(w, p))
    return raw_from_images(images)


def transvection_matrices(n, p):
    """All I + E_ij (i != j); they generate SL(n, p)."""
    mats = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = [list(row) for row in mat_identity(n)]
            m[i][j] = 1
            mats.append(tuple(tuple(row) for row in m))
    return mats


def scalar_matrix(n, p, c):
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


def primitive_root(p):
    """Smallest generator of the multiplicative group mod p."""
    if p == 2:
        return 1
    factors = set()
    m = p - 1
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InvalidParameter(f"no primitive root mod {p}")  # unreachable for prime p


def gl_order(n, p):
    q = p**n
    result = 1
    for i in range(n):
        result *= q - p**i
    return result


def sl_generator_matrices(n, p):
    return transvection_matrices(n, p)


def gl_generator_matrices(n, p):
    mats = transvection_matrices(n, p)
    if p > 2:
        m = [list(row) for row in mat_identity(n)]
        m[0][0] = primitive_root(p)
        mats.append(tuple(tuple(row) for row in m))
    return mats


def gl(n, p):
    """GL(n, p) on the p^n - 1 nonzero vectors."""
    _check_prime(p)
    if n < 1:
        raise InvalidParameter("need n >= 1")
    return PermGroup(p**n - 1, [linear_perm(m, p) for m in gl_generator_matrices(n, p)])


def sl(n, p):
    """SL(n, p) on the p^n - 1 nonzero vectors."""
    _check_prime(p)
    if n < 1:
        raise InvalidParameter("need n >= 1")
    return PermGroup(p**n - 1, [linear_perm(m, p) for m in sl_generator_matrices(n, p)])


def ut(n, p):
    """Upper unitriangular UT(n, p) on the nonzero vectors; order p^(n(n-1)/2)."""
    _check_prime(p)
    if n < 1:
        raise InvalidParameter("need n >= 1")
    if n == 1:
        return PermGroup.trivial(max(p - 1, 1))
    gens = []
    for i in range(n - 1):
        m = [list(row) for row in mat_identity(n)]
        m[i][i + 1] = 1
        gens.append(linear_perm(tuple(tuple(row) for row in m), p))
    return PermGroup(p**n - 1, gens)


def tr2(p):
    """Full triangular 2x2 group over F_p; order (p-1)^2 * p."""
    _check_prime(p)
    mats = [((1, 1), (0, 1))]
    r = primitive_root(p)
    if p > 2:
        mats.append(((r, 0), (0, 1)))
        mats.append(((1, 0), (0, r)))
    return PermGroup(p * p - 1, [linear_perm(m, p) for m in mats])


@dataclass
class AffineGroup:
    """A linear group extended by all translations, acting on p^n vectors."""

    group: PermGroup
    translations: PermGroup
    linear: PermGroup
    n: int
    p: int


def _affine_from_matrices(mats, n, p):
    zero = tuple(0 for _ in range(n))
    linear_gens = [affine_perm(m, zero, p) for m in mats]
    identity_m = mat_identity(n)
    translation_gens = [
        affine_perm(identity_m, tuple(1 if j == i else 0 for j in range(n)), p)
        for i in range(n)
    ]
    degree = p**n
    return AffineGroup(
        group=PermGroup(degree, linear_gens + translation_gens),
        translations=PermGroup(degree, translation_gens),
        linear=PermGroup(degree, linear_gens),
        n=n,
        p=p,
    )


def affine_gl(n, p):
    """AGL(n, p) = GL(n, p) acting on the p^n vectors, plus translations."""
    _check_prime(p)
    return _affine_from_matrices(gl_generator_matrices(n, p), n, p)


def affine_sl(n, p):
    """ASL(n, p) = SL(n, p) plus translations."""
    _check_prime(p)
    return _affine_from_matrices(sl_generator_matrices(n, p), n, p)


# -- the three bespoke groups ---------------------------------------------------


def sl25_on_f11sq():
    """The perfect group SL(2,5) x| (Z_11 x Z_11) on 121 points.

    The linear part is the subgroup of SL(2,11) generated by
    [[4,1],[0,3]] and [[0,3],[7,10]].
    """
    p = 11
    a = ((4, 1), (0, 3))
    b = ((0, 3), (7, 10))
    affine = _affine_from_matrices([a, b], 2, p)
    return affine


@dataclass
class FibQuotientGroup:
    """<x> x| (Z_p x Z_p) with x acting as [[1,1],[1,0]] mod p."""

    group: PermGroup
    base: PermGroup  # the translation subgroup, image of A/A^p
    matrix_order: int
    irreducible: bool  # of x^2 - x - 1 over F_p
    p: int


def fib_quotient(p):
    """Finite quotient of the Fibonacci-action polycyclic group, on p^2 points."""
    _check_prime(p)
    x = tuple(tuple(v % p for v in row) for row in ((1, 1), (1, 0)))
    ident = mat_identity(2)
    power = x
    order_x = 1
    while power != ident:
        power = mat_mul(power, x, p)
        order_x += 1
    irreducible = all((t * t - t - 1) % p for t in range(p))
    zero = (0, 0)
    x_perm = affine_perm(x, zero, p)
    translations = [
        affine_perm(ident, (1, 0), p),
        affine_perm(ident, (0, 1), p),
    ]
    degree = p * p
    return FibQuotientGroup(
        group=PermGroup(degree, [x_perm] + translations),
        base=PermGroup(degree, translations),
        matrix_order=order_x,
        irreducible=irreducible,
        p=p,
    )


# outer automorphism of Sym(6) by its images on the star transpositions
# (0 k); the remaining values follow because the (0 k) generate Sym(6)
_OUTER_STAR_IMAGES = {
    (0, 1): [(0, 4), (1, 2), (3, 5)],
    (0, 2): [(0, 3), (1, 5), (2, 4)],
    (0, 3): [(0, 2), (1, 3), (4, 5)],
    (0, 4): [(0, 1), (2, 5), (3, 4)],
    (0, 5): [(0, 5), (1, 4), (2, 3)],
}


@dataclass
class AutSym6:
    """Aut(Sym(6)) acting on the 720 elements of Sym(6)."""

    group: PermGroup
    inner: PermGroup  # conjugation copy of Sym(6), index 2
    inner_alt: PermGroup  # conjugation copy of Alt(6)
    outer_perm: Permutation  # the outer generator, order 2
    labels: tuple  # element raws in label order


def _star_factorization(g_raw):
    """g as a left-to-right product of star transpositions (0, k)."""
    stars = []
    for cycle in cycles_raw(g_raw):
        c0 = cycle[0]
        for ci in cycle[1:]:
            a, b = c0, ci
            if a == 0:
                stars.append((0, b))
            elif b == 0:
                stars.append((0, a))
            else:
                stars.extend([(0, a), (0, b), (0, a)])
    return stars


@lru_cache(maxsize=1)
def aut_sym6():
    """Aut(Sym(6)), order 1440, as permutations of the 720 group elements."""
    degree6 = 6
    elems = [bytes(p) for p in _permutations(range(degree6))]  # lex order
    label = {raw: i for i, raw in enumerate(elems)}

    def conj_perm(t_raw):
        return raw_from_images(label[conjugate_raw(g, t_raw)] for g in elems)

    star_image = {
        pair: raw_from_cycles(cycles, degree6)
        for pair, cycles in _OUTER_STAR_IMAGES.items()
    }

    def outer_of(g_raw):
        result = raw_identity(degree6)
        for star in _star_factorization(g_raw):
            result = compose_raw(result, star_image[star])
        return result

    outer = raw_from_images(label[outer_of(g)] for g in elems)

    t_swap = raw_from_cycles([(0, 1)], degree6)
    t_cycle = raw_from_cycles([tuple(range(degree6))], degree6)
    a_three = raw_from_cycles([(0, 1, 2)], degree6)
    a_five = raw_from_cycles([(1, 2, 3, 4, 5)], degree6)

    inner_gens = [conj_perm(t_swap), conj_perm(t_cycle)]
    alt_gens = [conj_perm(a_three), conj_perm(a_five)]
    return AutSym6(
        group=PermGroup(720, inner_gens + [outer]),
        inner=PermGroup(720, inner_gens),
        inner_alt=PermGroup(720, alt_gens),
        outer_perm=Permutation._wrap(outer),
        labels=tuple(elems),
    )
