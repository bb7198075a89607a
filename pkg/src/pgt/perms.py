"""Permutation arithmetic on packed image arrays.

A permutation of degree d is stored as its image sequence: entry i is the
image of point i.  Degrees up to 256 are packed into ``bytes`` so that
composition is a single C-level ``bytes.translate``; larger degrees fall
back to tuples of ints.  Both forms hash, compare and sort the same way
within a fixed degree, which gives every element set a canonical
(lexicographic) order.

Composition is left-to-right: ``(p * q)(i) == q(p(i))`` (apply p first).
With that convention conjugation reads x^y = y^-1 x y and the commutator
[x, y] = x^-1 y^-1 x y, matching the usual right-action notation.
"""

from __future__ import annotations

from math import lcm

from .errors import DegreeMismatch, InvalidParameter

# raw permutation = bytes (degree <= 256) or tuple of ints
_BYTES_MAX = 256

# padding tails so a degree-d bytes permutation becomes a 256-entry
# translate table; the padded entries are never indexed
_TAILS = [b"\x00" * (256 - d) for d in range(257)]


def raw_identity(degree):
    if degree <= _BYTES_MAX:
        return bytes(range(degree))
    return tuple(range(degree))


def raw_from_images(images):
    images = list(images)
    if len(images) <= _BYTES_MAX:
        return bytes(images)
    return tuple(images)


def compose_raw(p, q):
    """Product pq: apply p, then q."""
    if type(p) is bytes:
        return p.translate(q + _TAILS[len(q)])
    return tuple(map(q.__getitem__, p))


def invert_raw(p):
    d = len(p)
    if type(p) is bytes:
        inv = bytearray(d)
        for i, v in enumerate(p):
            inv[v] = i
        return bytes(inv)
    inv = [0] * d
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def conjugate_raw(g, x):
    """x^-1 g x."""
    return compose_raw(compose_raw(invert_raw(x), g), x)


def commutator_raw(x, y):
    """x^-1 y^-1 x y."""
    return compose_raw(compose_raw(invert_raw(compose_raw(y, x)), x), y)


def power_raw(p, n):
    d = len(p)
    if n < 0:
        return power_raw(invert_raw(p), -n)
    result = raw_identity(d)
    base = p
    while n:
        if n & 1:
            result = compose_raw(result, base)
        n >>= 1
        if n:
            base = compose_raw(base, base)
    return result


def cycles_raw(p):
    """Nontrivial cycles, each rotated to start at its least point."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cycle = [i]
        j = p[i]
        while j != i:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        out.append(tuple(cycle))
    return out


def order_raw(p):
    """Element order, via the lcm of cycle lengths."""
    result = 1
    for cycle in cycles_raw(p):
        result = lcm(result, len(cycle))
    return result


def raw_from_cycles(cycles, degree):
    images = list(range(degree))
    for cycle in cycles:
        if len(set(cycle)) != len(cycle):
            raise InvalidParameter(f"repeated point in cycle {cycle}")
        for a, b in zip(cycle, cycle[1:]):
            images[a] = b
        if cycle:
            images[cycle[-1]] = cycle[0]
    return raw_from_images(images)


def cycle_string(p):
    cycles = cycles_raw(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def _validate_images(images):
    d = len(images)
    if d < 1:
        raise InvalidParameter("a permutation needs degree >= 1")
    if sorted(images) != list(range(d)):
        raise InvalidParameter(f"not a bijection of 0..{d - 1}: {images}")


class Permutation:
    """A permutation of {0, ..., d-1}, immutable and hashable."""

    __slots__ = ("_raw",)

    def __init__(self, images):
        images = list(images)
        _validate_images(images)
        self._raw = raw_from_images(images)

    @classmethod
    def _wrap(cls, raw):
        p = object.__new__(cls)
        p._raw = raw
        return p

    @classmethod
    def identity(cls, degree):
        if degree < 1:
            raise InvalidParameter("degree must be >= 1")
        return cls._wrap(raw_identity(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise InvalidParameter(f"point {point} out of range for degree {degree}")
        return cls._wrap(raw_from_cycles(cycles, degree))

    @property
    def raw(self):
        return self._raw

    @property
    def degree(self):
        return len(self._raw)

    @property
    def images(self):
        return tuple(self._raw)

    def __call__(self, point):
        return self._raw[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._raw) != len(other._raw):
            raise DegreeMismatch(f"degree {len(self._raw)} vs {len(other._raw)}")
        return Permutation._wrap(compose_raw(self._raw, other._raw))

    def __pow__(self, n):
        return Permutation._wrap(power_raw(self._raw, n))

    def inverse(self):
        return Permutation._wrap(invert_raw(self._raw))

    def __invert__(self):
        return self.inverse()

    def is_identity(self):
        return self._raw == raw_identity(len(self._raw))

    def order(self):
        return order_raw(self._raw)

    def cycles(self):
        return cycles_raw(self._raw)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._raw == other._raw

    def __hash__(self):
        return hash(self._raw)

    def __lt__(self, other):
        return self._raw < other._raw

    def __repr__(self):
        return f"Permutation[{cycle_string(self._raw)}]"


def identity(degree):
    """Identity permutation on degree points."""
    if degree < 1:
        raise InvalidParameter("degree must be >= 1")
    return Permutation.identity(degree)


def _check_degrees(*perms):
    d = perms[0].degree
    for p in perms[1:]:
        if p.degree != d:
            raise DegreeMismatch(f"degree {d} vs {p.degree}")


def compose(p, q):
    """Product pq (apply p first, then q)."""
    _check_degrees(p, q)
    return p * q


def inverse(p):
    return p.inverse()


def conjugate(g, x):
    """x^-1 g x."""
    _check_degrees(g, x)
    return Permutation._wrap(conjugate_raw(g.raw, x.raw))


def commutator_elem(x, y):
    """[x, y] = x^-1 y^-1 x y."""
    _check_degrees(x, y)
    return Permutation._wrap(commutator_raw(x.raw, y.raw))


def parse_images_line(line):
    """One whitespace- or comma-separated image sequence, 0-based."""
    parts = line.replace(",", " ").split()
    if not parts:
        return None
    try:
        images = [int(part) for part in parts]
    except ValueError:
        raise InvalidParameter(f"cannot parse image sequence: {line!r}") from None
    _validate_images(images)
    return raw_from_images(images)
