"""Incremental Schreier-Sims stabilizer chains.

A chain holds one level per base point.  Level i stores the base point b_i,
a generator list (every generator fixes b_0..b_{i-1} pointwise), and the
orbit of b_i under those generators with transversal elements u (u maps b_i
to the orbit point) plus their precomputed inverses.

Strong generation is maintained by the classic deterministic loop: every
Schreier generator of every level must sift to the identity through the
levels below it.  Processed (orbit point, generator) pairs are remembered
per level, so re-verification after an incremental extension only touches
new pairs.  That makes ``extend`` cheap enough to drive normal-closure
computations, where the order of the closure is needed long before (and
often instead of) its element list.
"""

from __future__ import annotations

from .perms import compose_raw, invert_raw, raw_identity


class _Level:
    __slots__ = ("base", "gens", "orbit", "orbit_list", "done")

    def __init__(self, base, identity):
        self.base = base
        self.gens = []
        # orbit point -> (u, u_inv) with u[base] == point
        self.orbit = {base: (identity, identity)}
        self.orbit_list = [base]
        self.done = set()


class StabilizerChain:
    """Base and strong generating set for a permutation group."""

    def __init__(self, degree, gens=()):
        self.degree = degree
        self.identity = raw_identity(degree)
        self.levels = []
        for gen in gens:
            self.extend(gen)

    # -- queries ---------------------------------------------------------

    def order(self):
        n = 1
        for level in self.levels:
            n *= len(level.orbit_list)
        return n

    @property
    def base(self):
        return [level.base for level in self.levels]

    def strong_generators(self):
        seen = []
        for level in self.levels:
            for g in level.gens:
                if g not in seen:
                    seen.append(g)
        return seen

    def basic_orbit_lengths(self):
        return [len(level.orbit_list) for level in self.levels]

    def sift(self, p, start=0):
        """Strip p through the chain; return (residue, levels consumed)."""
        for idx in range(start, len(self.levels)):
            level = self.levels[idx]
            point = p[level.base]
            if point == level.base:
                continue
            entry = level.orbit.get(point)
            if entry is None:
                return p, idx
            p = compose_raw(p, entry[1])
        return p, len(self.levels)

    def contains(self, p):
        if len(p) != self.degree:
            return False
        residue, _ = self.sift(p)
        return residue == self.identity

    # -- construction ----------------------------------------------------

    def extend(self, gen):
        """Add a generator; returns True if the group grew."""
        residue, lvl = self.sift(gen)
        if residue == self.identity:
            return False
        if lvl == len(self.levels):
            self._append_level(residue)
        # the residue fixes b_0..b_{lvl-1}, so it is a strong generator for
        # every level up to and including lvl
        for m in range(lvl + 1):
            self._add_gen(m, residue)
        self._complete(len(self.levels) - 1)
        return True

    def _append_level(self, moved_by):
        base = next(i for i, v in enumerate(moved_by) if v != i)
        self.levels.append(_Level(base, self.identity))

    def _add_gen(self, m, gen):
        level = self.levels[m]
        if gen not in level.gens:
            level.gens.append(gen)

    def _complete(self, start):
        i = start
        while i >= 0:
            failed_at = self._verify_level(i)
            if failed_at is None:
                i -= 1
            else:
                i = failed_at

    def _verify_level(self, i):
        """Process unchecked Schreier pairs at level i.

        Expands the basic orbit as a side effect.  On discovering a missing
        strong generator, installs it at the levels below and returns the
        deepest level touched; returns None once the level is clean.
        """
        level = self.levels[i]
        gens = level.gens
        orbit = level.orbit
        orbit_list = level.orbit_list
        done = level.done
        identity = self.identity

        idx = 0
        while idx < len(orbit_list):
            point = orbit_list[idx]
            u_point = orbit[point][0]
            for gi, g in enumerate(gens):
                key = (point, gi)
                if key in done:
                    continue
                done.add(key)
                image = g[point]
                entry = orbit.get(image)
                if entry is None:
                    u = compose_raw(u_point, g)
                    orbit[image] = (u, invert_raw(u))
                    orbit_list.append(image)
                    continue
                schreier = compose_raw(compose_raw(u_point, g), entry[1])
                if schreier == identity:
                    continue
                residue, j = self.sift(schreier, i + 1)
                if residue == identity:
                    continue
                if j == len(self.levels):
                    self._append_level(residue)
                    j = len(self.levels) - 1
                for m in range(i + 1, j + 1):
                    self._add_gen(m, residue)
                return j
            idx += 1
        return None

    # -- enumeration -----------------------------------------------------

    def elements(self):
        """All group elements, one per transversal product (deterministic order)."""
        elems = [self.identity]
        for level in reversed(self.levels):
            transversal = [level.orbit[p][0] for p in level.orbit_list]
            elems = [compose_raw(r, u) for u in transversal for r in elems]
        return elems


def closure_chain(degree, gens):
    """Chain for the group generated by raw permutations ``gens``."""
    return StabilizerChain(degree, gens)
