"""The pseudocentre P(G), its ascending series, and report generation.

P(G) is the intersection over all g of the normal closure of the
centralizer of g.  Closed centralizers are constant on conjugacy classes,
so ``pseudocentre`` intersects over class representatives only, ordered by
increasing centralizer size so the running intersection shrinks early.
Three further sound cuts apply:

* a central representative has centralizer G, closure G -- skip;
* a closure of full order cannot shrink the intersection -- detected from
  its chain order, never enumerated;
* once the running intersection equals the centre it is final (the centre
  is contained in every closed centralizer), and a representative
  centralizing every generator of the running intersection leaves it
  unchanged.

``pseudocentre_naive`` is the independent oracle: it intersects over every
single element with none of the class-level reasoning (identical
centralizer sets share one closure computation, which is pure caching).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .config import DEFAULT_ORACLE_CAP
from .errors import CapacityExceeded
from .groups import (
    SubgroupSet,
    center,
    commutes_raw as _commutes,
    derived_subgroup,
    normal_closure_group,
    quotient,
    small_generating_raws,
)


def pseudocentre(group, cap=None):
    """P(G) as an explicit SubgroupSet."""
    full_order = group.order()
    # class partition enforces the 2*|G| capacity requirement up front,
    # before any element enumeration
    reps, sizes = group.class_partition(cap)
    elems = group.elements(cap)
    if full_order == 1:
        return elems

    centre_raws = center(group, cap).raws
    sorted_elems = elems.sorted_raws

    # centralizer order is |G| / class size: visit small centralizers first
    ordered = sorted(zip(reps, sizes), key=lambda t: -t[1])

    current = elems.raws
    current_gens = list(group.generator_raws)
    seen_centralizers = set()
    for rep, size in ordered:
        if size == 1:
            continue  # central element: closure is G
        if current == centre_raws:
            break
        if current_gens is not None and all(_commutes(x, rep) for x in current_gens):
            continue  # current <= C_G(rep) <= closure: no change
        cent = tuple(x for x in sorted_elems if _commutes(x, rep))
        if cent in seen_centralizers:
            continue
        seen_centralizers.add(cent)
        seed_gens, seed_chain = small_generating_raws(group.degree, cent)
        closed = normal_closure_group(group, None, seed_chain=seed_chain, seed_gens=seed_gens)
        if closed.order() == full_order:
            continue
        current = current & frozenset(closed.chain.elements())
        if len(current) <= 20000:
            current_gens, _ = small_generating_raws(group.degree, sorted(current))
        else:
            current_gens = None
    return SubgroupSet(group.degree, current)


def pseudocentre_naive(group, cap=DEFAULT_ORACLE_CAP):
    """Literal intersection over every element of G; the oracle for pseudocentre."""
    full_order = group.order()
    if full_order > cap:
        raise CapacityExceeded(
            f"naive pseudocentre needs order <= {cap}, group has {full_order}",
            required=full_order,
            cap=cap,
        )
    elems = group.elements(cap)
    sorted_elems = elems.sorted_raws
    current = elems.raws
    closure_of = {}
    for g in sorted_elems:
        cent = tuple(x for x in sorted_elems if _commutes(x, g))
        closure = closure_of.get(cent)
        if closure is None:
            seed_gens, seed_chain = small_generating_raws(group.degree, cent)
            closed = normal_closure_group(
                group, None, seed_chain=seed_chain, seed_gens=seed_gens
            )
            closure = elems.raws if closed.order() == full_order else frozenset(
                closed.chain.elements()
            )
            closure_of[cent] = closure
        current = current & closure
    return SubgroupSet(group.degree, current)


@dataclass
class PseudoSeries:
    """Ascending pseudocentral series: terms[0] = 1, terms[i+1]/terms[i] = P(G/terms[i])."""

    terms: list
    stabilized: bool
    reaches_group: bool

    @property
    def term_orders(self):
        return [t.order for t in self.terms]


def upper_pseudocentral_series(group, max_steps=30, cap=None):
    """The series 1 = P_0 <= P_1 <= ..., stopping at stabilization or the step cap."""
    full_order = group.order()
    terms = [SubgroupSet.trivial(group.degree)]
    for _ in range(max_steps):
        bottom = terms[-1]
        if bottom.order == full_order:
            return PseudoSeries(terms, True, True)
        quotient_group, _, preimage = quotient(group, bottom, cap)
        p_quotient = pseudocentre(quotient_group, cap)
        nxt = preimage(p_quotient)
        if nxt.order == bottom.order:
            return PseudoSeries(terms, True, bottom.order == full_order)
        terms.append(nxt)
    stabilized = terms[-1].order == full_order
    return PseudoSeries(terms, stabilized, stabilized)


def pseudonilpotent_class(group, max_steps=30, cap=None):
    """Least n with P_n(G) = G, or None if the series did not get there."""
    series = upper_pseudocentral_series(group, max_steps, cap)
    if not series.reaches_group:
        return None
    return len(series.terms) - 1


def is_pseudocentral(group, cap=None):
    return pseudocentre(group, cap).order == group.order()


@dataclass
class PseudoReport:
    """Everything one run computes about a group, with stage timings."""

    spec: str
    degree: int
    order: int
    centre_order: int
    derived_order: int
    second_derived_order: int
    pseudocentre_order: int
    is_pseudocentral: bool
    p_equals_centre: bool
    p_equals_derived: bool
    series_orders: list
    pseudo_class: int | None
    series_stabilized: bool
    timings_ms: dict = field(default_factory=dict)

    def flags(self):
        return {
            "is_pseudocentral": self.is_pseudocentral,
            "p_equals_centre": self.p_equals_centre,
            "p_equals_derived": self.p_equals_derived,
        }


def pseudo_report(group, spec_text, max_steps=30, cap=None):
    """Compute the full report for one group."""
    timings = {}

    def timed(name, fn):
        start = time.perf_counter()
        result = fn()
        timings[name] = (time.perf_counter() - start) * 1000.0
        return result

    elems = timed("elements", lambda: group.elements(cap))
    centre_set = timed("centre", lambda: center(group, cap))
    derived = timed("derived", lambda: derived_subgroup(group))
    second = derived_subgroup(derived)
    p_set = timed("pseudocentre", lambda: pseudocentre(group, cap))
    series = timed("series", lambda: upper_pseudocentral_series(group, max_steps, cap))

    derived_raws = derived.elements(cap).raws
    return PseudoReport(
        spec=spec_text,
        degree=group.degree,
        order=elems.order,
        centre_order=centre_set.order,
        derived_order=derived.order(),
        second_derived_order=second.order(),
        pseudocentre_order=p_set.order,
        is_pseudocentral=p_set.order == elems.order,
        p_equals_centre=p_set.raws == centre_set.raws,
        p_equals_derived=p_set.raws == derived_raws,
        series_orders=series.term_orders,
        pseudo_class=(len(series.terms) - 1) if series.reaches_group else None,
        series_stabilized=series.stabilized,
        timings_ms=timings,
    )
