"""The verification corpus: every finite claim as a named, runnable check.

Checks are grouped into suites (core, wreath, matrix, mclain, fib,
properties).  A check compares a computed subgroup against a structurally
described expected subgroup by exact set equality; a failing check reports
both orders and a witness element from the symmetric difference.  Checks
whose group exceeds the enumeration cap are skipped with the required size
rather than failed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import constructors as make
from . import numtheory as nt
from .errors import CapacityExceeded
from .groups import (
    PermGroup,
    SubgroupSet,
    center,
    commutator_subgroup,
    commutes_raw,
    derived_subgroup,
    generated_subgroup,
    is_abelian,
    is_cyclic,
    is_normal,
    is_perfect,
    is_soluble,
    minimal_normal_subgroups,
    nilpotency_class,
    normal_closure,
    normal_closure_group,
    quotient,
    upper_central_series,
)
from .perms import (
    compose_raw,
    conjugate_raw,
    cycle_string,
    order_raw,
    power_raw,
    raw_from_cycles,
)
from .pseudo import (
    pseudocentre,
    pseudocentre_naive,
    pseudonilpotent_class,
    upper_pseudocentral_series,
)
from .specdsl import build

SUITE_NAMES = ("core", "wreath", "matrix", "mclain", "fib", "properties")


@dataclass
class CheckRecord:
    check_id: str
    suite: str
    claim: str
    status: str  # pass | fail | skip
    expected: str = ""
    computed: str = ""
    detail: str = ""
    ms: float = 0.0
    group_order: int | None = None
    pseudocentre_order: int | None = None


@dataclass
class SuiteResult:
    name: str
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return sum(1 for r in self.records if r.status == "pass")

    @property
    def failed(self):
        return sum(1 for r in self.records if r.status == "fail")

    @property
    def skipped(self):
        return sum(1 for r in self.records if r.status == "skip")

    @property
    def total(self):
        return len(self.records)

    @property
    def all_passed(self):
        return self.failed == 0

    def lines(self):
        width = max((len(r.check_id) for r in self.records), default=8)
        out = []
        for r in self.records:
            line = f"{r.status.upper():4}  {r.check_id:{width}}  {r.claim}  [{r.ms:.0f} ms]"
            if r.status == "fail":
                line += f"\n      expected {r.expected}; computed {r.computed}"
                if r.detail:
                    line += f"; {r.detail}"
            elif r.status == "skip":
                line += f"\n      skipped: {r.detail}"
            out.append(line)
        out.append(
            f"suite {self.name}: {self.passed} passed, {self.failed} failed, "
            f"{self.skipped} skipped of {self.total}"
        )
        return out


# -- corpus --------------------------------------------------------------------

_CORPUS_SPECS = (
    ["Triv"]
    + [f"C({n})" for n in range(2, 13)]
    + [f"S({n})" for n in range(3, 8)]
    + [f"A({n})" for n in range(3, 8)]
    + [f"D({m})" for m in (4, 6, 8, 10, 12, 16, 20, 32)]
    + [f"Q({m})" for m in (8, 16, 32)]
    + ["E(2,2)", "E(2,3)", "E(2,4)", "E(3,2)", "E(3,3)", "E(5,2)", "E(7,2)"]
    + ["GL(2,2)", "GL(2,3)", "GL(2,5)", "GL(3,2)", "SL(2,3)", "SL(2,5)", "SL(2,7)"]
    + [f"UT({n},2)" for n in range(2, 7)]
    + [f"UT({n},3)" for n in range(2, 6)]
    + ["UT(2,5)", "UT(3,5)"]
    + ["Tr2(3)", "Tr2(5)", "Tr2(7)"]
    + ["AGL(1,5)", "AGL(1,7)", "AGL(2,2)", "AGL(2,3)", "AGL(2,5)", "ASL(2,3)", "ASL(2,5)"]
    + ["FibQ(2)", "FibQ(3)", "FibQ(5)", "FibQ(7)"]
    + [
        "Wr(C(2),C(2))",
        "Wr(C(2),A(3))",
        "Wr(C(2),S(3))",
        "Wr(C(3),S(3))",
        "Wr(C(2),A(4))",
        "Wr(C(3),A(4))",
        "Wr(C(2),A(5))",
        "Wr(C(5),C(2))",
        "Wr(S(3),C(2))",
        "Wr(C(2),S(4))",
    ]
    + [
        "Direct(C(2),C(3))",
        "Direct(S(3),C(2))",
        "Direct(A(4),C(3))",
        "Direct(D(8),C(5))",
        "Direct(Q(8),S(3))",
        "Direct(S(4),C(2))",
        "Direct(A(5),C(2))",
    ]
    + ["IterWr(2,2)", "IterWr(2,3)", "IterWr(3,2)"]
    + ["SL25xF11", "AutS6"]
)


@lru_cache(maxsize=1)
def corpus():
    """The registered (spec text, group) pairs, stable order."""
    return tuple((spec, build(spec)) for spec in _CORPUS_SPECS)


_PSEUDO_CACHE = {}


def _pseudocentre_of(spec_text, group, cap=None):
    result = _PSEUDO_CACHE.get(spec_text)
    if result is None:
        result = pseudocentre(group, cap)
        _PSEUDO_CACHE[spec_text] = result
    return result


# -- check plumbing --------------------------------------------------------------


def _witness(a_raws, b_raws):
    diff = a_raws.symmetric_difference(b_raws)
    if not diff:
        return ""
    return f"witness {cycle_string(min(diff))}"


def _run_check(records, suite, check_id, claim, fn):
    start = time.perf_counter()
    try:
        ok, expected, computed, extras = fn()
        status = "pass" if ok else "fail"
        detail = extras.pop("detail", "")
        record = CheckRecord(
            check_id,
            suite,
            claim,
            status,
            expected,
            computed,
            detail,
            (time.perf_counter() - start) * 1000.0,
            extras.get("group_order"),
            extras.get("pseudocentre_order"),
        )
    except CapacityExceeded as exc:
        record = CheckRecord(
            check_id,
            suite,
            claim,
            "skip",
            detail=f"{exc} (raise the cap to at least {exc.required})",
            ms=(time.perf_counter() - start) * 1000.0,
        )
    records.append(record)
    return record


def _set_check(computed_set, expected_set, expected_desc, extras=None):
    ok = computed_set.raws == expected_set.raws
    extras = dict(extras or {})
    extras["pseudocentre_order"] = computed_set.order
    if not ok:
        extras["detail"] = _witness(computed_set.raws, expected_set.raws)
    return ok, f"{expected_desc} (order {expected_set.order})", f"order {computed_set.order}", extras


# -- core suite ------------------------------------------------------------------


def _core_checks(records, cap):
    for n in range(3, 8):
        def fn(n=n):
            group = build(f"S({n})")
            p = _pseudocentre_of(f"S({n})", group, cap)
            alt = make.alternating(n).elements(cap)
            return _set_check(p, alt, f"Alt({n})", {"group_order": group.order()})

        _run_check(records, "core", f"sym-{n}", f"P(Sym({n})) = Alt({n})", fn)

    def alt4_fn():
        group = build("A(4)")
        p = _pseudocentre_of("A(4)", group, cap)
        klein = generated_subgroup(
            4, [raw_from_cycles([(0, 1), (2, 3)], 4), raw_from_cycles([(0, 2), (1, 3)], 4)]
        )
        return _set_check(p, klein, "Klein subgroup", {"group_order": 12})

    _run_check(records, "core", "alt4", "P(Alt(4)) is the Klein subgroup of order 4", alt4_fn)

    def d8_fn():
        group = build("D(8)")
        p = _pseudocentre_of("D(8)", group, cap)
        return _set_check(p, center(group, cap), "centre", {"group_order": 8})

    _run_check(records, "core", "d8", "P(D(8)) equals the centre, order 2", d8_fn)

    def q8_fn():
        group = build("Q(8)")
        p = _pseudocentre_of("Q(8)", group, cap)
        naive = pseudocentre_naive(group)
        ok = p.order == 2 and p == naive
        return ok, "order 2, matching the all-elements intersection", f"order {p.order}", {
            "group_order": 8,
            "pseudocentre_order": p.order,
        }

    _run_check(records, "core", "q8", "P(Q(8)) has order 2 (oracle-checked)", q8_fn)

    for k in (2, 3, 4):
        def dk_fn(k=k):
            group = build(f"D({2 ** (k + 1)})")
            ncls = nilpotency_class(group, cap)
            series = upper_pseudocentral_series(group, cap=cap)
            pcls = len(series.terms) - 1 if series.reaches_group else None
            ok = ncls == k and pcls == 2
            return (
                ok,
                f"nilpotency class {k}, pseudonilpotent class 2",
                f"nilpotency class {ncls}, pseudonilpotent class {pcls}",
                {"group_order": group.order()},
            )

        _run_check(
            records,
            "core",
            f"dihedral-class-{2 ** (k + 1)}",
            f"D({2 ** (k + 1)}) has nilpotency class {k} but pseudonilpotent class 2",
            dk_fn,
        )

    def d16_terms_fn():
        group = build("D(16)")
        series = upper_pseudocentral_series(group, cap=cap)
        ok = series.term_orders == [1, 4, 16]
        return ok, "term orders [1, 4, 16]", f"term orders {series.term_orders}", {
            "group_order": 16
        }

    _run_check(records, "core", "d16-series", "ascending series of D(16) is 1 < 4 < 16", d16_terms_fn)

    for depth in (2, 3):
        def iter_fn(depth=depth):
            group = build(f"IterWr(2,{depth})")
            series = upper_pseudocentral_series(group, cap=cap)
            orders = series.term_orders
            full = group.order()
            # class must exceed depth - 1: P_{depth-1} proper
            proper = len(orders) <= depth or orders[depth - 1] < full
            ok = series.reaches_group and proper
            return (
                ok,
                f"P_{depth - 1} proper, series reaching order {full}",
                f"term orders {orders}",
                {"group_order": full},
            )

        _run_check(
            records,
            "core",
            f"iterwr-2-{depth}",
            f"iterated wreath tower depth {depth}: P_{depth - 1} is proper",
            iter_fn,
        )

    for p, want_order, want_p in ((2, 12, 4), (3, 72, 9)):
        def fib_fn(p=p, want_order=want_order, want_p=want_p):
            fq = make.fib_quotient(p)
            group = fq.group
            pset = _pseudocentre_of(f"FibQ({p})", group, cap)
            base = fq.base.elements(cap)
            pcls = pseudonilpotent_class(group, cap=cap)
            ok = group.order() == want_order and pset.raws == base.raws and pset.order == want_p and pcls == 2
            return (
                ok,
                f"order {want_order}, P = translation image of order {want_p}, class 2",
                f"order {group.order()}, |P| = {pset.order}, class {pcls}",
                {"group_order": group.order(), "pseudocentre_order": pset.order},
            )

        _run_check(
            records,
            "core",
            f"fibq-{p}",
            f"Fibonacci-action quotient mod {p}: P is the translation part, class 2",
            fib_fn,
        )

    def sl25_fn():
        aff = make.sl25_on_f11sq()
        group = aff.group
        pset = _pseudocentre_of("SL25xF11", group, cap)
        translations = aff.translations.elements(cap)
        perfect = is_perfect(group)
        contained = pset.raws <= translations.raws
        mins = minimal_normal_subgroups(group, cap)
        n_minimal = any(m.raws == translations.raws for m in mins)
        ok = group.order() == 14520 and perfect and contained
        exact = "P equals the translation subgroup" if pset.raws == translations.raws else f"|P| = {pset.order}"
        return (
            ok,
            "order 14520, perfect, P inside the 121-point translation subgroup",
            f"order {group.order()}, perfect={perfect}, P<=N={contained}; {exact}; N minimal normal={n_minimal}",
            {"group_order": group.order(), "pseudocentre_order": pset.order},
        )

    _run_check(
        records,
        "core",
        "sl25-f11",
        "perfect degree-121 semidirect product: P(G) lies in the translation subgroup",
        sl25_fn,
    )

    def auts6_fn():
        aut = make.aut_sym6()
        group = aut.group
        pset = _pseudocentre_of("AutS6", group, cap)
        inner_alt = aut.inner_alt.elements(cap)
        square_inner = (aut.outer_perm * aut.outer_perm).raw in aut.inner.elements(cap).raws
        ok = group.order() == 1440 and aut.inner.order() == 720 and square_inner
        result = _set_check(pset, inner_alt, "inner Alt(6)", {"group_order": group.order()})
        return (ok and result[0], "order 1440, P = inner Alt(6) of order 360", result[2], result[3])

    _run_check(
        records,
        "core",
        "aut-sym6",
        "automorphism group of Sym(6) on 720 points: P is the inner Alt(6)",
        auts6_fn,
    )


# -- wreath suite -----------------------------------------------------------------


def _wreath_prediction(w, p, n, top):
    """(description, SubgroupSet) predicted by the case tables."""
    degree = w.group.degree

    def base_set():
        return w.base.elements()

    def kb_set():
        return w.top_base_commutator()

    if top == "Alt":
        if n >= 5:
            if p + 1 < n and n % p:
                return "the whole group", w.group.elements()
            if p > n or p + 1 == n:
                return "the base group", base_set()
            if p + 1 < n and n % p == 0:
                kb = kb_set()
                gens = list(w.top.generator_raws) + list(kb.sorted_raws)
                return "top x| [K,B]", generated_subgroup(degree, gens)
            if p == n:
                return "[K,B]", kb_set()
        if n == 3:
            return ("[K,B]", kb_set()) if p == 3 else ("the base group", base_set())
        if n == 4:
            if p == 2:
                kb = kb_set()
                v4 = [
                    w.lift_top(raw_from_cycles([(0, 1), (2, 3)], 4)),
                    w.lift_top(raw_from_cycles([(0, 2), (1, 3)], 4)),
                ]
                return "V4 x| [K,B]", generated_subgroup(degree, v4 + list(kb.sorted_raws))
            return "the base group", base_set()
        raise ValueError(f"no Alt-top case for p={p}, n={n}")

    # Sym top, n >= 3
    alt_lift = w.group.subgroup([w.lift_top(g) for g in make.alternating(n).generator_raws])
    if p < n and n % p:
        gens = list(alt_lift.generator_raws) + list(w.base.generator_raws)
        return "Alt x| B", generated_subgroup(degree, gens)
    if p < n and n % p == 0:
        akb = commutator_subgroup(alt_lift, w.base)
        gens = list(alt_lift.generator_raws) + list(akb.sorted_raws)
        return "Alt x| [Alt,B]", generated_subgroup(degree, gens)
    if p == n:
        return "[Alt,B]", commutator_subgroup(alt_lift, w.base)
    return "the base group", w.base.elements()


def check_wreath_case(p, n, top, cap=None):
    """One case of the cyclic-base wreath tables; returns a CheckRecord."""
    records = []

    def fn():
        top_group = make.alternating(n) if top == "Alt" else make.symmetric(n)
        w = make.wreath(make.cyclic(p), top_group)
        spec = f"Wr(C({p}),{'A' if top == 'Alt' else 'S'}({n}))"
        pset = _pseudocentre_of(spec, w.group, cap)
        desc, expected = _wreath_prediction(w, p, n, top)
        return _set_check(pset, expected, desc, {"group_order": w.group.order()})

    return _run_check(
        records,
        "wreath",
        f"wr-{top.lower()}-{p}-{n}",
        f"P(C({p}) wr {top}({n})) matches the case table",
        fn,
    )


_WREATH_CASES = (
    ("Alt", 2, 5),
    ("Alt", 2, 7),
    ("Alt", 5, 5),
    ("Alt", 7, 5),
    ("Alt", 5, 4),
    ("Alt", 3, 3),
    ("Alt", 2, 3),
    ("Alt", 2, 4),
    ("Sym", 2, 3),
    ("Sym", 2, 4),
    ("Sym", 3, 3),
    ("Sym", 5, 3),
)


def _wreath_checks(records, cap):
    for top, p, n in _WREATH_CASES:
        records.append(check_wreath_case(p, n, top, cap))


# -- matrix suite -----------------------------------------------------------------


def _sl_perm_gens(n, p):
    return [make.linear_perm(m, p) for m in make.sl_generator_matrices(n, p)]


def _matrix_checks(records, cap):
    def gl23_fn():
        group = build("GL(2,3)")
        pset = _pseudocentre_of("GL(2,3)", group, cap)
        sl_set = generated_subgroup(group.degree, _sl_perm_gens(2, 3))
        return _set_check(pset, sl_set, "SL(2,3)", {"group_order": group.order()})

    _run_check(records, "matrix", "gl23", "P(GL(2,3)) = SL(2,3), order 24", gl23_fn)

    def sl23_fn():
        group = build("SL(2,3)")
        pset = _pseudocentre_of("SL(2,3)", group, cap)
        elems = group.elements(cap)
        quat = generated_subgroup(
            group.degree,
            [x for x in elems.raws if order_raw(x) == 4],
        )
        ok = pset.order == 8 and is_normal(group, pset) and pset.raws == quat.raws
        return (
            ok,
            "the normal order-8 2-subgroup",
            f"order {pset.order}, normal={is_normal(group, pset)}",
            {"group_order": 24, "pseudocentre_order": pset.order},
        )

    _run_check(records, "matrix", "sl23", "P(SL(2,3)) is its order-8 normal 2-subgroup", sl23_fn)

    def gl25_fn():
        group = build("GL(2,5)")
        pset = _pseudocentre_of("GL(2,5)", group, cap)
        scalar = make.linear_perm(make.scalar_matrix(2, 5, make.primitive_root(5)), 5)
        zs = generated_subgroup(group.degree, [scalar] + _sl_perm_gens(2, 5))
        return _set_check(pset, zs, "Z * SL (square determinants)", {"group_order": group.order()})

    _run_check(records, "matrix", "gl25", "P(GL(2,5)) = Z*SL(2,5), order 240", gl25_fn)

    def sl25_whole_fn():
        group = build("SL(2,5)")
        pset = _pseudocentre_of("SL(2,5)", group, cap)
        return _set_check(pset, group.elements(cap), "the whole group", {"group_order": 120})

    _run_check(records, "matrix", "sl25", "P(SL(2,5)) = SL(2,5)", sl25_whole_fn)

    def gl32_fn():
        group = build("GL(3,2)")
        pset = _pseudocentre_of("GL(3,2)", group, cap)
        return _set_check(pset, group.elements(cap), "the whole group", {"group_order": 168})

    _run_check(records, "matrix", "gl32", "P(GL(3,2)) = GL(3,2) (trivial centre)", gl32_fn)

    def gl25_quotient_fn():
        group = build("GL(2,5)")
        centre_set = center(group, cap)
        quotient_group, project, _ = quotient(group, centre_set, cap)
        pset = pseudocentre(quotient_group, cap)
        sl_image = SubgroupSet(
            quotient_group.degree,
            frozenset(
                project(x)
                for x in generated_subgroup(group.degree, _sl_perm_gens(2, 5)).raws
            ),
        )
        return _set_check(
            pset, sl_image, "image of SL", {"group_order": quotient_group.order()}
        )

    _run_check(
        records, "matrix", "gl25-mod-centre", "P(GL(2,5)/Z) is the image of SL(2,5)", gl25_quotient_fn
    )

    def tr2_fn():
        group = build("Tr2(3)")
        pset = _pseudocentre_of("Tr2(3)", group, cap)
        gens = [
            make.linear_perm(((1, 1), (0, 1)), 3),
            make.linear_perm(make.scalar_matrix(2, 3, 2), 3),
        ]
        expected = generated_subgroup(group.degree, gens)
        return _set_check(pset, expected, "Z x unitriangular part", {"group_order": 12})

    _run_check(records, "matrix", "tr2-3", "P(Tr2(3)) = Z x UT(2,3), order 6", tr2_fn)

    def affine_case(name, spec, build_affine, predicted):
        def fn():
            aff = build_affine()
            group = aff.group
            pset = _pseudocentre_of(spec, group, cap)
            desc, expected = predicted(aff)
            return _set_check(pset, expected, desc, {"group_order": group.order()})

        _run_check(records, "matrix", name, f"P({spec}) matches the affine theorem", fn)

    def sl_times_v(aff, n, p):
        gens = [make.affine_perm(m, tuple(0 for _ in range(n)), p) for m in make.sl_generator_matrices(n, p)]
        gens += list(aff.translations.generator_raws)
        return generated_subgroup(aff.group.degree, gens)

    affine_case(
        "asl25",
        "ASL(2,5)",
        lambda: make.affine_sl(2, 5),
        lambda aff: ("the whole group", aff.group.elements(cap)),
    )
    affine_case(
        "agl25",
        "AGL(2,5)",
        lambda: make.affine_gl(2, 5),
        lambda aff: ("SL x| V", sl_times_v(aff, 2, 5)),
    )
    affine_case(
        "agl22",
        "AGL(2,2)",
        lambda: make.affine_gl(2, 2),
        lambda aff: (
            "Alt-part x| V",
            generated_subgroup(
                aff.group.degree,
                list(derived_subgroup(aff.linear).generator_raws)
                + list(aff.translations.generator_raws),
            ),
        ),
    )
    affine_case(
        "asl23",
        "ASL(2,3)",
        lambda: make.affine_sl(2, 3),
        lambda aff: (
            "O2(SL(2,3)) x| V",
            generated_subgroup(
                aff.group.degree,
                [x for x in aff.linear.elements(cap).raws if order_raw(x) == 4]
                + list(aff.translations.generator_raws),
            ),
        ),
    )
    affine_case(
        "agl23",
        "AGL(2,3)",
        lambda: make.affine_gl(2, 3),
        lambda aff: ("SL x| V", sl_times_v(aff, 2, 3)),
    )


# -- mclain (unitriangular) suite ----------------------------------------------------


def _mclain_checks(records, cap):
    cases = [(n, 2) for n in range(2, 7)] + [(n, 3) for n in range(2, 6)]
    for n, p in cases:
        def fn(n=n, p=p):
            group = build(f"UT({n},{p})")
            pset = _pseudocentre_of(f"UT({n},{p})", group, cap)
            terms = upper_central_series(group, cap)
            rho = n // 2
            target = terms[min(rho, len(terms) - 1)]
            result = _set_check(pset, target, f"Z_{rho}", {"group_order": group.order()})
            return result

        _run_check(
            records,
            "mclain",
            f"ut-{n}-{p}",
            f"P(UT({n},{p})) is the central-series term Z_{n // 2}",
            fn,
        )


# -- fib (number theory) suite ---------------------------------------------------------


def _random_unimodular(rng):
    m = nt.mat2_identity()
    for _ in range(rng.randrange(1, 6)):
        a = rng.randrange(-5, 6)
        if rng.randrange(2):
            m = nt.mat2_mul(m, (1, a, 0, 1))
        else:
            m = nt.mat2_mul(m, (1, 0, a, 1))
    return m


def _fib_checks(records, cap):
    def damettere_fn():
        failures = []
        for t in range(2, 6):
            for m in range(0, 26):
                if nt.damettere_witness(t, m) is None:
                    failures.append((t, m))
        ok = not failures
        return (
            ok,
            "a witness N in (M, M+10] with D(N) > T^2 for every T in 2..5, M <= 25",
            "all found" if ok else f"missing for {failures[:5]}",
            {},
        )

    _run_check(
        records,
        "fib",
        "determinant-growth",
        "the Fibonacci determinant D(N) exceeds T^2 within ten steps of every start",
        damettere_fn,
    )

    def cheb_trace_fn():
        rng = random.Random(20240517)
        bad = 0
        for _ in range(100):
            m = _random_unimodular(rng)
            n = rng.randrange(0, 21)
            a, b = nt.cheb_trace(m, n)
            if a != b:
                bad += 1
        return bad == 0, "matrix power and recurrence agree on 100 trials", f"{bad} mismatches", {}

    _run_check(records, "fib", "cheb-trace", "trace recurrence matches matrix powers", cheb_trace_fn)

    def cheb_power_fn():
        rng = random.Random(987654321)
        bad = 0
        for _ in range(100):
            m = _random_unimodular(rng)
            n = rng.randrange(1, 21)
            a, b = nt.cheb_power(m, n)
            if a != b:
                bad += 1
        for p in (2, 3, 5, 7, 11):
            for _ in range(10):
                m = tuple(v % p for v in _random_unimodular(rng))
                for n in range(1, 15):
                    a, b = nt.cheb_power(m, n, mod=p)
                    if a != b:
                        bad += 1
        return bad == 0, "identity holds over Z and mod p", f"{bad} mismatches", {}

    _run_check(
        records,
        "fib",
        "cheb-power",
        "second-kind recurrence reconstructs matrix powers (integers and mod p)",
        cheb_power_fn,
    )

    def remark_fn():
        witnesses = nt.remark_scan(10_000)
        found = ", ".join(str(w.p) for w in witnesses) if witnesses else "none"
        return (
            True,
            "scan completes; witness existence stays open",
            f"witnesses up to 10000: {found}",
            {},
        )

    _run_check(
        records,
        "fib",
        "residue-scan",
        "scan primes to 10^4 for f(p^2) = 1 and f(p^2 - 1) = 0 mod p^2 (report only)",
        remark_fn,
    )

    def remark5_fn():
        r = nt.remark_condition(5)
        return (
            not r.holds and r.fib_p2_mod == 0,
            "p = 5 fails with f(25) = 0 mod 25",
            f"holds={r.holds}, f(25) mod 25 = {r.fib_p2_mod}",
            {},
        )

    _run_check(records, "fib", "residue-p5", "p = 5 is not a witness", remark5_fn)


# -- properties suite ---------------------------------------------------------------

_PROPERTY_ORDER_LIMIT = 2000


def _properties_corpus(cap):
    for spec, group in corpus():
        if group.order() <= _PROPERTY_ORDER_LIMIT:
            yield spec, group


def _normal_pool(spec, group, cap):
    """Sample of normal subgroups: class closures plus Z, G', P."""
    pool = {}
    reps, _ = group.class_partition(cap)
    ident = group.identity_raw
    for rep in reps:
        if rep == ident:
            continue
        closed = normal_closure_group(group, None, seed_gens=[rep])
        raws = closed.elements(cap).raws
        pool[raws] = SubgroupSet(group.degree, raws)
    for extra in (
        center(group, cap),
        derived_subgroup(group).elements(cap),
        _pseudocentre_of(spec, group, cap),
    ):
        pool[extra.raws] = extra
    return list(pool.values())


def _squarefree(n):
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def _property_oracle(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            fast = _pseudocentre_of(spec, group, cap)
            naive = pseudocentre_naive(group, max(group.order(), 1))
            if fast != naive:
                bad.append(spec)
        return (
            not bad,
            "class-representative pseudocentre equals the all-elements intersection",
            "agreement on all corpus groups" if not bad else f"disagreement: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "oracle-agreement",
        "optimized pseudocentre matches the literal definition on every corpus group",
        fn,
    )


def _property_sandwich(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            pset = _pseudocentre_of(spec, group, cap)
            z = center(group, cap)
            if not (z.raws <= pset.raws <= group.elements(cap).raws):
                bad.append(spec)
            elif not is_normal(group, pset):
                bad.append(spec + " (not normal)")
            elif group.order() > 1 and pset.order == 1:
                bad.append(spec + " (trivial P)")
            elif not _divides(pset.order, group.order()) or not _divides(z.order, pset.order):
                bad.append(spec + " (Lagrange)")
        return (
            not bad,
            "Z <= P <= G, P normal and nontrivial, orders divide",
            "holds everywhere" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "centre-sandwich",
        "the pseudocentre sits normally between the centre and the group",
        fn,
    )


def _divides(a, b):
    return a != 0 and b % a == 0


def _property_minimal_normals(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            pset = _pseudocentre_of(spec, group, cap)
            for minimal in minimal_normal_subgroups(group, cap):
                if not minimal.raws <= pset.raws:
                    bad.append(spec)
                    break
        return (
            not bad,
            "every minimal normal subgroup lies inside P",
            "holds everywhere" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "minimal-normals",
        "minimal normal subgroups are contained in the pseudocentre",
        fn,
    )


def _property_direct_products(records, cap):
    pairs = (
        ("S(3)", "C(4)"),
        ("A(4)", "C(3)"),
        ("D(8)", "S(3)"),
        ("Q(8)", "C(5)"),
        ("S(4)", "A(4)"),
        ("GL(2,3)", "C(2)"),
    )

    def fn():
        bad = []
        for left_spec, right_spec in pairs:
            a = build(left_spec)
            b = build(right_spec)
            product = make.direct_product(a, b)
            left, right = make.direct_embeddings(a, b)
            pa = pseudocentre(a, cap)
            pb = pseudocentre(b, cap)
            expected = frozenset(
                compose_raw(left(x), right(y)) for x in pa.raws for y in pb.raws
            )
            got = pseudocentre(product, cap)
            if got.raws != expected:
                bad.append(f"{left_spec} x {right_spec}")
        return (
            not bad,
            "P(A x B) = P(A) x P(B) under the canonical embeddings",
            "holds on all sampled pairs" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "direct-products",
        "the pseudocentre of a direct product is the product of pseudocentres",
        fn,
    )


def _property_quotients(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            if group.order() > 600:
                continue  # quotient sweep over the sampled normal pool
            pset = _pseudocentre_of(spec, group, cap)
            for normal in _normal_pool(spec, group, cap):
                quotient_group, project, _ = quotient(group, normal, cap)
                p_quotient = pseudocentre(quotient_group, cap)
                image = frozenset(project(x) for x in pset.raws)
                if not image <= p_quotient.raws:
                    bad.append(f"{spec} mod order-{normal.order}")
                    break
        return (
            not bad,
            "the image of P(G) in G/N lies inside P(G/N)",
            "holds everywhere sampled" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "quotient-monotone",
        "pseudocentres project into pseudocentres of quotients",
        fn,
    )


def _property_derived(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            pset = _pseudocentre_of(spec, group, cap)
            second = derived_subgroup(derived_subgroup(group))
            p_group = pset.as_group()
            p_derived = derived_subgroup(p_group)
            if not all(second.contains(x) for x in p_derived.generator_raws):
                bad.append(spec + " (P' not in G'')")
                continue
            terms = upper_central_series(group, cap)
            z2 = terms[min(2, len(terms) - 1)]
            p_gens = p_group.generator_raws
            if not all(commutes_raw(a, b) for a in z2.raws for b in p_gens):
                bad.append(spec + " ([Z2, P] != 1)")
        return (
            not bad,
            "P(G)' <= G'' and [Z_2(G), P(G)] = 1",
            "holds everywhere" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "derived-bounds",
        "commutator constraints tie P to the derived series",
        fn,
    )


def _property_soluble(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            pset = _pseudocentre_of(spec, group, cap)
            if pset.order == group.order() and is_soluble(group) and not is_abelian(group):
                bad.append(spec)
        return (
            not bad,
            "a soluble group equal to its pseudocentre is abelian",
            "holds everywhere" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "soluble-abelian",
        "soluble + pseudocentral implies abelian",
        fn,
    )


def _property_central_supplement(records, cap):
    cases = (("S(3)", 4), ("D(8)", 3), ("A(4)", 2), ("Q(8)", 9), ("GL(2,3)", 5))

    def fn():
        bad = []
        for spec, k in cases:
            h = build(spec)
            z = make.cyclic(k)
            product = make.direct_product(h, z)
            left, right = make.direct_embeddings(h, z)
            ph = pseudocentre(h, cap)
            z_elems = z.elements(cap)
            expected = frozenset(
                compose_raw(left(x), right(y)) for x in ph.raws for y in z_elems.raws
            )
            got = pseudocentre(product, cap)
            if got.raws != expected:
                bad.append(f"{spec} * C({k})")
        return (
            not bad,
            "P(H Z) = P(H) Z for a central factor Z",
            "holds on all samples" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "central-supplement",
        "a central supplement pulls out of the pseudocentre",
        fn,
    )


def _property_class2(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            ncls = nilpotency_class(group, cap)
            if ncls is not None and ncls <= 2:
                pset = _pseudocentre_of(spec, group, cap)
                if pset.raws != center(group, cap).raws:
                    bad.append(spec)
        return (
            not bad,
            "nilpotency class <= 2 forces P = Z",
            "holds everywhere" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "class-two",
        "class-2 nilpotent groups have pseudocentre equal to the centre",
        fn,
    )


def _property_abelian_power(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            if group.order() > 600:
                continue
            elems = group.elements(cap)
            reps, _ = group.class_partition(cap)
            abelian_normals = [
                s for s in _normal_pool(spec, group, cap) if len(s) > 1 and is_abelian(s)
            ]
            for a_set in abelian_normals:
                a_raws = a_set.raws
                cent = frozenset(
                    x for x in elems.raws if all(commutes_raw(x, a) for a in a_set.as_group().generator_raws)
                )
                for g in reps:
                    n = 1
                    powered = g
                    while powered not in cent:
                        powered = compose_raw(powered, g)
                        n += 1
                    closure = normal_closure(group, centralizer_set(group, g, cap), cap)
                    target = frozenset(power_raw(a, n) for a in a_raws)
                    if not target <= closure.raws:
                        bad.append(f"{spec} (order-{len(a_raws)} abelian normal)")
                        break
                if bad and bad[-1].startswith(spec):
                    break
        return (
            not bad,
            "A^n <= closed centralizer of g when g has order n modulo C_G(A)",
            "holds everywhere sampled" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "abelian-powers",
        "powers of abelian normal subgroups land in closed centralizers",
        fn,
    )


def centralizer_set(group, g_raw, cap=None):
    """Centralizer as a SubgroupSet, for raws already known to lie in the group."""
    elems = group.elements(cap)
    return SubgroupSet(group.degree, frozenset(x for x in elems.raws if commutes_raw(x, g_raw)))


def _property_squarefree(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            if _squarefree(group.order()):
                pset = _pseudocentre_of(spec, group, cap)
                if not is_cyclic(pset):
                    bad.append(spec)
        return (
            not bad,
            "square-free order forces a cyclic pseudocentre",
            "holds everywhere" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "squarefree-cyclic",
        "groups of square-free order have cyclic pseudocentres",
        fn,
    )


def _property_relabeling(records, cap):
    def fn():
        rng = random.Random(424242)
        bad = []
        samples = [(s, g) for s, g in _properties_corpus(cap) if g.order() <= 400][:10]
        for spec, group in samples:
            degree = group.degree
            images = list(range(degree))
            rng.shuffle(images)
            x = bytes(images) if degree <= 256 else tuple(images)
            conjugated = PermGroup(degree, [conjugate_raw(g, x) for g in group.generator_raws])
            p_conj = pseudocentre(conjugated, cap)
            p_orig = _pseudocentre_of(spec, group, cap)
            expected = frozenset(conjugate_raw(e, x) for e in p_orig.raws)
            if p_conj.raws != expected:
                bad.append(spec)
        return (
            not bad,
            "P(G^x) = P(G)^x for relabelled copies",
            "holds on all samples" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "relabeling",
        "pseudocentres transform covariantly under relabelling the points",
        fn,
    )


def _property_closed_centralizer_classes(records, cap):
    def fn():
        bad = []
        for spec, group in _properties_corpus(cap):
            if group.order() > 300:
                continue
            reps, _ = group.class_partition(cap)
            for rep in reps:
                base = normal_closure(group, centralizer_set(group, rep, cap), cap)
                for x in group.generator_raws:
                    conj = conjugate_raw(rep, x)
                    other = normal_closure(group, centralizer_set(group, conj, cap), cap)
                    if base.raws != other.raws:
                        bad.append(spec)
                        break
                if bad and bad[-1] == spec:
                    break
        return (
            not bad,
            "closed centralizers are constant on conjugacy classes",
            "holds everywhere sampled" if not bad else f"violations: {bad}",
            {},
        )

    _run_check(
        records,
        "properties",
        "class-invariance",
        "normal closures of centralizers agree across a conjugacy class",
        fn,
    )


def _properties_checks(records, cap):
    _property_oracle(records, cap)
    _property_sandwich(records, cap)
    _property_minimal_normals(records, cap)
    _property_direct_products(records, cap)
    _property_quotients(records, cap)
    _property_derived(records, cap)
    _property_soluble(records, cap)
    _property_central_supplement(records, cap)
    _property_class2(records, cap)
    _property_abelian_power(records, cap)
    _property_squarefree(records, cap)
    _property_relabeling(records, cap)
    _property_closed_centralizer_classes(records, cap)


# -- suite driver -----------------------------------------------------------------

_SUITE_RUNNERS = {
    "core": _core_checks,
    "wreath": _wreath_checks,
    "matrix": _matrix_checks,
    "mclain": _mclain_checks,
    "fib": _fib_checks,
    "properties": _properties_checks,
}


def run_suite(name, cap=None):
    """Run one named suite, or 'all'."""
    if name == "all":
        result = SuiteResult("all")
        for suite in SUITE_NAMES:
            runner = _SUITE_RUNNERS[suite]
            runner(result.records, cap)
        return result
    runner = _SUITE_RUNNERS.get(name)
    if runner is None:
        valid = ", ".join(SUITE_NAMES + ("all",))
        raise ValueError(f"unknown suite {name!r}; valid names: {valid}")
    result = SuiteResult(name)
    runner(result.records, cap)
    return result
