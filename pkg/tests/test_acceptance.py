"""Acceptance criteria, one test per criterion, exact equalities throughout.

Run with ``python -m pytest tests/test_acceptance.py -v -s`` to see one
PASS line per criterion.  The named suites are executed once per session
and shared across criteria; stated time bounds are asserted from the
recorded per-check timings.
"""

import pytest

from pgt import constructors as make
from pgt import harness
from pgt.groups import is_perfect, minimal_normal_subgroups
from pgt.pseudo import pseudocentre


@pytest.fixture(scope="module")
def suites():
    results = {}
    for name in ("core", "wreath", "matrix", "mclain", "fib", "properties"):
        results[name] = harness.run_suite(name)
    return results


def _records(suites, suite, prefix=""):
    return {
        r.check_id: r
        for r in suites[suite].records
        if r.check_id.startswith(prefix)
    }


def _assert_passed(record, bound_ms=None):
    assert record is not None
    assert record.status == "pass", f"{record.check_id}: {record.expected} vs {record.computed} {record.detail}"
    if bound_ms is not None:
        assert record.ms < bound_ms, f"{record.check_id} took {record.ms:.0f} ms"


def _announce(number, text):
    print(f"CRITERION {number:>2} PASS: {text}")


def test_criterion_01_symmetric_groups(suites):
    for n in range(3, 8):
        _assert_passed(_records(suites, "core")[f"sym-{n}"])
    _assert_passed(_records(suites, "core")["sym-7"], bound_ms=30_000)
    _announce(1, "P(Sym(n)) = Alt(n) for n = 3..7; n = 7 under 30 s")


def test_criterion_02_alt4(suites):
    record = _records(suites, "core")["alt4"]
    _assert_passed(record)
    assert record.pseudocentre_order == 4
    _announce(2, "P(Alt(4)) is the Klein subgroup of order 4")


def test_criterion_03_dihedral_and_quaternion(suites):
    record = _records(suites, "core")["d8"]
    _assert_passed(record)
    assert record.pseudocentre_order == 2
    record = _records(suites, "core")["q8"]
    _assert_passed(record)
    assert record.pseudocentre_order == 2
    _announce(3, "P(D(8)) = Z(D(8)) and P(Q(8)) has order 2")


def test_criterion_04_gl23(suites):
    record = _records(suites, "matrix")["gl23"]
    _assert_passed(record)
    assert record.pseudocentre_order == 24
    record = _records(suites, "matrix")["sl23"]
    _assert_passed(record)
    assert record.pseudocentre_order == 8
    _announce(4, "P(GL(2,3)) = SL(2,3) and P(SL(2,3)) = its order-8 normal 2-subgroup")


def test_criterion_05_gl25_family(suites):
    record = _records(suites, "matrix")["gl25"]
    _assert_passed(record)
    assert record.pseudocentre_order == 240
    record = _records(suites, "matrix")["sl25"]
    _assert_passed(record)
    assert record.pseudocentre_order == 120
    record = _records(suites, "matrix")["gl32"]
    _assert_passed(record)
    assert record.pseudocentre_order == 168
    _announce(5, "P(GL(2,5)) = Z*SL order 240; P(SL(2,5)) = SL(2,5); P(GL(3,2)) = GL(3,2)")


def test_criterion_06_gl25_quotient(suites):
    record = _records(suites, "matrix")["gl25-mod-centre"]
    _assert_passed(record)
    assert record.pseudocentre_order == 60
    _announce(6, "P(GL(2,5)/Z) is the image of SL(2,5)")


def test_criterion_07_unitriangular(suites):
    expected_orders = {}
    for n in range(2, 7):
        expected_orders[(n, 2)] = 2 ** ((n // 2) * (n // 2 + 1) // 2)
    for n in range(2, 6):
        expected_orders[(n, 3)] = 3 ** ((n // 2) * (n // 2 + 1) // 2)
    for (n, p), want in expected_orders.items():
        record = _records(suites, "mclain")[f"ut-{n}-{p}"]
        _assert_passed(record)
        assert record.pseudocentre_order == want, (n, p)
    _announce(7, "P(UT(n,p)) = Z_{floor(n/2)} for p = 2, n = 2..6 and p = 3, n = 2..5")


def test_criterion_08_tr2(suites):
    record = _records(suites, "matrix")["tr2-3"]
    _assert_passed(record)
    assert record.pseudocentre_order == 6
    _announce(8, "P(Tr2(3)) = Z x UT(2,3), order 6")


def test_criterion_09_affine(suites):
    wanted = {"asl25": 3000, "agl25": 3000, "agl22": 12, "asl23": 72, "agl23": 216}
    for check_id, order in wanted.items():
        record = _records(suites, "matrix")[check_id]
        _assert_passed(record)
        assert record.pseudocentre_order == order, check_id
    _announce(9, "affine cases: ASL(2,5) whole (3000); AGL(2,5) -> SL x| V; "
                 "AGL(2,2) -> 12; ASL(2,3) -> 72; AGL(2,3) -> 216")


def test_criterion_10_wreath_alt(suites):
    records = _records(suites, "wreath")
    expectations = {
        "wr-alt-2-5": 1920,
        "wr-alt-2-7": 322560,
        "wr-alt-5-5": 625,
        "wr-alt-5-4": 625,
        "wr-alt-3-3": 9,
        "wr-alt-2-3": 8,
        "wr-alt-2-4": 32,
    }
    for check_id, order in expectations.items():
        record = records[check_id]
        _assert_passed(record)
        assert record.pseudocentre_order == order, check_id
    # (7,5) exceeds the default cap and must be skipped with the cap stated
    skip = records["wr-alt-7-5"]
    assert skip.status == "skip"
    assert "2016840" in skip.detail
    _announce(10, "C(p) wr Alt(n) case table incl. (2,7) -> G; (7,5) skipped at default cap "
                  "with (5,4) -> B as substitute")


def test_criterion_11_wreath_sym(suites):
    records = _records(suites, "wreath")
    expectations = {
        "wr-sym-2-3": 24,
        "wr-sym-2-4": 96,
        "wr-sym-3-3": 9,
        "wr-sym-5-3": 125,
    }
    for check_id, order in expectations.items():
        record = records[check_id]
        _assert_passed(record)
        assert record.pseudocentre_order == order, check_id
    _announce(11, "C(p) wr Sym(n) case table: (2,3) -> 24, (2,4) -> 96, (3,3) -> 9, (5,3) -> 125")


def test_criterion_12_perfect_semidirect(suites):
    record = _records(suites, "core")["sl25-f11"]
    _assert_passed(record)
    # the derived observation: P equals the minimal normal translation subgroup
    aff = make.sl25_on_f11sq()
    p = pseudocentre(aff.group)
    translations = aff.translations.elements()
    assert is_perfect(aff.group)
    assert p.raws <= translations.raws
    assert any(m.raws == translations.raws for m in minimal_normal_subgroups(aff.group))
    assert p.raws == translations.raws  # exact value, order 121
    _announce(12, "SL(2,5) x| F11^2 is perfect with P(G) = the order-121 translation subgroup")


def test_criterion_13_fibonacci_quotients(suites):
    record = _records(suites, "core")["fibq-2"]
    _assert_passed(record)
    assert record.group_order == 12 and record.pseudocentre_order == 4
    record = _records(suites, "core")["fibq-3"]
    _assert_passed(record)
    assert record.group_order == 72 and record.pseudocentre_order == 9
    _announce(13, "FibQ(2): order 12, |P| = 4, class 2; FibQ(3): order 72, |P| = 9, class 2")


def test_criterion_14_dihedral_series(suites):
    for k in (2, 3, 4):
        record = _records(suites, "core")[f"dihedral-class-{2 ** (k + 1)}"]
        _assert_passed(record)
    _announce(14, "D(2^(k+1)) has nilpotency class k but pseudonilpotent class 2, k = 2, 3, 4")


def test_criterion_15_iterated_wreath(suites):
    record = _records(suites, "core")["iterwr-2-2"]
    _assert_passed(record)
    record = _records(suites, "core")["iterwr-2-3"]
    _assert_passed(record, bound_ms=60_000)
    _announce(15, "iterated wreath towers: P_(n-1) proper for n = 2, 3; n = 3 under 60 s")


def test_criterion_16_aut_sym6(suites):
    record = _records(suites, "core")["aut-sym6"]
    _assert_passed(record, bound_ms=300_000)
    assert record.group_order == 1440
    assert record.pseudocentre_order == 360
    _announce(16, "Aut(Sym(6)) on 720 points: order 1440, P = inner Alt(6) of order 360, under 5 min")


def test_criterion_17_property_suites(suites):
    result = suites["properties"]
    assert result.failed == 0 and result.skipped == 0
    ids = {r.check_id for r in result.records}
    assert {
        "oracle-agreement",
        "centre-sandwich",
        "minimal-normals",
        "direct-products",
        "quotient-monotone",
        "derived-bounds",
        "soluble-abelian",
        "central-supplement",
        "class-two",
        "abelian-powers",
        "squarefree-cyclic",
        "relabeling",
        "class-invariance",
    } <= ids
    _announce(17, "all corpus invariants hold with zero violations (oracle = literal intersection)")


def test_criterion_18_number_theory(suites):
    result = suites["fib"]
    assert result.failed == 0
    records = _records(suites, "fib")
    for check_id in ("determinant-growth", "cheb-trace", "cheb-power", "residue-scan"):
        _assert_passed(records[check_id])
    # absence is the report, not a theorem: the scan passes by completing
    assert "none" in records["residue-scan"].computed
    _announce(18, "Fibonacci determinant growth, Chebyshev identities (100 trials), "
                  "residue scan to 10^4 reports no witness")


def test_criterion_19_out_of_scope_documented():
    readme = open("README.md").read()
    assert "Rubik" in readme
    assert "out of scope" in readme or "non-goal" in readme
    assert "Infinite" in readme or "infinite" in readme
    _announce(19, "Rubik's-cube-scale computations and infinite families documented as out of scope")
