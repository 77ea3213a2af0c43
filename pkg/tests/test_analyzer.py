import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnor_monodromy import Arrangement, build_graph, gen_braid, gen_named, generic_slice, rank2_flats
from milnor_monodromy.analyzer import (
    PROVED_ZERO,
    TRIVIAL,
    UNKNOWN,
    analyze,
    cdo_test,
    double_triple_check,
    eigen_order,
    graphic_check,
    local_system_test,
    modular_test,
    theorem1_check,
)
from milnor_monodromy.arrangement import SimpleGraph, REMARK311_EDGES
from milnor_monodromy.errors import InapplicableError, PreconditionError

from support import random_arrangement

PENCIL = Arrangement(3, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
TRIPLE_PLUS_LINE = Arrangement(3, ((1, 0, 0), (0, 1, 0), (1, -1, 0), (0, 0, 1)))


def ks_of_order(d, order):
    return [k for k in range(1, d) if eigen_order(d, k).order == order]


@pytest.mark.parametrize("d, k, order", [(12, 2, 6), (9, 3, 3), (9, 0, 1), (15, 5, 3), (10, 5, 2)])
def test_eigen_order(d, k, order):
    assert eigen_order(d, k).order == order


def test_eigen_order_range():
    with pytest.raises(PreconditionError):
        eigen_order(6, 6)
    with pytest.raises(PreconditionError):
        cdo_test(gen_braid(3), 0)


def test_cdo_ex37_witness_is_z():
    arr = gen_named("ex37")
    z = arr.index_of((0, 0, 1))
    for k in ks_of_order(9, 3):
        cert = cdo_test(arr, k)
        assert cert.witness == z
        assert [m for _, m, _ in cert.checks] == [4, 4]
        assert cert.replay(arr)


def test_cdo_braid3_slice_order_2():
    sliced, _ = generic_slice(gen_braid(3), seed=1)
    cert = cdo_test(sliced, 3)
    assert cert is not None and cert.witness == 0
    assert all(m == 3 for _, m, _ in cert.checks)


def test_cdo_ceva_order_3_fails():
    arr = gen_named("ceva")
    for k in ks_of_order(9, 3):
        assert cdo_test(arr, k) is None


def test_modular_examples():
    braid4 = gen_braid(4)
    for order in (2, 5):
        for k in ks_of_order(10, order):
            cert = modular_test(braid4, k)
            assert cert is not None and cert.p == order and cert.h1 == 0
            assert cert.replay(braid4)
    assert modular_test(gen_braid(4), 1) is None  # order 10
    ceva = gen_named("ceva")
    assert all(modular_test(ceva, k) is None for k in ks_of_order(9, 3))
    ex38 = gen_named("ex38")
    assert all(modular_test(ex38, k) is None for k in ks_of_order(12, 6))


def test_theorem1_table():
    r = theorem1_check(gen_braid(5))
    assert r.graph_connected and r.multiplicities_at_most_9 and r.d_not_divisible_by_6 and r.passed
    r = theorem1_check(gen_named("ex38"))
    assert r.graph_connected and r.multiplicities_at_most_9
    assert not r.third_condition and not r.passed
    r = theorem1_check(gen_named("ceva"))
    assert not r.graph_connected and not r.passed


def test_theorem1_witness_when_six_divides_d():
    # 12 lines: ex38 minus one sextuple-point line plus a general line
    arr = gen_named("ex38")
    rows = [h for h in arr.hyperplanes if h != (1, 0, 0)] + [(3, 5, 7)]
    r = theorem1_check(Arrangement(3, tuple(rows)))
    assert r.hyperplane_avoiding_6 is not None


def test_double_triple():
    r = double_triple_check(TRIPLE_PLUS_LINE)
    assert r.verdict and "single-triple-d-gt-3" in r.clauses
    assert TRIPLE_PLUS_LINE.label(r.line) in ("H0", "H1", "H2", "H3")
    assert TRIPLE_PLUS_LINE.hyperplanes[r.line] != (0, 0, 1)
    r = double_triple_check(PENCIL)
    assert not r.verdict and r.clauses == ()
    with pytest.raises(InapplicableError):
        double_triple_check(gen_named("ex37"))


def test_local_system():
    braid4 = gen_braid(4)
    cert = local_system_test(braid4, [1] * braid4.d, 2)
    assert cert is not None and cert.replay(braid4)
    assert local_system_test(PENCIL, [1, 1, 1], 3) is None
    with pytest.raises(PreconditionError):
        local_system_test(PENCIL, [3, 1, 1], 3)
    with pytest.raises(PreconditionError):
        local_system_test(PENCIL, [2, 2, 2], 3)
    with pytest.raises(PreconditionError):
        local_system_test(PENCIL, [1, 1, 1], 4)


def test_graphic_examples():
    path = SimpleGraph(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    assert graphic_check(path).h1["F3"] == 0
    rk = graphic_check(SimpleGraph(5, tuple((i - 1, j - 1) for i, j in REMARK311_EDGES)))
    assert not rk.arrangement_graph_connected and rk.vanishing_expected
    assert rk.h1 == {"F2": 0, "F3": 0, "Q": 0}
    tri = graphic_check(SimpleGraph(3, ((0, 1), (0, 2), (1, 2))))
    assert tri.h1["F3"] == 1 and not tri.vanishing_expected


def test_analyze_braid4():
    r = analyze(gen_braid(4))
    assert r.verdict == TRIVIAL and r.h1_fixed_dim == 9


def test_analyze_braid3_unknown_at_order_3():
    r = analyze(gen_braid(3))
    assert r.unknown_indices() == [2, 4]
    assert all(e.status == PROVED_ZERO for e in r.eigen if e.k not in (2, 4))


def test_analyze_ex37():
    arr = gen_named("ex37")
    r = analyze(arr)
    assert r.verdict == TRIVIAL
    for e in r.eigen:
        assert e.certificate.kind == "CDO"
        if e.order == 3:
            assert arr.label(e.certificate.witness) == "z"


def test_analyze_ex38_hints():
    r = analyze(gen_named("ex38"))
    assert r.unknown_indices() == ks_of_order(12, 6)
    for e in r.eigen:
        if e.status == UNKNOWN:
            assert "every-line-meets-order-divisible-flat" in e.hints
            assert "non-prime-power-order" in e.hints


def test_analyze_ex39_flags_product():
    r = analyze(gen_named("ex39"))
    unknown = [e for e in r.eigen if e.status == UNKNOWN]
    assert unknown and all("product-detected" in e.hints for e in unknown)


def test_report_json_is_deterministic():
    a = analyze(gen_named("ex39"), seed=4).to_json()
    b = analyze(gen_named("ex39"), seed=4).to_json()
    assert a == b


def _replay_all(arr, report):
    flats = rank2_flats(arr)
    for e in report.eigen:
        if e.certificate is not None:
            assert e.certificate.replay(arr, flats)


@pytest.mark.parametrize("name", ["ceva", "ex36", "ex37", "ex38", "ex39", "remark311"])
def test_certificates_replay_on_corpus(name):
    arr = gen_named(name)
    _replay_all(arr, analyze(arr))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 100_000))
def test_analyze_random_invariants(seed):
    arr = random_arrangement(random.Random(seed))
    report = analyze(arr)
    _replay_all(arr, report)
    assert report.h1_fixed_dim == arr.d - 1
    assert (report.verdict == TRIVIAL) == all(e.status == PROVED_ZERO for e in report.eigen)
    if theorem1_check(arr).passed:
        assert report.verdict == TRIVIAL


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 100_000))
def test_line_without_dense_points_settles_everything(seed):
    arr = random_arrangement(random.Random(seed))
    flats = rank2_flats(arr)
    free = [i for i in range(arr.d) if all(f.multiplicity == 2 for f in flats if i in f.members)]
    if not free:
        return
    for k in range(1, arr.d):
        assert cdo_test(arr, k, flats) is not None


@pytest.mark.parametrize("name, order", [("braid2", 3), ("braid3", 3), ("ceva", 3), ("ex36", 3)])
def test_known_nonvanishing_is_never_certified(name, order):
    arr = gen_braid(int(name[-1])) if name.startswith("braid") else gen_named(name)
    r = analyze(arr)
    for e in r.eigen:
        if e.order == order:
            assert e.status == UNKNOWN and e.certificate is None


@pytest.mark.parametrize("n", [4, 5])
def test_braid_trivial(n):
    assert analyze(gen_braid(n)).verdict == TRIVIAL


def test_graph_connected_implies_theorem_hypothesis_i():
    for name in ("ex38", "ex39"):
        assert build_graph(gen_named(name)).is_connected
