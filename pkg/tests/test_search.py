"""Curve sweeps, witness search, and the class census."""

import json
from math import isqrt

import pytest

from hasseforms import (
    InconsistencyError,
    admissible_traces,
    census,
    describe_witness,
    find_curve_with_class,
    hasse_invariant,
    iter_curves,
    make_field,
    point_count,
    realizable_set,
)
from hasseforms.curve import WeierstrassCurve, discriminant_general
from hasseforms.search import resolve_workers


def test_admissible_traces_frozen():
    assert admissible_traces(361, 9) == {-29, -10, 9, 28}
    assert admissible_traces(19, 9) == frozenset()
    assert admissible_traces(19, 2) == {2}
    assert admissible_traces(5, 1) == {1, -4}


def test_admissible_traces_matches_interval_scan():
    for q, p in ((19, 19), (361, 19), (25, 5), (27, 3)):
        bound = isqrt(4 * q - 1)
        for h in range(1, p):
            brute = {b for b in range(-bound, bound + 1) if b and b % p == h % p}
            assert admissible_traces(q, h, p=p) == brute


def test_admissible_traces_rejects_divisible_residue():
    with pytest.raises(ValueError):
        admissible_traces(19, 19)
    with pytest.raises(ValueError):
        admissible_traces(361, 38, p=19)


def test_iter_curves_counts_and_order():
    ctx5 = make_field(5)
    curves = list(iter_curves(ctx5))
    assert len(curves) == 20
    assert repr(curves[0]) == "WeierstrassCurve(y^2 = x^3 + 1 over F_5)"
    assert repr(curves[1]) == "WeierstrassCurve(y^2 = x^3 + 2 over F_5)"
    brute = sum(
        1
        for a4 in ctx5.iter_elements()
        for a6 in ctx5.iter_elements()
        if discriminant_general(ctx5.zero, a4, a6)
    )
    assert len(curves) == brute

    ctx3 = make_field(3)
    assert len(list(iter_curves(ctx3))) == 18  # a2 models included


def test_find_curve_with_class_frozen():
    ctx = make_field(5)
    w1 = find_curve_with_class(ctx, 1)
    assert repr(w1) == "WeierstrassCurve(y^2 = x^3 + 3*x over F_5)"
    w2 = find_curve_with_class(ctx, 2)
    assert repr(w2) == "WeierstrassCurve(y^2 = x^3 + x over F_5)"


def test_find_curve_with_class_missing_residues():
    ctx = make_field(19)
    assert find_curve_with_class(ctx, 9) is None
    assert find_curve_with_class(ctx, 9, use_trace_shortcut=False) is None
    for h in (1, 5, 18):
        fast = find_curve_with_class(ctx, h)
        slow = find_curve_with_class(ctx, h, use_trace_shortcut=False)
        assert repr(fast) == repr(slow)


def test_find_curve_with_class_validates_residue():
    ctx = make_field(5)
    for bad in (0, 5, -1, 7):
        with pytest.raises(ValueError):
            find_curve_with_class(ctx, bad)


def test_describe_witness_roundtrip():
    ctx = make_field(5)
    e = WeierstrassCurve(ctx, ctx(1), ctx(1))
    record = describe_witness(e, 2)
    assert record.to_dict() == {
        "a2": [0], "a4": [1], "a6": [1],
        "count": 9, "beta": -3, "class_exp": 1, "phi": 2,
    }


def test_describe_witness_rejects_mismatch():
    ctx = make_field(5)
    e = WeierstrassCurve(ctx, ctx(1), ctx(1))  # class residue 2
    with pytest.raises(InconsistencyError):
        describe_witness(e, 1)
    ss = WeierstrassCurve(ctx, ctx(0), ctx(1))
    with pytest.raises(InconsistencyError):
        describe_witness(ss, 1)


def test_census_complete_field():
    report = census(make_field(13))
    assert report.verdict == "complete"
    assert report.missing == ()
    assert report.realizable == tuple(range(1, 13))
    assert [e.residue for e in report.entries] == list(range(1, 13))
    for entry in report.entries:
        assert entry.realizable and entry.witness is not None
        assert entry.witness.phi == entry.residue
        assert entry.witness.beta % 13 == entry.residue


def test_census_gap_field():
    report = census(make_field(19))
    assert report.verdict == "proper-subset"
    assert report.missing == (9, 10)
    for entry in report.entries:
        assert entry.realizable == (entry.residue not in (9, 10))
    assert set(report.realizable) == realizable_set(19)


def test_census_extension_field():
    report = census(make_field(3, 2))
    assert report.verdict == "complete"
    assert report.q == 9 and report.modulus == (1, 0, 1)
    payload = json.dumps(report.to_dict())
    assert json.loads(payload)["verdict"] == "complete"


def test_census_matches_per_class_search():
    ctx = make_field(11)
    report = census(ctx)
    for entry in report.entries:
        expected = find_curve_with_class(ctx, entry.residue)
        w = entry.witness
        # the witness records coefficients as little-endian tuples
        assert (ctx(tuple(w.a4)), ctx(tuple(w.a6))) == (expected.a4, expected.a6)


def test_census_serial_parallel_identical():
    ctx = make_field(23)
    serial = census(ctx, workers=1)
    parallel = census(ctx, workers=4)
    assert json.dumps(serial.to_dict(), sort_keys=True) == json.dumps(
        parallel.to_dict(), sort_keys=True)


@pytest.mark.parametrize("p", [3, 7, 19, 23])
def test_census_consistency_against_curve_sweep(p):
    # independent route: collect beta residues from a full sweep and
    # compare with what the census reports as realizable
    ctx = make_field(p)
    seen = set()
    for curve in iter_curves(ctx):
        if hasse_invariant(curve):
            seen.add(point_count(curve).beta % p)
    report = census(ctx)
    assert set(report.realizable) == seen
    assert seen == realizable_set(p)


def test_sweeps_guarded_on_oversized_fields():
    from hasseforms.errors import FieldTooLargeError

    big = make_field(1048583)
    with pytest.raises(FieldTooLargeError):
        census(big)
    with pytest.raises(FieldTooLargeError):
        find_curve_with_class(big, 1)


def test_resolve_workers_defaults(monkeypatch):
    monkeypatch.delenv("HASSE_FORMS_THREADS", raising=False)
    assert resolve_workers() == 1
    assert resolve_workers(6) == 6


def test_resolve_workers_env_cap(monkeypatch):
    monkeypatch.setenv("HASSE_FORMS_THREADS", "2")
    assert resolve_workers() == 2
    assert resolve_workers(8) == 2
    assert resolve_workers(1) == 1


def test_resolve_workers_rejects_bad_values(monkeypatch):
    monkeypatch.setenv("HASSE_FORMS_THREADS", "zero")
    with pytest.raises(ValueError):
        resolve_workers()
    monkeypatch.setenv("HASSE_FORMS_THREADS", "0")
    with pytest.raises(ValueError):
        resolve_workers()
    monkeypatch.delenv("HASSE_FORMS_THREADS")
    with pytest.raises(ValueError):
        resolve_workers(0)
