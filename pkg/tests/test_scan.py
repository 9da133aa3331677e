import math

import pytest

from nu_lgi.errors import InvalidArgumentError, RejectedCoefficientsError, ScanRowError
from nu_lgi.leggett_garg import delta_k3
from nu_lgi.model import KossakowskiCoefficients, OscillationParams
from nu_lgi.scan import (
    GridSpec,
    ScanBase,
    ScanRow,
    ScanSpec,
    argmax_abs_delta,
    argmax_k3,
    correlation_scan,
    refine_argmax,
    run_scan,
    run_scan_2d,
    summarize,
    surface_argmax,
)


def make_base(**changes):
    params = OscillationParams(theta=0.187 * math.pi, dm2=7.54e-5, energy=1.0, v_cc=2.0, phi=math.pi / 4)
    coefficients = KossakowskiCoefficients.with_coupling(0.1)
    base = dict(params=params, coefficients=coefficients, tau=0.1)
    base.update(changes)
    return ScanBase(**base)


def make_row(value, delta, k3_majorana=0.9):
    return ScanRow(
        param_value=value,
        k3_dirac=k3_majorana + delta,
        k3_majorana=k3_majorana,
        delta_k3=delta,
        violated_dirac=False,
        violated_majorana=False,
        phi=0.0,
    )


def test_grid_points_are_closed_and_uniform():
    grid = GridSpec(0.0, 1.0, 5)
    assert grid.points() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert grid.step == 0.25
    assert GridSpec(0.0, 2 * math.pi, 65).points()[-1] == 2 * math.pi
    assert GridSpec.parse("0.1:10:200").format() == "0.1:10.0:200"


@pytest.mark.parametrize("start, stop, count", [(0.0, 1.0, 1), (1.0, 1.0, 3), (2.0, 1.0, 3), (0.0, math.nan, 3)])
def test_degenerate_grids_are_rejected(start, stop, count):
    with pytest.raises(InvalidArgumentError):
        GridSpec(start, stop, count)


def test_grid_parse_errors():
    for text in ("0:1", "a:1:3", "0:1:2.5"):
        with pytest.raises(InvalidArgumentError):
            GridSpec.parse(text)


def test_spec_validation():
    grid = GridSpec(0.0, 1.0, 3)
    with pytest.raises(InvalidArgumentError):
        ScanSpec("phi", grid, phi_envelope=True)
    with pytest.raises(InvalidArgumentError):
        ScanSpec("mass", grid)  # type: ignore[arg-type]
    with pytest.raises(InvalidArgumentError):
        ScanSpec("v_cc", grid, workers=0)
    assert ScanSpec("v_cc", grid).objective == "abs_delta"
    assert ScanSpec("v_cc", grid, mode="k3_pair").objective == "k3"


def test_phase_scan_rows_follow_the_grid():
    spec = ScanSpec("phi", GridSpec(0.0, 2 * math.pi, 9), base=make_base())
    result = run_scan(spec)
    assert result.param_values == spec.grid.points()
    for row in result.rows:
        assert row.phi == row.param_value
        assert row.delta_k3 == row.k3_dirac - row.k3_majorana
        expected = delta_k3(make_base().params.with_phi(row.param_value), make_base().coefficients, 0.1)
        assert row.delta_k3 == pytest.approx(expected, abs=1e-15)
    assert result.rows[0].delta_k3 == 0.0


def test_worker_count_does_not_change_results():
    grid = GridSpec(0.1, 10.0, 12)
    serial = run_scan(ScanSpec("v_cc", grid, base=make_base()))
    threaded = run_scan(ScanSpec("v_cc", grid, base=make_base(), workers=4))
    assert serial.rows == threaded.rows
    assert serial.argmax_abs_delta == threaded.argmax_abs_delta


def test_envelope_stores_the_chosen_phase():
    spec = ScanSpec("v_cc", GridSpec(1.0, 3.0, 3), base=make_base(), phi_envelope=True, envelope_count=16)
    result = run_scan(spec)
    grid_phases = [2 * math.pi * i / 16 for i in range(16)]
    for row in result.rows:
        assert row.phi in grid_phases
        assert abs(row.delta_k3) > 0.0


def test_correlation_scan_columns_recompute_k3():
    spec = ScanSpec("v_cc", GridSpec(0.5, 5.0, 6), base=make_base())
    result = correlation_scan(spec)
    assert result.correlators
    for row in result.rows:
        assert row.c21 + row.c32 - row.c31 == pytest.approx(row.k3_majorana, abs=1e-14)
        dirac = (row.c21 + row.dc21) + (row.c32 + row.dc32) - (row.c31 + row.dc31)
        assert dirac == pytest.approx(row.k3_dirac, abs=1e-14)


def test_failing_row_reports_its_coordinates():
    spec = ScanSpec("c12", GridSpec(0.0, 0.3, 4), base=make_base())
    with pytest.raises(ScanRowError) as info:
        run_scan(spec)
    (name, value), = info.value.coordinates
    assert name == "c12"
    assert value == pytest.approx(0.2)
    assert isinstance(info.value.cause, RejectedCoefficientsError)


def test_two_dimensional_scan_is_outer_major():
    outer = ScanSpec("v_cc", GridSpec(1.0, 2.0, 3), base=make_base())
    inner = ScanSpec("phi", GridSpec(0.0, math.pi, 5), base=make_base())
    results = run_scan_2d(outer, inner)
    assert [r.outer for r in results] == [("v_cc", 1.0), ("v_cc", 1.5), ("v_cc", 2.0)]
    assert all(len(r.rows) == 5 for r in results)
    assert results[1].spec.base.params.v_cc == 1.5
    with pytest.raises(InvalidArgumentError):
        run_scan_2d(outer, outer)


def test_two_dimensional_failure_carries_both_coordinates():
    outer = ScanSpec("c12", GridSpec(0.0, 0.3, 4), base=make_base())
    inner = ScanSpec("phi", GridSpec(0.0, math.pi, 3), base=make_base())
    with pytest.raises(ScanRowError) as info:
        run_scan_2d(outer, inner)
    names = [name for name, _ in info.value.coordinates]
    assert names == ["c12", "phi"]


def test_argmax_ties_keep_the_first_row():
    rows = [make_row(0.0, 0.1), make_row(1.0, -0.3), make_row(2.0, 0.3)]
    best = argmax_abs_delta(rows)
    assert (best.param_value, best.value) == (1.0, 0.3)
    assert argmax_k3(rows).param_value == 0.0
    assert argmax_abs_delta([]) is None
    summary = summarize(rows)
    assert summary["rows"] == 3
    assert summary["argmax_abs_delta_param"] == 1.0
    assert summary["violations_majorana"] == 0


def test_refinement_never_loses_to_the_grid():
    spec = ScanSpec("phi", GridSpec(0.0, math.pi, 7), base=make_base())
    result = run_scan(spec)
    refined = refine_argmax(spec, result)
    assert refined.value >= result.argmax_abs_delta.value
    step = spec.grid.step
    assert abs(refined.param_value - result.argmax_abs_delta.param_value) <= step + 1e-12


def test_surface_argmax_over_k3():
    outer = ScanSpec("v_cc", GridSpec(1.0, 3.0, 3), base=make_base(), mode="k3_pair")
    inner = ScanSpec("phi", GridSpec(0.0, math.pi, 4), base=make_base(), mode="k3_pair")
    results = run_scan_2d(outer, inner)
    best = surface_argmax(results, "k3")
    every = [row.k3_majorana for r in results for row in r.rows]
    assert best.value == max(every)
    assert best.outer in (1.0, 2.0, 3.0)


def _surface_rows(results):
    rows = []
    for result in results:
        name, value = result.outer
        for row in result.rows:
            coordinates = {name: value, result.spec.parameter: row.param_value}
            rows.append((coordinates["v_cc"], coordinates["phi"], row.k3_dirac, row.k3_majorana, row.delta_k3))
    return sorted(rows)


def test_transposed_surface_has_the_same_rows():
    v_cc = ScanSpec("v_cc", GridSpec(1.0, 3.0, 3), base=make_base())
    phi = ScanSpec("phi", GridSpec(0.0, math.pi, 4), base=make_base())
    forward = _surface_rows(run_scan_2d(v_cc, phi))
    backward = _surface_rows(run_scan_2d(phi, v_cc))
    assert len(forward) == len(backward) == 12
    for left, right in zip(forward, backward):
        assert left[:2] == right[:2]
        assert left[2:] == pytest.approx(right[2:], abs=1e-14)


def test_surface_without_matter_or_dissipation_saturates_k3():
    base = make_base(
        params=make_base().params.replace(v_cc=0.0),
        coefficients=KossakowskiCoefficients(),
    )
    outer = ScanSpec("phi", GridSpec(0.0, math.pi, 2), base=base)
    inner = ScanSpec("tau", GridSpec(0.1, 0.5, 2), base=base)
    results = run_scan_2d(outer, inner)
    rows = [row for result in results for row in result.rows]
    assert len(rows) == 4
    for row in rows:
        assert row.k3_dirac == pytest.approx(1.0, abs=1e-14)
        assert row.k3_majorana == pytest.approx(1.0, abs=1e-14)


def test_correlators_without_matter_stay_at_one():
    base = make_base(coefficients=KossakowskiCoefficients())
    result = correlation_scan(ScanSpec("v_cc", GridSpec(0.0, 2.0, 3), base=base))
    row = result.rows[0]
    assert row.param_value == 0.0
    assert (row.c21, row.c32, row.c31) == pytest.approx((1.0, 1.0, 1.0), abs=1e-14)
    assert (row.dc21, row.dc32, row.dc31) == pytest.approx((0.0, 0.0, 0.0), abs=1e-14)


def test_diagonal_damping_leaves_no_correlator_difference():
    base = make_base(coefficients=KossakowskiCoefficients(c11=0.1, c22=0.1, c33=0.1))
    result = correlation_scan(ScanSpec("v_cc", GridSpec(0.5, 10.0, 8), base=base))
    for row in result.rows:
        assert max(abs(row.dc21), abs(row.dc32), abs(row.dc31)) <= 1e-12
        assert abs(row.delta_k3) <= 1e-12
