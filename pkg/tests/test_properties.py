"""Hypothesis property tests plus a smoke run of the seeded suites."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gausscone.core import (
    StandardFormParams,
    build_standard_cm,
    det_via_invariants,
    determinant,
    is_physical,
    local_invariants,
    partial_transpose,
    purity,
)
from gausscone.minkowski import (
    coordinates,
    interval_physical,
    interval_separability,
)
from gausscone.properties import PROPERTIES, run_all
from gausscone.states import apply_local, make_local_symplectic

# subnormal entries make LAPACK's det return NaN; physically they are 0
finite = dict(allow_subnormal=False)
params = st.builds(
    StandardFormParams,
    n1=st.floats(0.5, 3.0, **finite), n2=st.floats(0.5, 3.0, **finite),
    ms=st.floats(-2.0, 2.0, **finite), mc=st.floats(-2.0, 2.0, **finite))

angles = st.floats(0.0, 2 * np.pi)
squeezes = st.floats(0.0, 1.5)


@given(params)
def test_partial_transpose_involution(sp):
    v = build_standard_cm(sp)
    np.testing.assert_array_equal(
        partial_transpose(partial_transpose(v)).entries, v.entries)


@given(params)
def test_invariant_map_under_partial_transpose(sp):
    a = local_invariants(build_standard_cm(sp))
    b = local_invariants(partial_transpose(build_standard_cm(sp)))
    assert b.i1 == pytest.approx(a.i1, abs=1e-10)
    assert b.i2 == pytest.approx(a.i2, abs=1e-10)
    assert b.i3 == pytest.approx(-a.i3, abs=1e-10)
    assert b.i4 == pytest.approx(a.i4, abs=1e-10)


@given(params)
def test_det_identity(sp):
    v = build_standard_cm(sp)
    assert det_via_invariants(local_invariants(v)) == pytest.approx(
        determinant(v), rel=1e-10, abs=1e-10)


@given(params, angles, squeezes, angles, angles, squeezes, angles)
@settings(max_examples=60)
def test_transformed_states_stay_hermitian_and_physical(
        sp, t1, r1, p1, t2, r2, p2):
    v = build_standard_cm(sp)
    if not is_physical(v):
        return
    out = apply_local(v, make_local_symplectic(t1, r1, p1, t2, r2, p2))
    assert np.max(np.abs(out.entries - out.entries.conj().T)) == 0.0
    assert is_physical(out)
    assert purity(out) == pytest.approx(purity(v), rel=1e-8)


@given(params)
@settings(max_examples=60)
def test_coordinates_reproduce_intervals(sp):
    v = build_standard_cm(sp)
    if not is_physical(v):
        return
    inv = local_invariants(v)
    if inv.i1 <= 0.25 + 1e-6:
        return
    co = coordinates(inv)
    tol = 1e-9 * max(1.0, abs(co.dt2), abs(co.dy2), abs(co.dy2_tilde))
    assert abs(co.dt2 - co.dx2 - co.dy2 - interval_physical(inv)) <= tol
    assert abs(co.dt2 - co.dx2 - co.dy2_tilde
               - interval_separability(inv)) <= tol


def test_all_seeded_suites_pass():
    results = run_all(seed=42, cases=120)
    failures = [r for r in results if not r.passed]
    assert not failures, failures


def test_suite_names_unique():
    names = [name for name, _ in PROPERTIES]
    assert len(names) == len(set(names))
