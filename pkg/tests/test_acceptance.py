"""Acceptance gate: one test per release criterion, stated tolerances.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL
line per criterion.  Everything here goes through the public API or the
CLI; expected values come from closed forms or from independent oracle
routes coded in the tests themselves.
"""

import json
import time
import warnings
from contextlib import contextmanager

import numpy as np
import pytest

from gausscone.cli import Axis, SweepSpec, main, run_sweep
from gausscone.core import (
    StandardFormParams,
    build_standard_cm,
    determinant,
    local_invariants,
    purity,
    seralian,
)
from gausscone.measures import eof_symmetric, log_negativity, unified_argument
from gausscone.minkowski import (
    interval_physical_direct,
    interval_separability_direct,
)
from gausscone.properties import (
    check_coordinate_interval_equivalence,
    check_local_invariance,
    check_noise_monotonicity,
)
from gausscone.records import parse_csv_rows
from gausscone.states import FiberParams, TmtssParams, lossy_fiber, tmsv, tmtss

SEED = 42


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[ACCEPTANCE] FAIL {name}")
        raise
    print(f"[ACCEPTANCE] PASS {name}")


def test_entanglement_threshold(capsys):
    # r0 = 1.25 +- 0.1 for d = 2.5, nbar = 0.5, ell = 0.5; under 1 s
    with criterion("entanglement threshold r0 = 1.25 +- 0.1 in < 1 s"):
        start = time.perf_counter()
        code = main(["threshold", "r", "0", "3",
                     "-d", "2.5", "--nbar", "0.5", "--ell", "0.5"])
        elapsed = time.perf_counter() - start
        out = capsys.readouterr().out
        assert code == 0
        assert float(out) == pytest.approx(1.25, abs=0.1)
        assert elapsed < 1.0


def test_pure_state_cone():
    with criterion("pure-state cone: |ds2| <= 1e-9, det = 1/16 +- 1e-10, "
                   "seralian = 1/2 +- 1e-10, purity = 1 +- 1e-9"):
        for r in np.linspace(0.0, 3.0, 100):
            v = build_standard_cm(tmsv(r))
            assert abs(interval_physical_direct(v)) <= 1e-9
            assert abs(determinant(v) - 1 / 16) <= 1e-10
            assert abs(seralian(local_invariants(v)) - 0.5) <= 1e-10
            assert abs(purity(v) - 1.0) <= 1e-9


def _eof_textbook(r):
    c, s = np.cosh(r) ** 2, np.sinh(r) ** 2
    return c * np.log2(c) - (s * np.log2(s) if s > 0 else 0.0)


def test_known_closed_forms():
    with criterion("closed forms: LN(tmsv) = 2r +- 1e-9, "
                   "EoF matches the textbook form +- 1e-9"):
        for r in (0.25, 0.5, 1.0, 2.0):
            inv = local_invariants(build_standard_cm(tmsv(r)))
            assert abs(log_negativity(inv) - 2 * r) <= 1e-9
            assert abs(eof_symmetric(inv) - _eof_textbook(r)) <= 1e-9


def test_coordinate_determinant_equivalence():
    with criterion("coordinate vs determinant intervals: 1000 states, "
                   "1e-9 relative, zero failures"):
        check_coordinate_interval_equivalence(
            np.random.default_rng([SEED, 100]), 1000)


def test_local_symplectic_invariance():
    with criterion("local-symplectic invariance of invariants and "
                   "measures: 1000 pairs, 1e-8 relative, zero failures"):
        check_local_invariance(np.random.default_rng([SEED, 101]), 1000)


def test_tmtss_simplification():
    with criterion("squeezed-thermal family: x = 2(n - |mc|) +- 1e-10 and "
                   "boundary interval zero to 1e-10, 200 states"):
        rng = np.random.default_rng([SEED, 102])
        for _ in range(200):
            sp = tmtss(TmtssParams(rng.uniform(0, 4), rng.uniform(0, 3),
                                   rng.uniform(0, 1.5)))
            x = unified_argument(local_invariants(build_standard_cm(sp)))
            assert abs(x - 2 * (sp.n1 - abs(sp.mc))) <= 1e-10
            for mc in (sp.n1 - 0.5, -(sp.n1 - 0.5)):
                boundary = build_standard_cm(
                    StandardFormParams(sp.n1, sp.n1, 0.0, mc))
                assert abs(interval_separability_direct(boundary)) <= 1e-10


def _fig4_main_records(tmp_path):
    spec = tmp_path / "fig4.json"
    spec.write_text(json.dumps({
        "fixed": {"d": 2.5, "nbar": 0.5, "ell": 0.5},
        "axes": [["r", 0.0, 3.0, 61]],
    }))
    out = tmp_path / "fig4.csv"
    assert main(["sweep", "--spec", str(spec), "--out", str(out)]) == 0
    return parse_csv_rows(out)[1]


def test_fig4_qualitative_claims(tmp_path):
    r0 = 1.25
    with criterion("comparison-figure sweep: measures vanish below the "
                   "threshold, positive above, LN >= EoF bound on "
                   "entangled rows"):
        recs = _fig4_main_records(tmp_path)
        assert len(recs) == 61
        for rec in recs:
            if abs(rec.r - r0) <= 0.051:
                continue
            if rec.r < r0:
                assert rec.mink_dist == 0.0
                assert rec.log_neg == 0.0
                assert rec.eof_bound == 0.0
            else:
                assert rec.mink_dist > 0
                assert rec.log_neg > 0
                assert rec.eof_bound > 0
            if rec.kind.value == "ENTANGLED":
                assert rec.log_neg >= rec.eof_bound

    with criterion("thermal-occupation inset: interval distance has an "
                   "interior maximum then decays to zero; LN and EoF "
                   "bound monotone non-increasing"):
        for ell in (0.5, 0.0):
            spec = SweepSpec(fixed={"d": 2.5, "r": 3.0, "ell": ell},
                             axes=(Axis("nbar", 0.0, 1.5, 31),))
            recs = run_sweep(spec)
            mink = [rec.mink_dist for rec in recs]
            ln = [rec.log_neg for rec in recs]
            eof = [rec.eof_bound for rec in recs]
            top = int(np.argmax(mink))
            assert 0 < top < len(mink) - 1
            assert all(a <= b + 1e-12 for a, b in zip(mink[:top], mink[1:top + 1]))
            assert all(a >= b - 1e-12 for a, b in zip(mink[top:], mink[top + 1:]))
            assert mink[-1] == 0.0
            assert all(a >= b - 1e-12 for a, b in zip(ln, ln[1:]))
            assert all(a >= b - 1e-12 for a, b in zip(eof, eof[1:]))


def test_fiber_confinement(tmp_path):
    with criterion("lossy fiber confines entangled states toward the "
                   "separatrix on the matched grid; zero-length fiber "
                   "is an exact identity"):
        grids = {}
        for ell in (0.0, 0.5):
            spec = SweepSpec(fixed={"d": 2.5, "ell": ell},
                             axes=(Axis("nbar", 0.0, 1.5, 31),
                                   Axis("r", 0.0, 3.0, 61)))
            grids[ell] = run_sweep(spec)
        compared = 0
        for base, lossy in zip(grids[0.0], grids[0.5]):
            assert (base.nbar, base.r) == (lossy.nbar, lossy.r)
            if base.kind.value == "ENTANGLED" and lossy.kind.value == "ENTANGLED":
                assert lossy.mink_dist < base.mink_dist
                compared += 1
        assert compared > 500      # the grid is mostly entangled at ell = 0.5
        rng = np.random.default_rng([SEED, 103])
        for _ in range(100):
            sp = tmtss(TmtssParams(rng.uniform(0, 4), rng.uniform(0, 3),
                                   rng.uniform(0, 1.5)))
            assert lossy_fiber(sp, FiberParams.asymmetric(0.0)) == sp


def test_noise_monotonicity():
    with criterion("classical local noise never increases the interval "
                   "distance: 500 entangled-to-entangled trials"):
        check_noise_monotonicity(np.random.default_rng([SEED, 104]), 500)


def test_full_proptest_gate(capsys):
    with criterion("seeded property suites all green (seed 42, 300 cases)"):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code = main(["proptest", "--seed", str(SEED), "--cases", "300"])
        capsys.readouterr()
        assert code == 0
