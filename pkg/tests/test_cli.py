import json

import numpy as np
import pytest

from gausscone.cli import (
    Axis,
    NoSignChange,
    SweepSpec,
    UsageError,
    bisect_separatrix,
    main,
    run_sweep,
)
from gausscone.records import CSV_COLUMNS, parse_csv_rows


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_vacuum(capsys):
    code, out, _ = run(capsys, "analyze", "--n1", "0.5", "--n2", "0.5")
    assert code == 0
    blob = json.loads(out)
    assert blob["ds2"] == 0.0
    assert blob["purity"] == 1.0
    assert blob["class"] in ("SEPARABLE", "BOUNDARY")


def test_analyze_fig4_operating_point(capsys):
    code, out, _ = run(capsys, "analyze", "--tmtss", "-d", "2.5", "-r", "3",
                       "--nbar", "0.5", "--ell", "0.5")
    assert code == 0
    blob = json.loads(out)
    assert blob["class"] == "ENTANGLED"
    assert blob["mink_dist"] > 0
    assert blob["log_neg"] > blob["eof_bound"] > 0


def test_analyze_malformed_json(tmp_path, capsys):
    bad = tmp_path / "cm.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "analyze", "--cm", str(bad))
    assert code == 1
    assert "line" in err


def test_analyze_cm_json_formats(tmp_path, capsys):
    std = tmp_path / "std.json"
    std.write_text(json.dumps(
        {"format": "standard", "n1": 1.0, "n2": 1.0, "ms": 0.0, "mc": 0.4}))
    code, out, _ = run(capsys, "analyze", "--cm", str(std))
    assert code == 0
    assert json.loads(out)["mc"] == 0.4

    m = np.diag([0.6, 0.6, 0.6, 0.6])
    mat = tmp_path / "mat.json"
    mat.write_text(json.dumps({"format": "matrix", "re": m.tolist(),
                               "im": np.zeros((4, 4)).tolist()}))
    code, out, _ = run(capsys, "analyze", "--cm", str(mat))
    assert code == 0
    assert json.loads(out)["class"] == "SEPARABLE"


def test_analyze_unphysical_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "--n1", "0.4", "--n2", "0.4")
    assert code == 2
    assert "0.4" in err


def test_analyze_usage_errors(capsys):
    assert run(capsys, "analyze")[0] == 1
    assert run(capsys, "analyze", "--tmtss", "-d", "1")[0] == 1
    assert run(capsys, "analyze", "--n1", "1.0")[0] == 1


def test_analyze_appends_csv(tmp_path, capsys):
    out_csv = tmp_path / "rows.csv"
    for _ in range(2):
        code, _, _ = run(capsys, "analyze", "--tmtss", "-d", "2.5", "-r", "1",
                         "--nbar", "0.5", "--out", str(out_csv))
        assert code == 0
    header, recs = parse_csv_rows(out_csv)
    assert header == CSV_COLUMNS
    assert len(recs) == 2


def test_sweep_deterministic_and_schema(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "fixed": {"d": 2.5, "nbar": 0.5, "ell": 0.5},
        "axes": [["r", 0.0, 3.0, 7]],
    }))
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "sweep", "--spec", str(spec), "--out", str(a))[0] == 0
    assert run(capsys, "sweep", "--spec", str(spec), "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    header, recs = parse_csv_rows(a)
    assert header == CSV_COLUMNS
    assert len(recs) == 7
    assert [r.r for r in recs] == pytest.approx(list(np.linspace(0, 3, 7)))


def test_sweep_row_major_axis_order(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "fixed": {"d": 2.5},
        "axes": [["nbar", 0.0, 1.0, 2], ["r", 0.0, 3.0, 3]],
    }))
    out = tmp_path / "grid.csv"
    assert run(capsys, "sweep", "--spec", str(spec), "--out", str(out))[0] == 0
    _, recs = parse_csv_rows(out)
    assert [(r.nbar, r.r) for r in recs] == [
        (0.0, 0.0), (0.0, 1.5), (0.0, 3.0), (1.0, 0.0), (1.0, 1.5), (1.0, 3.0)]


def test_single_point_sweep_matches_analyze(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "fixed": {"d": 2.5, "nbar": 0.5, "ell": 0.5},
        "axes": [["r", 2.0, 2.0, 2]],
    }))
    out_csv = tmp_path / "point.csv"
    assert run(capsys, "sweep", "--spec", str(spec),
               "--out", str(out_csv))[0] == 0
    row_csv = tmp_path / "single.csv"
    code, _, _ = run(capsys, "analyze", "--tmtss", "-d", "2.5", "-r", "2",
                     "--nbar", "0.5", "--ell", "0.5", "--out", str(row_csv))
    assert code == 0
    sweep_lines = out_csv.read_text().splitlines()
    single_lines = row_csv.read_text().splitlines()
    assert sweep_lines[1] == single_lines[1]   # digit-for-digit agreement
    assert sweep_lines[1] == sweep_lines[2]


def test_sweep_spec_validation(tmp_path):
    with pytest.raises(UsageError):
        SweepSpec(fixed={}, axes=())
    with pytest.raises(UsageError):
        SweepSpec(fixed={}, axes=(Axis("bogus", 0, 1, 3),))
    with pytest.raises(UsageError):
        SweepSpec(fixed={}, axes=(Axis("r", 0, 1, 1),))
    with pytest.raises(UsageError):
        SweepSpec(fixed={"frequency": 1.0}, axes=(Axis("r", 0, 1, 3),))
    from gausscone.states import FiberParams
    with pytest.raises(UsageError):
        SweepSpec(fixed={"ell": 0.5}, axes=(Axis("r", 0, 1, 3),),
                  channel=FiberParams(0.9, 0.9))


def test_sweep_explicit_channel(tmp_path):
    spec = SweepSpec(fixed={"d": 2.5, "nbar": 0.5},
                     axes=(Axis("r", 1.5, 3.0, 4),),
                     channel=None)
    recs = run_sweep(spec)
    assert all(r.ell == 0.0 for r in recs)


def test_threshold_fig4(capsys):
    code, out, _ = run(capsys, "threshold", "r", "0", "3",
                       "-d", "2.5", "--nbar", "0.5", "--ell", "0.5")
    assert code == 0
    assert float(out) == pytest.approx(1.25, abs=0.01)


def test_threshold_no_sign_change(capsys):
    # a dissipationless squeezed vacuum is entangled for every r > 0
    code, _, err = run(capsys, "threshold", "r", "0.1", "3",
                       "-d", "1e-12", "--nbar", "0")
    assert code == 1
    assert "sign change" in err


def test_threshold_root_sits_on_separatrix(capsys):
    from gausscone.cli import pipeline_state
    from gausscone.minkowski import fiber_separatrix_residual
    code, out, _ = run(capsys, "threshold", "r", "0", "3",
                       "-d", "2.5", "--nbar", "0.5", "--ell", "0.5")
    assert code == 0
    sp, _ = pipeline_state({"d": 2.5, "r": float(out), "nbar": 0.5,
                            "ell": 0.5})
    assert fiber_separatrix_residual(sp.n1, sp.n2, sp.mc) <= 1e-8


def test_bisect_separatrix_direct():
    root = bisect_separatrix(lambda x: x - 0.25, 0.0, 1.0)
    assert root == pytest.approx(0.25, abs=1e-8)
    with pytest.raises(NoSignChange):
        bisect_separatrix(lambda x: x + 1.0, 0.0, 1.0)


def test_proptest_cli(capsys):
    code, out, _ = run(capsys, "proptest", "--seed", "7", "--cases", "25")
    assert code == 0
    assert out.splitlines()[-1].startswith("RESULT PASS")
    code2, out2, _ = run(capsys, "proptest", "--seed", "7", "--cases", "25")
    assert out2 == out                          # byte-identical report


def test_unknown_flags_exit_one(capsys):
    assert run(capsys, "sweep", "--bogus")[0] == 1
    assert run(capsys, "threshold", "q", "0", "1")[0] == 1


def test_sweep_with_explicit_channel(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "fixed": {"d": 2.5, "nbar": 0.5},
        "axes": [["r", 1.0, 3.0, 5]],
        "channel": {"t1": 0.9, "t2": 0.7, "ell": 0.2},
    }))
    out = tmp_path / "chan.csv"
    assert run(capsys, "sweep", "--spec", str(spec), "--out", str(out))[0] == 0
    _, recs = parse_csv_rows(out)
    assert all(r.ell == 0.2 for r in recs)
    # weaker correlations than the lossless channel at every grid point
    from gausscone.cli import evaluate_point
    for rec in recs:
        plain = evaluate_point({"d": 2.5, "r": rec.r, "nbar": 0.5})
        assert abs(rec.mc) < abs(plain.mc)


def test_analyze_complex_matrix_input(tmp_path, capsys):
    # a physical state pushed out of standard form by local phases
    from gausscone.core import build_standard_cm, classify_separable
    from gausscone.states import apply_local, make_local_symplectic, tmsv
    v = apply_local(build_standard_cm(tmsv(0.8)),
                    make_local_symplectic(0.4, 0.3, 1.1, 2.0, 0.6, 0.2))
    assert np.max(np.abs(v.entries.imag)) > 1e-3
    path = tmp_path / "cm.json"
    path.write_text(json.dumps({"format": "matrix",
                                "re": v.entries.real.tolist(),
                                "im": v.entries.imag.tolist()}))
    code, out, _ = run(capsys, "analyze", "--cm", str(path))
    assert code == 0
    blob = json.loads(out)
    assert blob["class"] == classify_separable(v).kind.value == "ENTANGLED"
    assert blob["n1"] is None          # not in standard form
    assert blob["log_neg"] == pytest.approx(1.6, abs=1e-6)
