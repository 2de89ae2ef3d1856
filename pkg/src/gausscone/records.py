"""Analysis records and their CSV/JSON serialization.

One AnalysisRecord holds everything the toolkit can say about a single
state: generator knobs (when known), standard-form parameters (when the
state is in standard form), invariants, Minkowski coordinates and
intervals, the partial-transpose symplectic pair, purity, verdict, and
the entanglement measures.  Records serialize to a fixed CSV schema and
to JSON; all numbers print with 12 significant digits, lowercase
scientific notation, no locale dependence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

import numpy as np

from .core import (
    CovarianceMatrix,
    Kind,
    LocalInvariants,
    StandardFormParams,
    classify_separable,
    local_invariants,
    purity,
    seralian,
)
from .measures import (
    SYMMETRY_TOL,
    eof_lower_bound,
    log_negativity,
    minkowski_distance_measure,
    transposed_pair,
    unified_argument,
)
from .minkowski import CoordinateSingularity, coordinates, intervals

CSV_COLUMNS = [
    "d", "r", "nbar", "ell",
    "n1", "n2", "ms", "mc",
    "i1", "i2", "i3", "i4",
    "dt2", "dx2", "dy2", "dy2t",
    "ds2", "ds2t", "npt", "nmt",
    "purity", "class",
    "mink_dist", "log_neg", "eof_bound",
    "coord_ok",
]

STANDARD_FORM_MATCH_TOL = 1e-12


def format_number(x) -> str:
    """12 significant digits, lowercase scientific where needed."""
    if x is None:
        return ""
    return format(float(x), ".12g")


def _rounded(x):
    # numeric JSON value identical to the printed CSV digits
    return None if x is None else float(format_number(x))


@dataclass(frozen=True)
class AnalysisRecord:
    d: float | None
    r: float | None
    nbar: float | None
    ell: float | None
    n1: float | None
    n2: float | None
    ms: float | None
    mc: float | None
    i1: float
    i2: float
    i3: float
    i4: float
    dt2: float | None
    dx2: float | None
    dy2: float | None
    dy2t: float | None
    ds2: float
    ds2t: float
    npt: float
    nmt: float
    purity: float
    kind: Kind
    mink_dist: float
    log_neg: float
    eof_bound: float
    coord_ok: bool
    seralian: float
    eof_symmetric: float | None


def standard_form_of(v: CovarianceMatrix) -> StandardFormParams | None:
    """Extract (n1, n2, ms, mc) when the CM is in standard form."""
    m = v.entries
    if np.max(np.abs(m.imag)) > STANDARD_FORM_MATCH_TOL:
        return None
    re = m.real
    sp = StandardFormParams(re[0, 0], re[2, 2], re[0, 2], re[0, 3])
    c = np.array([[sp.ms, sp.mc], [sp.mc, sp.ms]])
    model = np.block([[sp.n1 * np.eye(2), c], [c.T, sp.n2 * np.eye(2)]])
    if np.max(np.abs(re - model)) > STANDARD_FORM_MATCH_TOL:
        return None
    return sp


def analyze(v: CovarianceMatrix, knobs: dict | None = None) -> AnalysisRecord:
    """Full analysis of one CM; raises UnphysicalState on bad input.

    ``knobs`` carries generator parameters (d, r, nbar, ell) when the
    state came from the squeezed-thermal/fiber pipeline, so they can be
    reported alongside derived quantities.
    """
    knobs = knobs or {}
    verdict = classify_separable(v)
    inv = local_invariants(v)
    both = intervals(inv)
    pair = transposed_pair(inv)
    try:
        coo = coordinates(inv)
        dt2, dx2, dy2, dy2t = coo.dt2, coo.dx2, coo.dy2, coo.dy2_tilde
        coord_ok = True
    except CoordinateSingularity:
        dt2 = dx2 = dy2 = dy2t = None
        coord_ok = False
    sf = standard_form_of(v)
    symmetric = abs(inv.i1 - inv.i2) <= SYMMETRY_TOL
    eof = eof_lower_bound(inv)
    return AnalysisRecord(
        d=knobs.get("d"), r=knobs.get("r"),
        nbar=knobs.get("nbar"), ell=knobs.get("ell"),
        n1=sf.n1 if sf else None, n2=sf.n2 if sf else None,
        ms=sf.ms if sf else None, mc=sf.mc if sf else None,
        i1=inv.i1, i2=inv.i2, i3=inv.i3, i4=inv.i4,
        dt2=dt2, dx2=dx2, dy2=dy2, dy2t=dy2t,
        ds2=both.ds2, ds2t=both.ds2_tilde,
        npt=pair.n_plus, nmt=pair.n_minus,
        purity=purity(v),
        kind=verdict.kind,
        mink_dist=minkowski_distance_measure(inv),
        log_neg=log_negativity(inv),
        eof_bound=eof,
        coord_ok=coord_ok,
        seralian=seralian(inv),
        eof_symmetric=eof if symmetric else None,
    )


def to_csv_row(rec: AnalysisRecord) -> list[str]:
    out = []
    for col in CSV_COLUMNS:
        if col == "class":
            out.append(rec.kind.value)
        elif col == "coord_ok":
            out.append("1" if rec.coord_ok else "0")
        else:
            out.append(format_number(getattr(rec, col)))
    return out


def write_csv(path, records) -> None:
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(to_csv_row(r)) for r in records)
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def parse_csv_rows(path):
    """Read a records CSV; returns (header, list of AnalysisRecord)."""
    with open(path) as fh:
        rows = [line.rstrip("\n").split(",") for line in fh if line.strip()]
    header = rows[0]
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header: {header}")
    records = []
    for row in rows[1:]:
        vals = dict(zip(header, row))
        num = {k: (float(vals[k]) if vals[k] != "" else None)
               for k in header if k not in ("class", "coord_ok")}
        inv = LocalInvariants(num["i1"], num["i2"], num["i3"], num["i4"])
        symmetric = abs(inv.i1 - inv.i2) <= SYMMETRY_TOL
        records.append(AnalysisRecord(
            kind=Kind(vals["class"]),
            coord_ok=vals["coord_ok"] == "1",
            seralian=seralian(inv),
            eof_symmetric=num["eof_bound"] if symmetric else None,
            **{k: v for k, v in num.items()},
        ))
    return header, records


def to_json_dict(rec: AnalysisRecord) -> dict:
    """JSON view of a record, numbers rounded to the printed digits."""
    out = {}
    for f in fields(rec):
        val = getattr(rec, f.name)
        if f.name == "kind":
            out["class"] = rec.kind.value
        elif f.name == "coord_ok":
            out[f.name] = rec.coord_ok
        else:
            out[f.name] = _rounded(val)
    return out


def to_json(rec: AnalysisRecord) -> str:
    return json.dumps(to_json_dict(rec), indent=2)
