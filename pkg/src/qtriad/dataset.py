"""Flat-file emission of per-state analysis records (CSV or JSON).

Column order is fixed and floats are printed with 17 significant digits, so
equal inputs produce byte-identical files and every value round-trips.
"""

from __future__ import annotations

import json
from typing import IO, Iterable, Sequence

from .classify import DEFAULT_CLASSIFY_TOL, StratumLabel, classify
from .projection import ball_point, coords_from_state
from .states import TwoQubitState, triad

DATASET_COLUMNS = (
    "alpha0_re", "alpha0_im", "alpha1_re", "alpha1_im",
    "alpha2_re", "alpha2_im", "alpha3_re", "alpha3_im",
    "V", "D", "C",
    "x0", "x1", "x2", "x3", "x4",
    "radius", "labels",
)

CSV_FORMAT = "csv"
JSON_FORMAT = "json"


def _fmt(x: float) -> str:
    return "%.17g" % x


def label_names(labels: Iterable[StratumLabel]) -> list[str]:
    """Label strings in definition order (stable across runs)."""
    chosen = set(labels)
    return [member.value for member in StratumLabel if member in chosen]


def state_record(s: TwoQubitState, tol: float = DEFAULT_CLASSIFY_TOL) -> dict:
    """One analysis record: amplitudes, triad, sphere coords, radius, labels."""
    v, d, c = triad(s)
    x = coords_from_state(s)
    record: dict = {}
    for k, a in enumerate(s.alpha):
        record[f"alpha{k}_re"] = a.real
        record[f"alpha{k}_im"] = a.imag
    record["V"] = v
    record["D"] = d
    record["C"] = c
    record["x0"], record["x1"], record["x2"], record["x3"], record["x4"] = x
    record["radius"] = ball_point(s).radius
    record["labels"] = label_names(classify(s, tol))
    return record


def emit_dataset(
    states: Sequence[TwoQubitState],
    fmt: str,
    destination: IO[str],
    tol: float = DEFAULT_CLASSIFY_TOL,
) -> None:
    """Write one record per state to an open text stream.

    CSV gets a header line even for an empty sequence; JSON is a list of
    objects keyed by the same column names (labels as a list).
    """
    if fmt == CSV_FORMAT:
        destination.write(",".join(DATASET_COLUMNS) + "\n")
        for s in states:
            record = state_record(s, tol)
            fields = [_fmt(record[col]) for col in DATASET_COLUMNS[:-1]]
            fields.append(";".join(record["labels"]))
            destination.write(",".join(fields) + "\n")
    elif fmt == JSON_FORMAT:
        records = [state_record(s, tol) for s in states]
        json.dump(records, destination, indent=1)
        destination.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
