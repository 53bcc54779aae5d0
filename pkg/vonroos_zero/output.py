#!/usr/bin/env python3

"""Byte-deterministic table emitters: CSV, JSON and a pretty text table.

Floats are written with 17 significant digits, booleans as true/false and
lines end with LF. Non-finite floats become null in JSON.
"""

import json
import math
from enum import Enum
from typing import Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from vonroos_zero import constants


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"
    PRETTY = "pretty"


def format_value(value) -> str:
    """Cell text shared by the CSV and pretty emitters."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), constants.FLOAT_FORMAT)
    return str(value)


def json_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return json.dumps(value.value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return "null"
        return format(float(value), constants.FLOAT_FORMAT)
    return json.dumps(str(value))


def json_object(row: dict) -> str:
    return (
        "{"
        + ", ".join(f"{json.dumps(key)}: {json_value(value)}" for key, value in row.items())
        + "}"
    )


def to_frame(rows: Sequence[dict], columns: Optional[List[str]] = None) -> pd.DataFrame:
    """String-valued frame; column order is `columns` or the first row's keys."""
    if columns is None:
        columns = list(rows[0]) if rows else []
    return pd.DataFrame(
        [[format_value(row.get(column)) for column in columns] for row in rows],
        columns=columns,
        dtype=object,
    )


def render_table(
    rows: Iterable[dict],
    output_format: OutputFormat,
    columns: Optional[List[str]] = None,
) -> str:
    rows = list(rows)
    if output_format is OutputFormat.JSON:
        return "[" + ", ".join(json_object(row) for row in rows) + "]\n"
    frame = to_frame(rows, columns)
    if output_format is OutputFormat.CSV:
        return frame.to_csv(index=False, lineterminator="\n")
    if frame.empty:
        return " ".join(frame.columns) + "\n"
    return frame.to_string(index=False) + "\n"


def render_record(row: dict, output_format: OutputFormat) -> str:
    """A single result: one JSON object, or a one-row table."""
    if output_format is OutputFormat.JSON:
        return json_object(row) + "\n"
    return render_table([row], output_format)


def field_rows(rho, z, values, name: str = "value") -> List[dict]:
    """Flattens a (rho, z) field into rows, rho-major."""
    rho_mesh, z_mesh = np.meshgrid(rho, z, indexing="ij")
    return [
        {"rho": r, "z": zz, name: v}
        for r, zz, v in zip(rho_mesh.ravel(), z_mesh.ravel(), np.ravel(values))
    ]
