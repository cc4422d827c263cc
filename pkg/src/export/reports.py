"""
JSON and CSV report writers.
Created by Sergie Code

Output is deterministic: floats keep 17 significant digits and non-finite
values become null in JSON and nan in CSV.
"""

import csv
import json
import logging
import math
from enum import Enum
from pathlib import Path

import numpy as np

from config import Config

logger = logging.getLogger(__name__)

INVARIANT_COLUMNS = ('t', 're_z', 'im_z', 'kappa_s_closed', 'kappa_s_general',
                     'kappa_nu', 'kappa_locus', 'type', 'epsilon_gamma')


def to_jsonable(value):
    """Convert report values to plain JSON types."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


class FormattedFloatEncoder(json.JSONEncoder):
    """
    JSON encoder writing floats with a fixed format spec.

    The C encoder always uses repr for floats, so encoding goes through the
    pure-Python iterator with its float formatter replaced.
    """

    def __init__(self, *args, float_format=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.float_format = Config.FLOAT_FORMAT if float_format is None else float_format

    def _floatstr(self, value):
        if not math.isfinite(value):
            raise ValueError(f"Out of range float values are not JSON compliant: {value!r}")
        return format(value, self.float_format)

    def iterencode(self, o, _one_shot=False):
        encoder = (json.encoder.py_encode_basestring_ascii if self.ensure_ascii
                   else json.encoder.py_encode_basestring)
        markers = {} if self.check_circular else None
        iterate = json.encoder._make_iterencode(
            markers, self.default, encoder, self.indent, self._floatstr,
            self.key_separator, self.item_separator, self.sort_keys, self.skipkeys, _one_shot)
        return iterate(o, 0)


def write_json(report, path, float_format=None):
    """Write a report as indented JSON with full-precision floats."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(to_jsonable(report), indent=2, allow_nan=False,
                      cls=FormattedFloatEncoder, float_format=float_format)
    path.write_text(text + '\n', encoding='utf-8')
    logger.info(f"Wrote JSON report: {path}")
    return path


def _cell(value, float_format):
    if isinstance(value, str):
        return value
    return format(float(value), float_format)


def write_invariants_csv(rows, path, float_format=None):
    """
    Write the per-sample invariant table.

    Args:
        rows (list): dicts from annotate_curve
        path (str | Path): output file
        float_format (str): format spec of the numeric cells

    Returns:
        Path: the written file
    """
    float_format = Config.FLOAT_FORMAT if float_format is None else float_format
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(INVARIANT_COLUMNS)
        for row in rows:
            z = complex(row['z'])
            record = dict(row, re_z=z.real, im_z=z.imag)
            writer.writerow([_cell(record[column], float_format) for column in INVARIANT_COLUMNS])
    logger.info(f"Wrote invariant table with {len(rows)} rows: {path}")
    return path
