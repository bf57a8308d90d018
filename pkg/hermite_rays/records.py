"""
Rendering of flat output records as CSV or JSON lines.
"""

import json
import math
from typing import Iterable, List, Optional, Sequence, Union

import pandas as pd

from hermite_rays.cfg import Cfg
from hermite_rays.core.hermite_core import SignedLogValue
from hermite_rays.errors import InvalidArgumentError
from hermite_rays.typedefs import Cell, Number, Record
from hermite_rays.util import get_config_value

FORMATS = ('csv', 'json')

SIGN_MISMATCH = 'SIGN'


def _output_setting(key: str, value_type) -> Union[int, float]:
    return get_config_value(Cfg.get_section('output'), key, value_type=value_type, key_path='output')


def linear_log_cutoff() -> float:
    return float(_output_setting('linear_log_cutoff', Number))


def linear_value(value: SignedLogValue, cutoff: Optional[float] = None) -> Optional[float]:
    """``sign * exp(log_abs)`` or None when it is too large or too small for a double."""
    cutoff = linear_log_cutoff() if cutoff is None else cutoff
    if value.is_zero:
        return 0.0
    if abs(value.log_abs) >= cutoff:
        return None
    return value.sign * math.exp(value.log_abs)


def signed_log_fields(value: SignedLogValue, prefix: str = '', cutoff: Optional[float] = None) -> Record:
    return {
        prefix + 'sign': value.sign,
        prefix + 'log_abs': None if value.is_zero else value.log_abs,
        prefix + 'value_linear': linear_value(value, cutoff=cutoff),
    }


def relative_error(approx: SignedLogValue, exact: SignedLogValue,
                   cutoff: Optional[float] = None) -> Union[float, str]:
    """
    |approx / exact - 1| from the log magnitudes, ``"SIGN"`` when the signs differ.
    """
    if approx.sign != exact.sign:
        return SIGN_MISMATCH
    if approx.is_zero:
        return 0.0
    delta = approx.log_abs - exact.log_abs
    cutoff = linear_log_cutoff() if cutoff is None else cutoff
    if delta > cutoff:
        return math.inf
    return abs(math.expm1(delta))


def render_cell(value: Cell, digits: int = 17) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return format(value, f'.{digits}g')
    return str(value)


def _json_cell(value: Cell) -> Cell:
    if isinstance(value, float) and not math.isfinite(value):
        return render_cell(value)
    return value


def render_records(records: Iterable[Record], columns: Sequence[str], fmt: str = 'csv') -> str:
    """
    Render ``records`` with the given column order. CSV always carries a
    header; JSON output is one object per line.
    """
    records = list(records)
    for record in records:
        if list(record.keys()) != list(columns):
            raise ValueError(f'record keys {list(record.keys())} do not match columns {list(columns)}')
    if fmt == 'csv':
        digits = _output_setting('significant_digits', int)
        rows: List[List[str]] = [[render_cell(record[c], digits=digits) for c in columns] for record in records]
        return pd.DataFrame(rows, columns=list(columns), dtype=object).to_csv(index=False, lineterminator='\n')
    if fmt == 'json':
        return ''.join(json.dumps({c: _json_cell(record[c]) for c in columns}) + '\n' for record in records)
    raise InvalidArgumentError(f'unknown output format "{fmt}", expected one of {", ".join(FORMATS)}')
