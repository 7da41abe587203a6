"""
Record emission as JSON or CSV.
"""

import json
import logging
import sys
from pathlib import Path
from typing import IO, Iterable, List, Union

import pandas as pd

from ..config import CSV_COLUMNS
from ..errors import ParameterError
from .models import QuantumCodeRecord

logger = logging.getLogger(__name__)

FORMAT_JSON = "json"
FORMAT_CSV = "csv"

Destination = Union[str, Path, IO[str], None]


def records_to_frame(records: Iterable[QuantumCodeRecord]) -> pd.DataFrame:
    """DataFrame with the fixed CSV column order."""
    return pd.DataFrame([r.to_row() for r in records], columns=CSV_COLUMNS)


def render(records: List[QuantumCodeRecord], fmt: str) -> str:
    """Serialized records as text."""
    if fmt == FORMAT_JSON:
        return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    if fmt == FORMAT_CSV:
        return records_to_frame(records).to_csv(index=False, lineterminator="\n")
    raise ParameterError(f"unknown format {fmt!r}")


def emit(records: Iterable[QuantumCodeRecord], fmt: str = FORMAT_JSON, destination: Destination = None) -> None:
    """
    Write records to a file path, an open text stream, or stdout (None).

    JSON: one object per record with every field; integers above 2^53 as strings.
    CSV: header plus one row per record, columns
    q,lambda,m,sizes,t,n,k,d_bound,d_exact,method,singleton,qgv.
    """
    records = list(records)
    text = render(records, fmt)

    if destination is None:
        sys.stdout.write(text)
    elif isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        logger.info(f"Wrote {len(records)} records to {destination}")
    else:
        destination.write(text)


def load_records(source: Union[str, Path]) -> List[QuantumCodeRecord]:
    """Read records previously written as JSON."""
    with open(source, "r", encoding="utf-8") as handle:
        return [QuantumCodeRecord.from_dict(item) for item in json.load(handle)]
