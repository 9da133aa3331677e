"""CSV and SVG emitters plus atomic file output."""

from .csv_writer import (
    BASE_COLUMNS,
    CORRELATOR_COLUMNS,
    ENVELOPE_COLUMN,
    columns_for,
    emit_csv,
    emit_surface_csv,
    read_csv_rows,
    read_metadata,
)
from .files import atomic_write
from .svg import emit_svg

__all__ = [
    "BASE_COLUMNS",
    "CORRELATOR_COLUMNS",
    "ENVELOPE_COLUMN",
    "columns_for",
    "emit_csv",
    "emit_surface_csv",
    "read_csv_rows",
    "read_metadata",
    "atomic_write",
    "emit_svg",
]
