"""Matrix Market files, real-number token parsing and tabulated output."""
from jnt.matio.floats import parse_float
from jnt.matio.mm import MatrixMarketHeader, dumps, loads, read_matrix_market, write_matrix_market
from jnt.matio.table import ColumnSpec, TableSpec, format_table, to_csv, write_csv

__all__ = [
    "ColumnSpec",
    "MatrixMarketHeader",
    "TableSpec",
    "dumps",
    "format_table",
    "loads",
    "parse_float",
    "read_matrix_market",
    "to_csv",
    "write_csv",
    "write_matrix_market",
]
