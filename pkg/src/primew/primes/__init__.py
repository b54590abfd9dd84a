"""
Prime module for primew.

Contains the sieve-backed PrimeTable used as ground truth by every check.
"""

from .table import PrimeTable, build_table, limit_for_index, limit_for_value

__all__ = ["PrimeTable", "build_table", "limit_for_index", "limit_for_value"]
