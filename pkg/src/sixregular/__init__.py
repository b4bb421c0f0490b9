"""Exact computation and checking for 6-regular partitions and their relatives."""

from .kernels import SequenceTable, table
from .series import TruncatedSeries, build_product, poch
from .enumerator import Partition, PartitionConstraint, count, enumerate_partitions
from .suites import run_suite, suite_catalog
from .inequalities import scan, scan_matrix
from .congruences import PrimeFamilySpec, verify_family, verify_corollary_p24
from .cache import read_table, write_table, cache_roundtrip

__version__ = "0.1.0"
