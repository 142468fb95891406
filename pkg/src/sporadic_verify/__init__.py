"""Verification that sporadic simple groups are determined by their codegree sets.

Exact-arithmetic library plus CLI: codegree sets from ATLAS character
degrees, enumeration of simple groups with order dividing a bound, and the
elimination stages (quotient filter, Schur-cover witnesses, GL(n,p)
embedding bounds, pairwise containment sweep).
"""

from .dataset import (Dataset, DatasetError, SporadicRecord, default_dataset,
                      load_dataset, load_dataset_file)
from .groups import (Family, SimpleGroupId, enumerate_candidates, gl_order,
                     lie_order, order_of, parse_group_spec)
from .codegrees import CodegreeSet, codegree_set_simple, count_dividing
from .verify import (StageReport, stage_gl, stage_pairwise, stage_quotient,
                     stage_schur, table1_rows, table2_rows, verify_all,
                     verify_group)

__version__ = "1.0.0"

__all__ = [
    "Dataset", "DatasetError", "SporadicRecord", "default_dataset",
    "load_dataset", "load_dataset_file",
    "Family", "SimpleGroupId", "enumerate_candidates", "gl_order",
    "lie_order", "order_of", "parse_group_spec",
    "CodegreeSet", "codegree_set_simple", "count_dividing",
    "StageReport", "stage_gl", "stage_pairwise", "stage_quotient",
    "stage_schur", "table1_rows", "table2_rows", "verify_all", "verify_group",
    "__version__",
]
