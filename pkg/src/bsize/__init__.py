"""Exact base size of the symmetric group acting on k-subsets."""

from .basesize import (
    BaseSizeResult,
    ClosedForm,
    WeightTable,
    base_size,
    base_sizes,
    h_value,
    halasi_formula,
    weight_table,
    weight_tables,
)
from .errors import (
    BsizeError,
    CheckpointError,
    InvalidArgument,
    NoBaseError,
    ResourceLimitError,
)
from .fixcount import fixed_subsets, fixed_subsets_reference
from .partitions import CycleType, class_size, partitions_of, sign

__version__ = "0.1.0"
