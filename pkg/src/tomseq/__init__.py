"""Tables of marks, subgroup lattices and integer sequences for S_n and A_n."""

from .permcore import Group, Permutation, alternating_group, closure, symmetric_group
from .enumeration import BudgetExceeded, ClassTable, class_table, family_group
from .marks import MarksTable, marks_table
from .transforms import IntSeq, euler_transform, inverse_euler_transform

__all__ = [
    "Group", "Permutation", "alternating_group", "closure", "symmetric_group",
    "BudgetExceeded", "ClassTable", "class_table", "family_group",
    "MarksTable", "marks_table",
    "IntSeq", "euler_transform", "inverse_euler_transform",
]
__version__ = "0.1.0"
