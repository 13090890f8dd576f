"""Critical groups of faithful representations of finite groups, computed exactly."""

from .chartab import (
    CharacterTable,
    ClassFunction,
    character_sum,
    cyclic_group_table,
    irreducible_character,
    reflection_character,
    regular_character,
    symmetric_group_table,
)
from .critical import critical_group, full_report, mckay_cartan, order_formula
from .exactnum import Cyclotomic
from .intlinalg import AbelianGroupStructure, IntegerMatrix, cokernel, snf
from .young import theorem15_structure

__version__ = "0.1.0"
