from .character_table import CharacterTable, character_table, set_table_store
from .family import GradedFamily, plethystic_exp, sum_over_partitions
from .plethysm import InnerDegreeZero, complete_plethysms, elementary_plethysms, plethysm, power_plethysm
from .specialization import complete_over_geometric, principal_specialization
from .symmetric import (
    Basis,
    DegreeMismatch,
    SymFunc,
    basis_convert,
    e,
    h,
    hilbert,
    is_schur_integral,
    is_schur_positive,
    kronecker,
    m,
    outer_mul,
    p,
    s,
    scalar_product,
    schur_terms,
)
