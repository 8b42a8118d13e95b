from .algebra import PresentedAlgebra, TooLarge, Variant
from .oracle import ClassFunction, oracle_character, oracle_T
from .pieces import GradedPiece, build_piece, trace_on_quotient
