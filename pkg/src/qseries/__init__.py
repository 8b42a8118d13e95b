from .series import (
    NegateQ,
    NotPolynomial,
    PowerQ,
    QSeries,
    ZeroConstantTerm,
    geometric,
    one_minus_q,
    qs_add,
    qs_exact_polynomial,
    qs_invert,
    qs_linear_combination,
    qs_mul,
    qs_substitute,
)
