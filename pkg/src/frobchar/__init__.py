from .characters import (
    IdentityFailure,
    NamedCharacter,
    ch_C,
    ch_D,
    ch_D_alt,
    ch_D_polynomial_form,
    ch_lambda,
    ch_lambda_primed,
    ch_lambdaP_primed,
    ch_M,
    ch_OT,
    ch_R,
    ch_R_schur,
    ch_sym_perm,
    ch_T,
    ch_T_from_OT,
    gen_fun_D,
    gen_fun_OT,
    lyndon,
    named_character,
    top_degree_coefficient,
)
