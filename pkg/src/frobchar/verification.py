"""
Verification suite: each check compares two independent evaluations of the
same character, or tests a structural property, for n = 1..n_max.
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from config import CHECK_N_LIMITS, ORACLE_OT_MAX_DEGREE, SUBTRACTION_SAMPLES, VERIFY_SEED
from src.combinat.partitions import partitions_of
from src.frobchar.characters import (
    IdentityFailure,
    ch_C,
    ch_D,
    ch_D_alt,
    ch_D_polynomial_form,
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
    top_degree_coefficient,
)
from src.oracle.algebra import TooLarge, Variant
from src.oracle.oracle import oracle_character, oracle_T
from src.qseries.series import NotPolynomial, QSeries, one_minus_q, product_of_polynomials
from src.symfunc.character_table import TableStore, set_table_store, stats, table_store
from src.symfunc.plethysm import plethysm
from src.symfunc.symmetric import Basis, SymFunc, basis_convert, h, hilbert, kronecker, p, s

logger = logging.getLogger(__name__)


@dataclass
class Discrepancy:
    """First differing coefficient: [q^q_power] of s_partition on each side."""
    n: int
    partition: Optional[Tuple[int, ...]]
    q_power: Optional[int]
    lhs: Optional[str]
    rhs: Optional[str]
    label: str = ""


@dataclass
class CheckOutcome:
    check: str
    n: int
    passed: bool
    ms: float
    message: str = ""
    discrepancy: Optional[Discrepancy] = None
    cache_hits: int = 0
    table_build_ms: float = 0.0


@dataclass
class VerificationReport:
    check: str
    passed: bool
    n_max: int
    elapsed_ms: float
    discrepancy: Optional[Discrepancy] = None
    details: List[CheckOutcome] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _coefficient_str(series: QSeries, k: int) -> str:
    if series.order is not None and k >= series.order:
        return "unknown"
    return str(Fraction(series[k]))


def first_difference(n: int, lhs: SymFunc, rhs: SymFunc, label: str = "") -> Optional[Discrepancy]:
    """
    Compare two characters in the s-basis up to their common truncation.

    Partitions are scanned in reverse lexicographic order and q-powers
    upward; the first mismatch is returned, or None when they agree.
    """
    a, b = basis_convert(lhs, Basis.S), basis_convert(rhs, Basis.S)
    for lam in partitions_of(n):
        x, y = a.coefficient(lam), b.coefficient(lam)
        if x.agrees_with(y):
            continue
        orders = [o for o in (x.order, y.order) if o is not None]
        limit = min(orders) if orders else max(len(x), len(y))
        for k in range(limit):
            if x[k] != y[k]:
                return Discrepancy(n, tuple(lam), k, _coefficient_str(x, k), _coefficient_str(y, k), label)
    return None


def _series_difference(n: int, lhs: QSeries, rhs: QSeries, label: str) -> Optional[Discrepancy]:
    if lhs.agrees_with(rhs):
        return None
    for k in range(max(len(lhs), len(rhs))):
        if lhs[k] != rhs[k]:
            return Discrepancy(n, None, k, _coefficient_str(lhs, k), _coefficient_str(rhs, k), label)
    return None


def _first(*results: Optional[Discrepancy]) -> Optional[Discrepancy]:
    for result in results:
        if result is not None:
            return result
    return None


# --- Individual checks: each returns None on success ---

def check_mpy(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    return first_difference(n, ch_D(n), ch_M(n, order or n + 1), "ch_D = ch_M")


def check_cancellation(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    order = order or 2 * n
    unit = s(n).truncate(order)
    standard = kronecker(ch_R(n, order), ch_lambda_primed(n))
    permutation = kronecker(ch_sym_perm(n, order), ch_lambdaP_primed(n))
    return _first(
        first_difference(n, standard, unit, "ch_R * ch'_Lambda = s_n"),
        first_difference(n, permutation, unit, "ch_SymP * ch'_LambdaP = s_n"),
        first_difference(n, ch_R(n, order), ch_R_schur(n, order), "ch_R by power sums = ch_R by hook lengths"),
    )


def check_dn_two_formulas(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    reference = ch_D(n)
    return _first(
        first_difference(n, ch_D_alt(n, check=False), reference, "exterior-algebra form = complete-plethysm form"),
        first_difference(n, ch_D_polynomial_form(n), reference, "division-free form = complete-plethysm form"),
    )


def check_ot_factorization(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    order = order or 2 * n
    rhs = kronecker(ch_M(n, order), ch_R(n, order))
    return first_difference(n, ch_OT(n, order), rhs, "ch_OT = ch_M * ch_R")


def check_t_consistency(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    order = order or 2 * n
    ot_by_k = [ch_OT(k, order) for k in range(1, n + 1)]
    return first_difference(n, ch_T(n, order), ch_T_from_OT(n, order, ot_by_k), "ch_T closed form = support recursion")


def check_genfun(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    """Compares components 1..n of both generating functions."""
    order = order or n + 1
    d_family = gen_fun_D(n, order, check=False)
    ot_family = gen_fun_OT(n, order, check=False)
    for k in range(1, n + 1):
        found = _first(
            first_difference(k, d_family.component(k), ch_D(k), "Exp((1-q)L) component"),
            first_difference(k, ot_family.component(k), ch_OT(k, order), "Exp((1-q)(L*H)) component"),
        )
        if found is not None:
            return found
    return None


def check_top_degree(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    if n < 2:
        return None
    top = top_degree_coefficient(n)
    if top.is_zero():
        return None
    return first_difference(n, top.shift(n - 1), SymFunc.zero(n), "q^(n-1) coefficient of the division-free form")


def _random_inner_function(rng: np.random.Generator, order: int) -> SymFunc:
    """A nonzero g of degree 1..3 with small integer q-polynomial coefficients in the h- or p-basis."""
    degree = int(rng.integers(1, 4))
    make = h if rng.integers(0, 2) == 0 else p
    g = SymFunc.zero(degree)
    while g.is_zero():
        for lam in partitions_of(degree):
            coeff = QSeries([int(c) for c in rng.integers(-2, 3, size=2)], order)
            if not coeff.is_zero():
                g = g + make(*lam).scale(coeff)
    return g


def sample_inner_functions(n: int, order: int, count: int = SUBTRACTION_SAMPLES) -> List[SymFunc]:
    """Seeded by n, so a rerun draws the same functions."""
    rng = np.random.default_rng(VERIFY_SEED + n)
    return [p(1)] + [_random_inner_function(rng, order) for _ in range(count)]


def check_subtraction(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    """h_m[(1-q)g] = Σ_k (-q)^k (h_{m-k}e_k)[g] for m = n and random inner functions g."""
    order = order or 3 * n + 4
    for g in sample_inner_functions(n, order):
        lhs = plethysm(h(n), g.scale(one_minus_q(order)))
        rhs = plethysm(ch_lambdaP_primed(n), g)
        found = first_difference(n * g.degree, lhs, rhs, f"subtraction formula with inner degree {g.degree}")
        if found is not None:
            return found
    return None


def _product(factors: List[SymFunc]) -> SymFunc:
    result = SymFunc.one()
    for factor in factors:
        result = result * factor
    return result


def check_projection(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    """ch'_{Λ^•P_n} * Π_j f_{m_j}[g_j] = Π_j f_{m_j}[g_j * ch'_{Λ^•P_j}] for every λ ⊢ n."""
    projector = ch_lambdaP_primed(n)
    variants: List[Tuple[str, Callable[[int], SymFunc], Callable[[int], SymFunc]]] = [
        ("h[h]", h, h),
        ("h[p]", h, p),
        ("h[l]", h, lyndon),
        ("p[h]", p, h),
        ("p[p]", p, p),
        ("p[l]", p, lyndon),
    ]
    for lam in partitions_of(n):
        form = lam.exponential()
        for name, outer, inner in variants:
            plain = [plethysm(outer(m), inner(j)) for j, m in form.multiplicities]
            twisted = [plethysm(outer(m), kronecker(inner(j), ch_lambdaP_primed(j))) for j, m in form.multiplicities]
            found = first_difference(
                n, kronecker(projector, _product(plain)), _product(twisted), f"projection {name} at {tuple(lam)}"
            )
            if found is not None:
                return found
    return None


def _first_negative(n: int, f: SymFunc, label: str) -> Optional[Discrepancy]:
    for lam, coeff in basis_convert(f, Basis.S):
        for k, c in coeff.items():
            if c < 0 or Fraction(c).denominator != 1:
                return Discrepancy(n, tuple(lam), k, str(Fraction(c)), "nonnegative integer", label)
    return None


def check_positivity(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    order = order or 2 * n
    return _first(
        _first_negative(n, ch_C(n), "ch_C Schur positive"),
        _first_negative(n, ch_D(n), "ch_D Schur positive"),
        _first_negative(n, ch_OT(n, order), "ch_OT Schur positive"),
    )


def _dimension_product(count: int) -> QSeries:
    return product_of_polynomials([QSeries((1, i)) for i in range(1, count + 1)])


def check_hilbert(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    return _first(
        _series_difference(n, hilbert(ch_C(n)), _dimension_product(n - 1), "dim C_n = Π(1+iq), i < n"),
        _series_difference(n, hilbert(ch_D(n)), _dimension_product(n - 2), "dim D_n = Π(1+iq), i < n-1"),
    )


def check_oracle(n: int, order: Optional[int]) -> Optional[Discrepancy]:
    """Formulas against the presentations; one degree past the top certifies vanishing."""
    comparisons = [
        (Variant.C, ch_C(n), n),
        (Variant.D, ch_D(n), max(n - 1, 1)),
        (Variant.M, ch_M(n, n + 1), max(n - 1, 1)),
    ]
    for variant, formula, max_degree in comparisons:
        brute = oracle_character(variant, n, max_degree)
        found = first_difference(n, brute, formula.truncate(max_degree + 1), f"oracle {variant.value}")
        if found is not None:
            return found
    if n <= 4:
        ot_degree = ORACLE_OT_MAX_DEGREE
        found = _first(
            first_difference(n, oracle_character(Variant.OT, n, ot_degree), ch_OT(n, ot_degree + 1), "oracle OT"),
            first_difference(n, oracle_T(n, ot_degree), ch_T(n, ot_degree + 1), "oracle T"),
        )
        if found is not None:
            return found
    return None


CHECKS: Dict[str, Callable[[int, Optional[int]], Optional[Discrepancy]]] = {
    "mpy": check_mpy,
    "cancellation": check_cancellation,
    "dn-two-formulas": check_dn_two_formulas,
    "ot-factorization": check_ot_factorization,
    "t-consistency": check_t_consistency,
    "genfun": check_genfun,
    "top-degree": check_top_degree,
    "subtraction": check_subtraction,
    "projection": check_projection,
    "positivity": check_positivity,
    "hilbert": check_hilbert,
    "oracle": check_oracle,
}
# checks whose n-th task already covers every smaller n
CUMULATIVE = {"genfun"}
CHECK_NAMES = tuple(CHECKS) + ("all",)


def run_check(name: str, n: int, order: Optional[int]) -> CheckOutcome:
    """Run one check at one n; failures and assertion errors become data."""
    start = time.perf_counter()
    try:
        found = CHECKS[name](n, order)
        message = "" if found is None else found.label
        passed = found is None
    except (IdentityFailure, NotPolynomial, TooLarge) as exc:
        found = None
        message = f"{type(exc).__name__}: {exc}"
        passed = False
    ms = (time.perf_counter() - start) * 1000
    return CheckOutcome(check=name, n=n, passed=passed, ms=ms, message=message, discrepancy=found)


def _run_in_worker(name: str, n: int, order: Optional[int], store: Optional[TableStore]) -> CheckOutcome:
    """run_check inside a joblib worker, which starts without the parent's table store."""
    set_table_store(store)
    hits, build_ms = stats.cache_hits, stats.build_ms
    outcome = run_check(name, n, order)
    outcome.cache_hits = stats.cache_hits - hits
    outcome.table_build_ms = stats.build_ms - build_ms
    return outcome


def _tasks(check: str, n_max: int, oracle: bool, oracle_n_max: int) -> List[Tuple[str, int]]:
    if check == "all":
        names = [name for name in CHECKS if name != "oracle"]
    else:
        names = [check]
    if oracle and "oracle" not in names:
        names.append("oracle")
    tasks = []
    for name in names:
        limit = oracle_n_max if name == "oracle" else n_max
        cap = CHECK_N_LIMITS.get(name)
        if cap is not None and limit > cap:
            logger.info(f"{name} runs only up to n={cap}")
            limit = cap
        if name in CUMULATIVE:
            tasks.append((name, limit))
        else:
            tasks.extend((name, n) for n in range(1, limit + 1))
    return tasks


def verify(
    check: str,
    n_max: int,
    order: Optional[int] = None,
    oracle: bool = False,
    oracle_n_max: int = 4,
    jobs: int = 1,
) -> VerificationReport:
    """
    Run a named check (or ``all``) for n = 1..n_max.

    Args:
        check: One of CHECK_NAMES
        n_max: Largest n
        order: Truncation order override; each check has its own default
        oracle: Also compare against the presentations
        oracle_n_max: Largest n for the oracle comparison
        jobs: Number of joblib workers for independent (check, n) tasks

    Returns:
        VerificationReport with one CheckOutcome per task
    """
    if check not in CHECK_NAMES:
        raise ValueError(f"Unknown check {check!r}; expected one of {CHECK_NAMES}")
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    start = time.perf_counter()
    tasks = _tasks(check, n_max, oracle or check == "oracle", oracle_n_max)
    logger.info(f"Running {len(tasks)} verification tasks with {jobs} job(s)")
    if jobs == 1:
        details = [run_check(name, n, order) for name, n in tasks]
    else:
        store = table_store()
        details = Parallel(n_jobs=jobs)(delayed(_run_in_worker)(name, n, order, store) for name, n in tasks)
        stats.cache_hits += sum(outcome.cache_hits for outcome in details)
        stats.build_ms += sum(outcome.table_build_ms for outcome in details)
    for outcome in details:
        status = "pass" if outcome.passed else "FAIL"
        logger.info(f"{outcome.check} n={outcome.n}: {status} ({outcome.ms:.1f} ms) {outcome.message}")
    failures = [outcome for outcome in details if not outcome.passed]
    elapsed = (time.perf_counter() - start) * 1000
    return VerificationReport(
        check=check,
        passed=not failures,
        n_max=max((outcome.n for outcome in details), default=0),
        elapsed_ms=elapsed,
        discrepancy=next((f.discrepancy for f in failures if f.discrepancy is not None), None),
        details=list(details),
    )
