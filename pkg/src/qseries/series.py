"""
Truncated power series in q with exact rational coefficients.

A QSeries stores the coefficients of q^0, q^1, ... as ints or Fractions. The
truncation order D means the coefficients of q^D and above are unknown; an
order of None marks an exact polynomial.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class ZeroConstantTerm(ValueError):
    """Raised when inverting a series whose constant term vanishes."""


class NotPolynomial(ValueError):
    """Raised when a series that must be a polynomial has a nonzero tail."""


@dataclass(frozen=True)
class NegateQ:
    """q -> -q."""


@dataclass(frozen=True)
class PowerQ:
    """q -> q^k."""
    k: int


def _min_order(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _trimmed(coeffs: List[Scalar]) -> Tuple[Scalar, ...]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class QSeries:
    """Formal power series in q, truncated at ``order`` (None = exact)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar] = (), order: Optional[int] = None):
        if order is not None and order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}")
        values = [c if isinstance(c, (int, Fraction)) else Fraction(c) for c in coeffs]
        if order is not None:
            values = values[:order]
        self.coeffs: Tuple[Scalar, ...] = _trimmed(values)
        self.order: Optional[int] = order

    @classmethod
    def _raw(cls, coeffs: Tuple[Scalar, ...], order: Optional[int]) -> "QSeries":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.order = order
        return obj

    # --- Constructors ---

    @classmethod
    def zero(cls, order: Optional[int] = None) -> "QSeries":
        return cls._raw((), order)

    @classmethod
    def one(cls, order: Optional[int] = None) -> "QSeries":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c: Scalar, order: Optional[int] = None) -> "QSeries":
        return cls((c,), order)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, order: Optional[int] = None) -> "QSeries":
        """c·q^k."""
        return cls([0] * k + [c], order)

    # --- Inspection ---

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        if self.order is not None and k >= self.order:
            raise IndexError(f"Coefficient of q^{k} is beyond truncation order {self.order}")
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.order is None

    @property
    def constant_term(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    def degree(self) -> int:
        """Largest index of a known nonzero coefficient, -1 for zero."""
        return len(self.coeffs) - 1

    def items(self):
        """(power, coefficient) pairs for the nonzero coefficients."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def truncate(self, order: Optional[int]) -> "QSeries":
        new_order = _min_order(self.order, order)
        if new_order == self.order:
            return self
        return QSeries._raw(_trimmed(list(self.coeffs[:new_order])), new_order)

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality of all coefficients known to both series."""
        order = _min_order(self.order, other.order)
        if order is None:
            return self.coeffs == other.coeffs
        return _trimmed(list(self.coeffs[:order])) == _trimmed(list(other.coeffs[:order]))

    # --- Arithmetic ---

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries._raw(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return qs_invert(self) ** (-k)
        result = QSeries.one(self.order)
        for _ in range(k):
            result = qs_mul(result, self)
        return result

    def scale(self, c: Scalar) -> "QSeries":
        if not c:
            return QSeries.zero(self.order)
        return QSeries._raw(tuple(c * x for x in self.coeffs), self.order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k; the truncation order moves up with the coefficients."""
        if k < 0:
            raise ValueError(f"shift needs k >= 0, got {k}")
        order = None if self.order is None else self.order + k
        if not self.coeffs:
            return QSeries._raw((), order)
        return QSeries._raw((0,) * k + self.coeffs, order)

    def substitute(self, mode) -> "QSeries":
        return qs_substitute(self, mode)

    def negate_q(self) -> "QSeries":
        return qs_substitute(self, NegateQ())

    def exact_polynomial(self, max_degree: int) -> "QSeries":
        return qs_exact_polynomial(self, max_degree)

    def evaluate_at_one(self) -> Scalar:
        """Sum of the coefficients; only meaningful for exact polynomials."""
        if self.order is not None:
            raise NotPolynomial("Cannot evaluate a truncated series at q = 1")
        return sum(self.coeffs)

    def __repr__(self) -> str:
        return f"QSeries({self.to_str()}, order={self.order})"

    def to_str(self, var: str = "q") -> str:
        parts = []
        for k, c in self.items():
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        if not parts:
            text = "0"
        else:
            text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, body in parts[1:]:
                text += f" {sign} {body}"
        if self.order is not None:
            text += f" + O({var}^{self.order})"
        return text


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficientwise sum, truncated at the smaller order."""
    order = _min_order(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    values = list(x)
    for i, c in enumerate(y):
        values[i] += c
    if order is not None:
        values = values[:order]
    return QSeries._raw(_trimmed(values), order)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, truncated at the smaller order."""
    order = _min_order(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return QSeries._raw((), order)
    length = len(x) + len(y) - 1
    if order is not None:
        length = min(length, order)
    values: List[Scalar] = [0] * length
    ylen = len(y)
    for i, xi in enumerate(x):
        if i >= length:
            break
        if not xi:
            continue
        for j in range(min(ylen, length - i)):
            yj = y[j]
            if yj:
                values[i + j] += xi * yj
    return QSeries._raw(_trimmed(values), order)


def qs_linear_combination(pairs: Iterable[Tuple[Scalar, QSeries]]) -> Optional[QSeries]:
    """
    Σ c_i·a_i in a single pass.

    Args:
        pairs: (scalar, series) pairs

    Returns:
        The combination, or None when ``pairs`` is empty
    """
    values: List[Scalar] = []
    order: Optional[int] = None
    seen = False
    for c, series in pairs:
        if not seen:
            order = series.order
            seen = True
        else:
            order = _min_order(order, series.order)
        if not c:
            continue
        coeffs = series.coeffs
        if len(coeffs) > len(values):
            values.extend([0] * (len(coeffs) - len(values)))
        for i, x in enumerate(coeffs):
            if x:
                values[i] += c * x
    if not seen:
        return None
    if order is not None:
        values = values[:order]
    return QSeries._raw(_trimmed(values), order)


def qs_invert(a: QSeries, order: Optional[int] = None) -> QSeries:
    """
    Multiplicative inverse as a truncated series.

    Args:
        a: Series with nonzero constant term
        order: Optional truncation order to impose (needed when ``a`` is an
            exact non-constant polynomial)

    Returns:
        b with a·b = 1 up to the truncation order
    """
    a = a.truncate(order)
    a0 = a.constant_term
    if not a0:
        raise ZeroConstantTerm(f"Cannot invert {a.to_str()}: constant term is zero")
    if len(a.coeffs) == 1:
        return QSeries._raw((Fraction(1) / a0,), a.order)
    if a.order is None:
        raise ValueError("Inverting a non-constant exact polynomial needs a truncation order")
    inv0 = Fraction(1) / a0
    values: List[Scalar] = [inv0]
    x = a.coeffs
    for k in range(1, a.order):
        acc = 0
        for i in range(1, min(k, len(x) - 1) + 1):
            if x[i]:
                acc += x[i] * values[k - i]
        values.append(-acc * inv0)
    return QSeries._raw(_trimmed(values), a.order)


def qs_substitute(a: QSeries, mode) -> QSeries:
    """
    Apply q -> -q (NegateQ) or q -> q^k (PowerQ) to every coefficient.

    The truncation order is kept, so a PowerQ(k) image drops whatever it
    pushes past the original order.
    """
    if isinstance(mode, NegateQ):
        return QSeries._raw(tuple(-c if i % 2 else c for i, c in enumerate(a.coeffs)), a.order)
    if isinstance(mode, PowerQ):
        k = mode.k
        if k < 1:
            raise ValueError(f"PowerQ needs k >= 1, got {k}")
        if k == 1 or not a.coeffs:
            return a
        length = (len(a.coeffs) - 1) * k + 1
        if a.order is not None:
            length = min(length, a.order)
        values: List[Scalar] = [0] * length
        for i, c in enumerate(a.coeffs):
            if i * k >= length:
                break
            values[i * k] = c
        return QSeries._raw(_trimmed(values), a.order)
    raise TypeError(f"Unknown substitution mode {mode!r}")


def qs_exact_polynomial(a: QSeries, max_degree: int) -> QSeries:
    """
    Certify that ``a`` is a polynomial of degree <= max_degree.

    Args:
        a: Series believed to be a polynomial
        max_degree: Degree bound; must be below the truncation order

    Returns:
        The same coefficients as an exact polynomial (order None)

    Raises:
        NotPolynomial: If the truncation order cannot certify the bound or a
            coefficient above max_degree is nonzero
    """
    if a.order is not None and max_degree >= a.order:
        raise NotPolynomial(
            f"Truncation order {a.order} is too small to certify degree <= {max_degree}"
        )
    if a.degree() > max_degree:
        offending = [k for k, _ in a.items() if k > max_degree]
        raise NotPolynomial(
            f"Nonzero coefficient of q^{offending[0]} above degree bound {max_degree}"
        )
    return QSeries._raw(a.coeffs, None)


def one_minus_q(order: Optional[int] = None) -> QSeries:
    return QSeries((1, -1), order)


def geometric(order: int) -> QSeries:
    """1/(1-q) truncated at ``order``."""
    return qs_invert(one_minus_q(order))


def product_of_polynomials(factors: Sequence[QSeries]) -> QSeries:
    result = QSeries.one()
    for factor in factors:
        result = qs_mul(result, factor)
    return result
