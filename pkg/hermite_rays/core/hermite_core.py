"""
Exact ground truth for Hermite polynomials H_n.

Values are carried as signed logarithms so that H_n(x) stays representable
far beyond the double range (H_n grows like exp((n/2) ln 2n)). Evaluation uses
the three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}; exact zeros come from
Sturm-count bisection on the Jacobi matrix of the Hermite weight.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from numpy.polynomial import hermite as np_hermite
from scipy.integrate import simpson

from hermite_rays.cfg import Cfg
from hermite_rays.errors import InvalidArgumentError, NumericalFailureError, raise_for_non_finite, \
    raise_for_non_integer
from hermite_rays.typedefs import Number
from hermite_rays.util import get_config_value

_LOG = logging.getLogger(__name__)

# relative magnitude difference below which a subtraction counts as cancelled
CANCELLATION_REL = 1e-15
# Newton distance |H_n / H_n'| below which an evaluation is flagged as sitting on a zero
NEAR_ZERO_ABS = 1e-12

MAX_EVAL_ORDER = 10 ** 6
MAX_ZEROS_ORDER = 2000
MAX_QUADRATURE_ORDER = 12

_MAX_BISECTIONS = 200
_PIVMIN = 1e-290
_MAX_LOG = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class SignedLogValue:
    """
    A real number stored as a sign in {-1, 0, +1} and the natural log of its
    magnitude. ``log_abs`` is meaningless when ``sign`` is 0.

    ``cancelled`` marks a zero produced by (near) cancellation in the
    operation that created this value; it does not take part in equality.
    """
    sign: int
    log_abs: float
    cancelled: bool = field(default=False, compare=False)

    @classmethod
    def zero(cls, cancelled: bool = False) -> 'SignedLogValue':
        return cls(0, 0.0, cancelled)

    @classmethod
    def one(cls) -> 'SignedLogValue':
        return cls(1, 0.0)

    @classmethod
    def from_real(cls, value: float) -> 'SignedLogValue':
        raise_for_non_finite('value', value)
        if value == 0:
            return cls.zero()
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_real(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.log_abs > _MAX_LOG:
            return self.sign * math.inf
        return self.sign * math.exp(self.log_abs)

    def __neg__(self) -> 'SignedLogValue':
        return SignedLogValue(-self.sign, self.log_abs, self.cancelled)

    def __mul__(self, other: 'SignedLogValue') -> 'SignedLogValue':
        return slv_mul(self, other)

    def __add__(self, other: 'SignedLogValue') -> 'SignedLogValue':
        return slv_add(self, other)

    def __sub__(self, other: 'SignedLogValue') -> 'SignedLogValue':
        return slv_add(self, -other)

    def __repr__(self):
        if self.sign == 0:
            return 'SignedLogValue(0)'
        return f'SignedLogValue({"+" if self.sign > 0 else "-"}, {self.log_abs!r})'


def slv_mul(a: SignedLogValue, b: SignedLogValue) -> SignedLogValue:
    if a.sign == 0 or b.sign == 0:
        return SignedLogValue.zero()
    return SignedLogValue(a.sign * b.sign, a.log_abs + b.log_abs)


def slv_add(a: SignedLogValue, b: SignedLogValue) -> SignedLogValue:
    sign, log_abs, cancelled = _add_raw(a.sign, a.log_abs, b.sign, b.log_abs)
    return SignedLogValue(sign, log_abs, cancelled)


def _add_raw(sign_a: int, log_a: float, sign_b: int, log_b: float) -> Tuple[int, float, bool]:
    if sign_b == 0:
        return sign_a, log_a, False
    if sign_a == 0:
        return sign_b, log_b, False
    if log_a < log_b:
        sign_a, log_a, sign_b, log_b = sign_b, log_b, sign_a, log_a
    delta = log_b - log_a
    if sign_a == sign_b:
        return sign_a, log_a + math.log1p(math.exp(delta)), False
    # 1 - |b|/|a|
    remainder = -math.expm1(delta)
    if remainder < CANCELLATION_REL:
        return 0, 0.0, True
    return sign_a, log_a + math.log(remainder), False


def _hermite_raw(n: int, x: float) -> Tuple[int, float, int, float, bool]:
    """
    H_n(x) and H_{n-1}(x) as raw (sign, log) pairs plus the cancellation flag.

    The flag is set when the final step cancels outright or when the Newton
    distance |H_n / (2n H_{n-1})| is within ``NEAR_ZERO_ABS * max(1, |x|)``:
    there the computed H_n is dominated by recurrence round-off.
    """
    if n == 0:
        return 1, 0.0, 0, 0.0, False
    sign_x = (x > 0) - (x < 0)
    log_x = math.log(2.0 * abs(x)) if sign_x else 0.0
    s_prev, l_prev = 1, 0.0
    s_cur, l_cur = sign_x, log_x
    cancelled = False
    for m in range(1, n):
        if sign_x and s_cur:
            s_a, l_a = sign_x * s_cur, log_x + l_cur
        else:
            s_a, l_a = 0, 0.0
        s_next, l_next, cancelled = _add_raw(s_a, l_a, -s_prev, math.log(2.0 * m) + l_prev)
        s_prev, l_prev = s_cur, l_cur
        s_cur, l_cur = s_next, l_next
    if not cancelled and s_cur and s_prev:
        log_distance = l_cur - l_prev - math.log(2.0 * n)
        cancelled = log_distance <= math.log(NEAR_ZERO_ABS * max(1.0, abs(x)))
    return s_cur, l_cur, s_prev, l_prev, cancelled


def _check_order(n: int, maximum: int):
    raise_for_non_integer('n', n, minimum=0)
    if n > maximum:
        raise InvalidArgumentError(f'n must not exceed {maximum}, got {n}')


def hermite_eval_exact(n: int, x: float) -> SignedLogValue:
    _check_order(n, MAX_EVAL_ORDER)
    raise_for_non_finite('x', x)
    sign, log_abs, _, _, cancelled = _hermite_raw(n, x)
    return SignedLogValue(sign, log_abs, cancelled)


def hermite_pair_exact(n: int, x: float) -> Tuple[SignedLogValue, SignedLogValue]:
    """H_n(x) and H_{n-1}(x) from one recurrence pass, n >= 1."""
    _check_order(n, MAX_EVAL_ORDER)
    if n < 1:
        raise InvalidArgumentError('n must be at least 1')
    raise_for_non_finite('x', x)
    sign, log_abs, sign_prev, log_prev, cancelled = _hermite_raw(n, x)
    return SignedLogValue(sign, log_abs, cancelled), SignedLogValue(sign_prev, log_prev)


def hermite_derivative_exact(n: int, x: float) -> SignedLogValue:
    """H_n'(x) = 2n H_{n-1}(x)."""
    _check_order(n, MAX_EVAL_ORDER)
    raise_for_non_finite('x', x)
    if n == 0:
        return SignedLogValue.zero()
    sign, log_abs, _, _, cancelled = _hermite_raw(n - 1, x)
    if sign == 0:
        return SignedLogValue.zero(cancelled)
    return SignedLogValue(sign, log_abs + math.log(2.0 * n), cancelled)


def hermite_zeros_exact(n: int, abs_tol: Optional[float] = None) -> List[float]:
    """
    All zeros of H_n in ascending order.

    The zeros are the eigenvalues of the symmetric tridiagonal matrix with zero
    diagonal and off-diagonal sqrt(k/2), k = 1..n-1. Every eigenvalue is
    bisected simultaneously inside [-sqrt(2n+1), sqrt(2n+1)], counting the
    eigenvalues below each midpoint with the LDL^T Sturm sequence.
    """
    _check_order(n, MAX_ZEROS_ORDER)
    if n < 1:
        raise InvalidArgumentError('n must be at least 1')
    if abs_tol is None:
        abs_tol = float(get_config_value(Cfg.get_section('zeros'), 'exact_abs_tol', value_type=Number,
                                         key_path='zeros'))
    if not abs_tol > 0:
        raise InvalidArgumentError(f'abs_tol must be positive, got {abs_tol!r}')
    if n == 1:
        return [0.0]

    off_diagonal_sq = np.arange(1, n, dtype=np.float64) / 2.0
    bound = math.sqrt(2.0 * n + 1.0)
    lo = np.full(n, -bound)
    hi = np.full(n, bound)
    rank = np.arange(1, n + 1)
    for step in range(_MAX_BISECTIONS):
        open_ = hi - lo > 2.0 * abs_tol
        mid = 0.5 * (lo + hi)
        open_ &= (mid > lo) & (mid < hi)
        if not np.any(open_):
            _LOG.debug(f'Sturm bisection for n = {n} finished after {step} steps')
            break
        below = _sturm_count(off_diagonal_sq, mid) >= rank
        hi = np.where(open_ & below, mid, hi)
        lo = np.where(open_ & ~below, mid, lo)
    else:
        raise NumericalFailureError(f'Sturm bisection for n = {n} did not converge '
                                    f'in {_MAX_BISECTIONS} steps')
    return (0.5 * (lo + hi)).tolist()


def _sturm_count(off_diagonal_sq: np.ndarray, shifts: np.ndarray) -> np.ndarray:
    """Number of Jacobi-matrix eigenvalues below each shift."""
    q = -shifts
    q = np.where(np.abs(q) < _PIVMIN, -_PIVMIN, q)
    count = (q < 0).astype(np.int64)
    for e2 in off_diagonal_sq:
        q = -shifts - e2 / q
        q = np.where(np.abs(q) < _PIVMIN, -_PIVMIN, q)
        count += q < 0
    return count


def orthogonality_integral(m: int, n: int, half_width: float = 10.0, panels: int = 20000) -> float:
    """
    Composite Simpson approximation of the integral of exp(-x^2) H_m(x) H_n(x)
    over [-half_width, half_width], in plain doubles.
    """
    _check_order(m, MAX_QUADRATURE_ORDER)
    _check_order(n, MAX_QUADRATURE_ORDER)
    raise_for_non_finite('half_width', half_width)
    if half_width < 8:
        raise InvalidArgumentError(f'half_width must be at least 8, got {half_width}')
    raise_for_non_integer('panels', panels, minimum=2000)
    if panels % 2:
        raise InvalidArgumentError(f'panels must be even, got {panels}')
    x = np.linspace(-half_width, half_width, panels + 1)
    h_m = np_hermite.hermval(x, [0] * m + [1])
    h_n = np_hermite.hermval(x, [0] * n + [1])
    return float(simpson(np.exp(-x * x) * h_m * h_n, x=x))
