"""
Double-precision Airy functions Ai, Bi and integer-order Bessel functions J_j.

Ai and Bi are summed from their Maclaurin series for ``|x| <= series_switch``
and from the standard u_k asymptotic expansions beyond. The series is summed
with mpmath at a working precision that covers the cancellation between its
two halves, then rounded once to double.

J_j is computed by Miller's backward recurrence, vectorised over many
(order, argument) pairs with numpy so that a whole Kapteyn diagonal
J_j(c*j), j = 1..M, costs a single sweep.
"""

import functools
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath
import numpy as np

from hermite_rays.cfg import Cfg
from hermite_rays.errors import InvalidArgumentError, raise_for_non_finite, raise_for_non_integer
from hermite_rays.typedefs import Number
from hermite_rays.util import get_config_value

_LOG = logging.getLogger(__name__)

# Ai(0) = 3^(-2/3)/Gamma(2/3) and -Ai'(0) = 3^(-1/3)/Gamma(1/3)
AIRY_C1 = '0.35502805388781723926'
AIRY_C2 = '0.25881940379280679840'

_SERIES_BASE_DPS = 30
_SERIES_MAX_TERMS = 1000

_LOG_2_SQRT_PI = math.log(2.0 * math.sqrt(math.pi))
_LOG_SQRT_PI = math.log(math.sqrt(math.pi))
_LOG_2 = math.log(2.0)
_MAX_LOG = math.log(np.finfo(float).max)

# rescale Miller recurrences before they can overflow
_RESCALE_ABOVE = 1e250
_RESCALE_BY = 1e-250
# below this 2m/x times a rescaled value could overflow in a single step
_TINY_ARGUMENT = 1e-30


@dataclass(frozen=True)
class SpecFunConfig:
    """
    Accuracy knobs of the Airy evaluators.

    :param series_switch: |x| up to which the Maclaurin series is used
    :param asym_terms: number of u_k terms kept in the asymptotic expansions
    :param target_abs_tol: absolute accuracy the configuration is meant to reach;
        a configuration whose first omitted asymptotic term at the switch point
        exceeds it is accepted but logged
    """
    series_switch: float
    asym_terms: int
    target_abs_tol: float

    def __post_init__(self):
        if not (isinstance(self.series_switch, Number) and self.series_switch > 0):
            raise InvalidArgumentError(f'series_switch must be positive, got {self.series_switch!r}')
        raise_for_non_integer('asym_terms', self.asym_terms, minimum=1)
        if not (isinstance(self.target_abs_tol, Number) and self.target_abs_tol > 0):
            raise InvalidArgumentError(f'target_abs_tol must be positive, got {self.target_abs_tol!r}')
        if self.tail_bound() > self.target_abs_tol:
            _LOG.warning(f'asymptotic tail {self.tail_bound():.3g} at |x| = {self.series_switch} '
                         f'exceeds target_abs_tol {self.target_abs_tol:.3g}')

    def tail_bound(self) -> float:
        """Relative size of the first omitted asymptotic term at the switch point."""
        zeta = 2.0 / 3.0 * self.series_switch ** 1.5
        return airy_u_coefficients(self.asym_terms + 1)[-1] / zeta ** self.asym_terms

    @classmethod
    def default(cls) -> 'SpecFunConfig':
        section = Cfg.get_section('specfun')
        return cls(series_switch=float(get_config_value(section, 'series_switch', value_type=Number,
                                                        key_path='specfun')),
                   asym_terms=get_config_value(section, 'asym_terms', value_type=int, key_path='specfun'),
                   target_abs_tol=float(get_config_value(section, 'target_abs_tol', value_type=Number,
                                                         key_path='specfun')))


@functools.lru_cache(maxsize=None)
def airy_u_coefficients(count: int) -> Tuple[float, ...]:
    """
    The first ``count`` coefficients u_0 = 1,
    u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)).
    """
    u = [1.0]
    for k in range(1, count):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1)))
    return tuple(u[:count])


def airy_ai(x: float, cfg: Optional[SpecFunConfig] = None) -> float:
    sign, log_abs = airy_ai_log(x, cfg=cfg)
    if sign == 0:
        return 0.0
    return sign * math.exp(log_abs)


def airy_bi(x: float, cfg: Optional[SpecFunConfig] = None) -> float:
    raise_for_non_finite('x', x)
    cfg = cfg or SpecFunConfig.default()
    if abs(x) <= cfg.series_switch:
        return _airy_maclaurin(x)[1]
    if x > 0:
        zeta = 2.0 / 3.0 * x ** 1.5
        u = airy_u_coefficients(cfg.asym_terms)
        total = sum(u_k / zeta ** k for k, u_k in enumerate(u))
        log_abs = zeta - _LOG_SQRT_PI - 0.25 * math.log(x) + math.log(total)
        return math.exp(log_abs) if log_abs < _MAX_LOG else math.inf
    return _airy_oscillatory(-x, cfg.asym_terms)[1]


def airy_ai_log(x: float, cfg: Optional[SpecFunConfig] = None) -> Tuple[int, float]:
    """
    Sign and natural log of |Ai(x)|.

    Stays finite where Ai itself underflows, which phi3 and phi4 rely on
    far out in the decaying tail. Returns ``(0, -inf)`` for an exact zero.
    """
    raise_for_non_finite('x', x)
    cfg = cfg or SpecFunConfig.default()
    if abs(x) <= cfg.series_switch:
        value = _airy_maclaurin(x)[0]
    elif x > 0:
        zeta = 2.0 / 3.0 * x ** 1.5
        u = airy_u_coefficients(cfg.asym_terms)
        total = sum((-1) ** k * u_k / zeta ** k for k, u_k in enumerate(u))
        return 1, -zeta - _LOG_2_SQRT_PI - 0.25 * math.log(x) + math.log(total)
    else:
        value = _airy_oscillatory(-x, cfg.asym_terms)[0]
    if value == 0.0:
        return 0, -math.inf
    return (1 if value > 0 else -1), math.log(abs(value))


def _airy_maclaurin(x: float) -> Tuple[float, float]:
    # Ai = c1 f - c2 g, Bi = sqrt(3) (c1 f + c2 g)
    digits = _SERIES_BASE_DPS + int(math.ceil(4.0 / 3.0 * abs(x) ** 1.5 / math.log(10.0)))
    with mpmath.workdps(digits):
        z = mpmath.mpf(x)
        z3 = z * z * z
        f = t = mpmath.mpf(1)
        g = s = z
        eps = mpmath.mpf(10) ** (-digits)
        for k in range(1, _SERIES_MAX_TERMS):
            t = t * z3 / ((3 * k - 1) * (3 * k))
            s = s * z3 / ((3 * k) * (3 * k + 1))
            f += t
            g += s
            if abs(t) + abs(s) <= eps * (abs(f) + abs(g)):
                break
        c1 = mpmath.mpf(AIRY_C1)
        c2 = mpmath.mpf(AIRY_C2)
        return float(c1 * f - c2 * g), float(mpmath.sqrt(3) * (c1 * f + c2 * g))


def _airy_oscillatory(z: float, terms: int) -> Tuple[float, float]:
    """Ai(-z) and Bi(-z) for large positive z."""
    zeta = 2.0 / 3.0 * z ** 1.5
    u = airy_u_coefficients(terms)
    even = 0.0
    odd = 0.0
    for k, u_k in enumerate(u):
        term = u_k / zeta ** k
        if k % 2 == 0:
            even += term if (k // 2) % 2 == 0 else -term
        else:
            odd += term if (k // 2) % 2 == 0 else -term
    phase = zeta - 0.25 * math.pi
    c, s = math.cos(phase), math.sin(phase)
    scale = 1.0 / (math.sqrt(math.pi) * z ** 0.25)
    return scale * (c * even + s * odd), scale * (c * odd - s * even)


def bessel_j(order: int, x: float) -> float:
    raise_for_non_integer('order', order, minimum=0)
    raise_for_non_finite('x', x)
    if x < 0:
        raise InvalidArgumentError(f'x must be non-negative, got {x!r}')
    return float(bessel_j_array(np.array([order]), np.array([x]))[0])


def bessel_j_array(orders, xs, offset_scale: float = 1.0) -> np.ndarray:
    """
    J_order(x) for broadcast arrays of integer orders and non-negative arguments.

    Each element runs its own backward recurrence, started at
    ``max(order, ceil(x)) + ceil(offset_scale * (20 + 4 sqrt(max(order, x))))``
    and normalised with J_0(x) + 2 sum_k J_2k(x) = 1. Arguments below ``1e-30``
    take the leading power term (x/2)^order / order!, exact to double precision
    there.
    """
    orders, xs = np.broadcast_arrays(np.asarray(orders), np.asarray(xs, dtype=np.float64))
    if orders.size and not np.issubdtype(orders.dtype, np.integer):
        raise InvalidArgumentError('Bessel orders must be integers')
    if not np.all(np.isfinite(xs)):
        raise InvalidArgumentError('Bessel arguments must be finite')
    if np.any(xs < 0) or np.any(orders < 0):
        raise InvalidArgumentError('Bessel orders and arguments must be non-negative')
    if not offset_scale > 0:
        raise InvalidArgumentError(f'offset_scale must be positive, got {offset_scale!r}')

    shape = orders.shape
    order = orders.astype(np.int64).ravel()
    x = xs.ravel()
    result = np.zeros(x.shape)
    at_origin = x == 0.0
    result[at_origin & (order == 0)] = 1.0
    tiny = ~at_origin & (x < _TINY_ARGUMENT)
    for i in np.flatnonzero(tiny):
        m = int(order[i])
        result[i] = math.exp(m * (math.log(x[i]) - _LOG_2) - math.lgamma(m + 1.0)) if m else 1.0
    live = ~at_origin & ~tiny
    if not np.any(live):
        return result.reshape(shape)

    order = order[live]
    x = x[live]
    reach = np.maximum(order, x)
    start = (np.maximum(order, np.ceil(x)) + np.ceil(offset_scale * (20.0 + 4.0 * np.sqrt(reach)))).astype(np.int64)

    cur = np.zeros(x.shape)
    nxt = np.zeros(x.shape)
    out = np.zeros(x.shape)
    even_sum = np.zeros(x.shape)
    for m in range(int(start.max()), 0, -1):
        cur[start == m] = 1.0
        hit = order == m
        if np.any(hit):
            out[hit] = cur[hit]
        if m % 2 == 0:
            even_sum += cur
        cur, nxt = (2.0 * m / x) * cur - nxt, cur
        huge = np.abs(cur) > _RESCALE_ABOVE
        if np.any(huge):
            factor = np.where(huge, _RESCALE_BY, 1.0)
            cur *= factor
            nxt *= factor
            out *= factor
            even_sum *= factor
    out[order == 0] = cur[order == 0]
    result[live] = out / (cur + 2.0 * even_sum)
    return result.reshape(shape)
