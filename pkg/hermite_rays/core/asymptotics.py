"""
Closed-form asymptotic approximations of H_n(x) in the three regimes.

* outer (|x| > sqrt(2n)): phi1, phi2, built from the eikonal solution
  f_outer and the transport solution g_outer
* transition layer (x near +-sqrt(2n)): phi3, phi4, Airy functions of the
  stretched coordinate beta = (x - sqrt(2n)) n^(1/6)
* oscillatory (|x| < sqrt(2n)): phi5 = phi_oscillatory(arcsin(x / sqrt(2n)))

Every approximant returns a ``SignedLogValue``; exponential prefactors are
only ever formed as logarithms.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from hermite_rays.cfg import Cfg
from hermite_rays.core.hermite_core import SignedLogValue
from hermite_rays.core.specfun import airy_ai_log
from hermite_rays.errors import DomainError, InvalidArgumentError, NumericalFailureError, raise_for_non_finite, \
    raise_for_non_integer
from hermite_rays.typedefs import Number
from hermite_rays.util import get_config_value

_LOG = logging.getLogger(__name__)

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SQRT2 = math.sqrt(2.0)


class Region(Enum):
    OUTER_RIGHT = 'OuterRight'
    OUTER_LEFT = 'OuterLeft'
    TRANSITION_RIGHT = 'TransitionRight'
    TRANSITION_LEFT = 'TransitionLeft'
    OSCILLATORY = 'Oscillatory'

    @property
    def is_transition(self) -> bool:
        return self in (Region.TRANSITION_RIGHT, Region.TRANSITION_LEFT)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RegionConfig:
    beta_cut: float = 2.0

    def __post_init__(self):
        if not (isinstance(self.beta_cut, Number) and math.isfinite(self.beta_cut) and self.beta_cut > 0):
            raise InvalidArgumentError(f'beta_cut must be positive, got {self.beta_cut!r}')

    @classmethod
    def default(cls) -> 'RegionConfig':
        section = Cfg.get_section('region')
        return cls(beta_cut=float(get_config_value(section, 'beta_cut', value_type=Number, key_path='region')))


@dataclass(frozen=True)
class EvalResult:
    """
    One automatic evaluation.

    ``beta`` is the stretch coordinate of the nearer turning point
    (of -x for TransitionLeft); ``theta`` is NaN outside the oscillatory regime.
    """
    value: SignedLogValue
    region: Region
    beta: float
    theta: float = math.nan
    method: str = field(default='')


def _check_n_real(n: float):
    raise_for_non_finite('n', n)
    if n < 0:
        raise InvalidArgumentError(f'n must be non-negative, got {n!r}')


def _check_n_int(n: int, minimum: int = 0):
    raise_for_non_integer('n', n, minimum=minimum)


def _turning_point(n: float) -> float:
    return math.sqrt(2.0 * n)


def sigma(x: float, n: float) -> float:
    raise_for_non_finite('x', x)
    _check_n_real(n)
    edge = _turning_point(n)
    if abs(x) < edge:
        raise InvalidArgumentError(f'sigma requires |x| >= sqrt(2n), got x = {x!r}, n = {n!r}')
    d = x * x - 2.0 * n
    if d <= 0:
        # |x| just above sqrt(2n) can still round x^2 - 2n to zero
        d = (abs(x) - edge) * (abs(x) + edge)
    return math.sqrt(d)


def _check_outer(x: float, n: float):
    raise_for_non_finite('x', x)
    _check_n_real(n)
    if not x > _turning_point(n):
        raise DomainError(f'outer requires x > sqrt(2n) = {_turning_point(n)!r}, got x = {x!r}')


def f_outer(x: float, n: float) -> float:
    """Eikonal part (x^2 - sigma x - n)/2 + n ln(x + sigma) of the outer solution."""
    _check_outer(x, n)
    s = sigma(x, n)
    # x^2 - sigma x = 2nx / (x + sigma)
    return (2.0 * n * x / (x + s) - n) / 2.0 + n * math.log(x + s)


def g_outer(x: float, n: float) -> float:
    """Transport part (1/2) ln((x/sigma + 1)/2) of the outer solution."""
    _check_outer(x, n)
    s = sigma(x, n)
    return 0.5 * math.log(0.5 * (x / s + 1.0))


def phi1(x: float, n: int) -> SignedLogValue:
    _check_n_int(n)
    return SignedLogValue(1, f_outer(x, n) + g_outer(x, n))


def phi2(x: float, n: int) -> SignedLogValue:
    """Mirror of phi1 for x < -sqrt(2n), with sign (-1)^n."""
    _check_n_int(n)
    raise_for_non_finite('x', x)
    if not x < -_turning_point(n):
        raise DomainError(f'outer requires x < -sqrt(2n) = {-_turning_point(n)!r}, got x = {x!r}')
    return SignedLogValue(-1 if n % 2 else 1, f_outer(-x, n) + g_outer(-x, n))


def beta_of(x: float, n: int) -> float:
    raise_for_non_finite('x', x)
    _check_n_int(n, minimum=1)
    return (x - _turning_point(n)) * n ** (1.0 / 6.0)


def log_transition_prefactor(x: float, n: int) -> float:
    """ln of exp[(n/2) ln(2n) - 3n/2 + sqrt(2n) x] sqrt(2 pi) n^(1/6)."""
    raise_for_non_finite('x', x)
    _check_n_int(n, minimum=1)
    return 0.5 * n * math.log(2.0 * n) - 1.5 * n + _turning_point(n) * x + _HALF_LOG_2PI + math.log(n) / 6.0


def phi3(x: float, n: int) -> SignedLogValue:
    beta = beta_of(x, n)
    sign, log_ai = airy_ai_log(_SQRT2 * beta)
    if sign == 0:
        return SignedLogValue.zero()
    return SignedLogValue(sign, log_transition_prefactor(x, n) + log_ai)


def phi4(x: float, n: int) -> SignedLogValue:
    """Mirror of phi3 at x = -sqrt(2n): (-1)^n phi3(-x)."""
    mirrored = phi3(-x, n)
    return -mirrored if n % 2 else mirrored


def phi_oscillatory(theta: float, n: int) -> SignedLogValue:
    """
    sqrt(2 / cos theta) exp{(n/2)[ln 2n - cos 2 theta]}
    cos{n[sin(2 theta)/2 + theta - pi/2] + theta/2}
    """
    raise_for_non_finite('theta', theta)
    _check_n_int(n, minimum=1)
    if not abs(theta) < math.pi / 2:
        raise DomainError(f'oscillatory requires |theta| < pi/2, got theta = {theta!r}')
    log_amp = 0.5 * math.log(2.0 / math.cos(theta)) + 0.5 * n * (math.log(2.0 * n) - math.cos(2.0 * theta))
    # cos(a - n pi/2) with the quarter turns taken exactly
    a = n * (0.5 * math.sin(2.0 * theta) + theta) + 0.5 * theta
    quarter = n % 4
    if quarter == 0:
        c = math.cos(a)
    elif quarter == 1:
        c = math.sin(a)
    elif quarter == 2:
        c = -math.cos(a)
    else:
        c = -math.sin(a)
    if c == 0.0:
        return SignedLogValue.zero()
    return SignedLogValue(1 if c > 0 else -1, log_amp + math.log(abs(c)))


def phi5(x: float, n: int) -> SignedLogValue:
    raise_for_non_finite('x', x)
    _check_n_int(n, minimum=1)
    edge = _turning_point(n)
    if not abs(x) < edge:
        raise DomainError(f'oscillatory requires |x| < sqrt(2n) = {edge!r}, got x = {x!r}')
    return phi_oscillatory(math.asin(x / edge), n)


def classify_region(x: float, n: int, cfg: Optional[RegionConfig] = None) -> Region:
    cfg = cfg or RegionConfig.default()
    if abs(beta_of(x, n)) <= cfg.beta_cut:
        return Region.TRANSITION_RIGHT
    if x < 0 and abs(beta_of(-x, n)) <= cfg.beta_cut:
        return Region.TRANSITION_LEFT
    edge = _turning_point(n)
    if x > edge:
        return Region.OUTER_RIGHT
    if x < -edge:
        return Region.OUTER_LEFT
    return Region.OSCILLATORY


def eval_auto(x: float, n: int, cfg: Optional[RegionConfig] = None) -> EvalResult:
    region = classify_region(x, n, cfg=cfg)
    beta = beta_of(-x, n) if region is Region.TRANSITION_LEFT else beta_of(x, n)
    try:
        if region is Region.OUTER_RIGHT:
            return EvalResult(phi1(x, n), region, beta, method='phi1')
        if region is Region.OUTER_LEFT:
            return EvalResult(phi2(x, n), region, beta, method='phi2')
        if region is Region.TRANSITION_RIGHT:
            return EvalResult(phi3(x, n), region, beta, method='phi3')
        if region is Region.TRANSITION_LEFT:
            return EvalResult(phi4(x, n), region, beta, method='phi4')
        theta = math.asin(x / _turning_point(n))
        return EvalResult(phi_oscillatory(theta, n), region, beta, theta=theta, method='phi5')
    except DomainError as e:
        raise NumericalFailureError(f'region dispatch inconsistent at x = {x!r}, n = {n}: {e}')


def transition_matching_ratio(n: int, beta: float) -> float:
    """
    Signed ratio phi3 / phi1 (beta > 0) or phi3 / phi5 (beta < 0) at
    x = sqrt(2n) + beta n^(-1/6). Tends to a constant near 1 as n grows,
    which is how the Airy layer matches its neighbours.
    """
    _check_n_int(n, minimum=1)
    raise_for_non_finite('beta', beta)
    if beta == 0:
        raise InvalidArgumentError('beta must be non-zero')
    x = _turning_point(n) + beta * n ** (-1.0 / 6.0)
    inner = phi3(x, n)
    outer = phi1(x, n) if beta > 0 else phi5(x, n)
    if inner.is_zero or outer.is_zero:
        raise NumericalFailureError(f'matching ratio undefined at beta = {beta!r}, n = {n}: zero approximant')
    ratio = math.exp(inner.log_abs - outer.log_abs)
    _LOG.debug(f'matching ratio at n = {n}, beta = {beta}: {ratio}')
    return inner.sign * outer.sign * ratio
