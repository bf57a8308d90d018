"""
Asymptotic routes to the zeros zeta_1 > zeta_2 > ... > zeta_n of H_n.

All routes go through the phase equation

    n [sin(2 tau)/2 + tau - pi/2] + tau/2 = (1 - 2k) pi/2,    1 <= k <= n

and zeta_k ~ sqrt(2n) sin(tau_k):

* ``solve_tau``: bisection plus guarded Newton on the phase equation
* ``tau_kapteyn``: the exact Kapteyn series of Bessel functions for tau_k
* ``tau_series_edge`` / ``zero_series_edge``: expansion in n^(-1/3) for k = O(1)
* ``tau_series_center`` / ``zero_series_center``: expansion in 1/n for zeros
  near the origin, indexed by j with k = floor(n/2) + 1 - j

``newton_polish`` refines any estimate against the exact recurrence and
``zeros_table`` lines all of them up against the Sturm oracle.
"""

import functools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np

from hermite_rays.cfg import Cfg
from hermite_rays.core.hermite_core import hermite_pair_exact, hermite_zeros_exact
from hermite_rays.core.specfun import bessel_j_array
from hermite_rays.errors import InvalidArgumentError, NumericalFailureError, raise_for_non_finite, \
    raise_for_non_integer
from hermite_rays.typedefs import Number
from hermite_rays.util import get_config_value

_LOG = logging.getLogger(__name__)

_HALF_PI = 0.5 * math.pi
_MAX_BISECTIONS = 200
_TAU_NEWTON_STEPS = 5
# a growing Newton step below this many tolerances is round-off
_NEWTON_STALL_FACTOR = 1e3

EDGE_TAU_TERMS = 10
EDGE_ZERO_TERMS = 9
CENTER_TAU_TERMS = 6
CENTER_ZERO_TERMS = 4


class ZeroMethod(Enum):
    TAU_BISECT = 'TauBisect'
    KAPTEYN = 'Kapteyn'
    EDGE_SERIES = 'EdgeSeries'
    CENTER_SERIES = 'CenterSeries'
    NEWTON_POLISHED = 'NewtonPolished'
    EXACT_ORACLE = 'ExactOracle'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ZeroEstimate:
    """
    Estimate of zeta_k, the k-th zero of H_n counted from the right.
    """
    n: int
    k: int
    method: ZeroMethod
    value: float
    exact_ref: Optional[float] = None

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise InvalidArgumentError(f'zero index k must lie in 1..{self.n}, got {self.k}')
        if self.method is not ZeroMethod.EXACT_ORACLE and not abs(self.value) < math.sqrt(2 * self.n + 1):
            raise NumericalFailureError(f'{self.method} estimate {self.value!r} for k = {self.k} '
                                        f'lies outside (-sqrt(2n+1), sqrt(2n+1))')

    @property
    def abs_err(self) -> Optional[float]:
        return None if self.exact_ref is None else abs(self.value - self.exact_ref)

    def with_exact(self, exact_ref: float) -> 'ZeroEstimate':
        return ZeroEstimate(self.n, self.k, self.method, self.value, exact_ref)


@dataclass(frozen=True)
class KapteynResult:
    tau: float
    terms_used: int
    converged: bool


@dataclass(frozen=True)
class ComparisonRow:
    k: int
    exact: float
    tau_based: float
    center_series: Optional[float] = None
    edge_series: Optional[float] = None


@dataclass(frozen=True)
class ZerosConfig:
    exact_abs_tol: float = 1e-13
    tau_abs_tol: float = 1e-13
    term_tol: float = 1e-10
    max_terms: int = 5000
    stop_run: int = 10
    newton_max_iters: int = 50
    newton_abs_tol: float = 1e-12

    def __post_init__(self):
        for name in ('exact_abs_tol', 'tau_abs_tol', 'term_tol', 'newton_abs_tol'):
            value = getattr(self, name)
            if not (isinstance(value, Number) and value > 0):
                raise InvalidArgumentError(f'{name} must be positive, got {value!r}')
        for name in ('max_terms', 'stop_run', 'newton_max_iters'):
            raise_for_non_integer(name, getattr(self, name), minimum=1)

    @classmethod
    def default(cls) -> 'ZerosConfig':
        section = Cfg.get_section('zeros')

        def real(key):
            return float(get_config_value(section, key, value_type=Number, key_path='zeros'))

        def integer(key):
            return get_config_value(section, key, value_type=int, key_path='zeros')

        return cls(exact_abs_tol=real('exact_abs_tol'),
                   tau_abs_tol=real('tau_abs_tol'),
                   term_tol=real('term_tol'),
                   max_terms=integer('max_terms'),
                   stop_run=integer('stop_run'),
                   newton_max_iters=integer('newton_max_iters'),
                   newton_abs_tol=real('newton_abs_tol'))


def kappa(k: int) -> float:
    return 3.0 * math.pi * (4 * k - 1)


def xi(n: int, j: int) -> float:
    alpha = 0.5 * (n % 2)
    return 0.25 * math.pi * (2 * j + 2 * alpha - 1)


def _a1(c):
    return c ** (1 / 3) / 2


def _a2(c):
    return -c ** (-1 / 3) / 2


def _a3(c):
    return c / 120


def _a4(c):
    return -c ** (-5 / 3) * (c ** 2 - 5) / 30


def _a5(c):
    return c ** (-7 / 3) * (3 * c ** 4 + 350 * c ** 2 + 1400) / 8400


def _a6(c):
    return -43 * c / 16800


def _a7(c):
    return c ** (-11 / 3) * (c ** 6 + 350 * c ** 4 - 980 * c ** 2 - 11200) / 50400


def _a8(c):
    return -c ** (-13 / 3) * (13 * c ** 6 + 475 * c ** 4 + 1400 * c ** 2 + 17500) / 63000


def _a9(c):
    return 59 * c / 67200 + 43 * c ** 3 / 34496000


def _a10(c):
    return -c ** (-17 / 3) * (23817 * c ** 8 + 2608760 * c ** 6 - 4592280 * c ** 4
                              - 51744000 * c ** 2 - 664048000) / 1397088000


def _b1(s):
    return s


def _b2(s):
    return -s / 4


def _b3(s):
    return s * (3 + 16 * s ** 2) / 48


def _b4(s):
    return -s * (3 + 64 * s ** 2) / 192


def _b5(s):
    return s * (15 + 800 * s ** 2 + 1024 * s ** 4) / 3840


def _b6(s):
    return -s * (15 + 1600 * s ** 2 + 7424 * s ** 4) / 15360


@dataclass(frozen=True)
class SeriesCoeffs:
    """
    ``edge_a[i-1](kappa)`` multiplies n^(-i/3) in the edge expansion of tau,
    ``center_b[i-1](xi)`` multiplies n^(-i) in the centre expansion.
    """
    edge_a: Tuple[Callable[[float], float], ...]
    center_b: Tuple[Callable[[float], float], ...]


SERIES_COEFFS = SeriesCoeffs(edge_a=(_a1, _a2, _a3, _a4, _a5, _a6, _a7, _a8, _a9, _a10),
                             center_b=(_b1, _b2, _b3, _b4, _b5, _b6))

# (power of n, coefficient of kappa) for zeta_k / sqrt(2), k = O(1)
_EDGE_ZERO_TERMS = (
    (1 / 2, lambda c: 1.0),
    (-1 / 6, lambda c: -c ** (2 / 3) / 8),
    (-1 / 2, lambda c: 1 / 4),
    (-5 / 6, lambda c: -(c ** 2 + 80) / (640 * c ** (2 / 3))),
    (-7 / 6, lambda c: (c ** 2 - 8) / (96 * c ** (4 / 3))),
    (-3 / 2, lambda c: -(11 * c ** 2 + 3920) / 179200),
    (-11 / 6, lambda c: (5 * c ** 4 + 96 * c ** 2 + 640) / (7680 * c ** (8 / 3))),
    (-13 / 6, lambda c: -(823 * c ** 6 + 647200 * c ** 4 - 2464000 * c ** 2 - 25088000)
                        / (258048000 * c ** (10 / 3))),
    (-5 / 2, lambda c: (3064 + 33 * c ** 2) / 716800),
)


def _check_index(n: int, k: int):
    raise_for_non_integer('n', n, minimum=1)
    raise_for_non_integer('k', k, minimum=1)
    if k > n:
        raise InvalidArgumentError(f'k must not exceed n = {n}, got {k}')


def _check_terms(terms: int, maximum: int):
    raise_for_non_integer('terms', terms, minimum=1)
    if terms > maximum:
        raise InvalidArgumentError(f'terms must not exceed {maximum}, got {terms}')


def _center_index(n: int, j: int) -> int:
    raise_for_non_integer('n', n, minimum=1)
    raise_for_non_integer('j', j, minimum=0)
    k = n // 2 + 1 - j
    if not 1 <= k <= n:
        raise InvalidArgumentError(f'j = {j} gives zero index k = {k} outside 1..{n}')
    return k


def edge_series_gate(n: int) -> int:
    """Largest k for which the edge expansion is offered."""
    return max(1, n // 3)


def center_series_gate(n: int) -> int:
    """Largest j for which the centre expansion is offered."""
    return n // 3


def tau_phase(n: int, tau: float) -> float:
    raise_for_non_integer('n', n, minimum=1)
    raise_for_non_finite('tau', tau)
    if abs(tau) > _HALF_PI:
        raise InvalidArgumentError(f'tau must lie in [-pi/2, pi/2], got {tau!r}')
    return n * (0.5 * math.sin(2.0 * tau) + tau - _HALF_PI) + 0.5 * tau


def solve_tau(n: int, k: int, abs_tol: Optional[float] = None) -> float:
    """
    Root tau_k of the phase equation in (-pi/2, pi/2).

    Works on the shifted form n [sin(2 tau)/2 + tau] + tau/2 = (n + 1 - 2k) pi/2,
    whose right-hand side factor is an exact integer, bisects to ``abs_tol``
    and finishes with Newton steps confined to the final bracket.
    """
    _check_index(n, k)
    abs_tol = ZerosConfig.default().tau_abs_tol if abs_tol is None else abs_tol
    if not abs_tol > 0:
        raise InvalidArgumentError(f'abs_tol must be positive, got {abs_tol!r}')
    target = (n + 1 - 2 * k) * _HALF_PI

    def residual(t: float) -> float:
        return n * (0.5 * math.sin(2.0 * t) + t) + 0.5 * t - target

    lo, hi = -_HALF_PI, _HALF_PI
    for _ in range(_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= 2.0 * abs_tol or not lo < mid < hi:
            break
        if residual(mid) < 0:
            lo = mid
        else:
            hi = mid
    else:
        raise NumericalFailureError(f'phase equation for n = {n}, k = {k} not bracketed '
                                    f'to {abs_tol} in {_MAX_BISECTIONS} steps')

    tau = 0.5 * (lo + hi)
    for _ in range(_TAU_NEWTON_STEPS):
        step = residual(tau) / (n * (math.cos(2.0 * tau) + 1.0) + 0.5)
        candidate = tau - step
        if not lo <= candidate <= hi or candidate == tau:
            break
        tau = candidate
    return tau


def zero_from_tau(n: int, k: int, abs_tol: Optional[float] = None) -> ZeroEstimate:
    tau = solve_tau(n, k, abs_tol=abs_tol)
    return ZeroEstimate(n, k, ZeroMethod.TAU_BISECT, math.sqrt(2.0 * n) * math.sin(tau))


@functools.lru_cache(maxsize=32)
def _kapteyn_diagonal(n: int, max_terms: int) -> np.ndarray:
    j = np.arange(1, max_terms + 1)
    values = bessel_j_array(j, (1.0 - 1.0 / (2 * n + 1)) * j)
    values.flags.writeable = False
    return values


def kapteyn_sum(n: int, k: int, term_tol: Optional[float] = None, max_terms: Optional[int] = None,
                stop_run: Optional[int] = None) -> KapteynResult:
    """
    tau_k = pi/2 - (pi/2)(4k-1)/N - sum_j J_j((1 - 1/N) j) sin((4k-1) j pi / N) / j,
    N = 2n + 1.

    Summation stops once ``stop_run`` consecutive terms have |J_j| / j below
    ``term_tol``; the terms of that run are included.
    """
    _check_index(n, k)
    cfg = ZerosConfig.default()
    term_tol = cfg.term_tol if term_tol is None else term_tol
    max_terms = cfg.max_terms if max_terms is None else max_terms
    stop_run = cfg.stop_run if stop_run is None else stop_run
    if not term_tol > 0:
        raise InvalidArgumentError(f'term_tol must be positive, got {term_tol!r}')
    raise_for_non_integer('max_terms', max_terms, minimum=1)
    raise_for_non_integer('stop_run', stop_run, minimum=1)

    big_n = 2 * n + 1
    j = np.arange(1, max_terms + 1)
    weights = _kapteyn_diagonal(n, max_terms) / j
    small = (np.abs(weights) < term_tol).astype(np.int64)
    runs = np.flatnonzero(np.convolve(small, np.ones(stop_run, dtype=np.int64), mode='valid') == stop_run)
    if runs.size:
        used, converged = int(runs[0]) + stop_run, True
    else:
        used, converged = max_terms, False
        _LOG.warning(f'Kapteyn series for n = {n}, k = {k} hit the cap of {max_terms} terms '
                     f'before {stop_run} terms fell below {term_tol}')
    # sin((4k-1) j pi / N) with the argument reduced modulo 2 pi exactly
    phases = np.mod((4 * k - 1) * j[:used], 2 * big_n) * (math.pi / big_n)
    total = float(np.sum(weights[:used] * np.sin(phases)))
    tau = _HALF_PI - _HALF_PI * (4 * k - 1) / big_n - total
    return KapteynResult(tau=tau, terms_used=used, converged=converged)


def tau_kapteyn(n: int, k: int, term_tol: Optional[float] = None, max_terms: Optional[int] = None) -> float:
    return kapteyn_sum(n, k, term_tol=term_tol, max_terms=max_terms).tau


def zero_from_kapteyn(n: int, k: int, term_tol: Optional[float] = None,
                      max_terms: Optional[int] = None) -> ZeroEstimate:
    tau = tau_kapteyn(n, k, term_tol=term_tol, max_terms=max_terms)
    return ZeroEstimate(n, k, ZeroMethod.KAPTEYN, math.sqrt(2.0 * n) * math.sin(tau))


def tau_series_edge(n: int, k: int, terms: int = EDGE_TAU_TERMS) -> float:
    _check_index(n, k)
    _check_terms(terms, EDGE_TAU_TERMS)
    c = kappa(k)
    return _HALF_PI - sum(a(c) * n ** (-i / 3) for i, a in enumerate(SERIES_COEFFS.edge_a[:terms], start=1))


def zero_series_edge(n: int, k: int, terms: int = EDGE_ZERO_TERMS) -> ZeroEstimate:
    _check_index(n, k)
    _check_terms(terms, EDGE_ZERO_TERMS)
    c = kappa(k)
    total = sum(coefficient(c) * n ** power for power, coefficient in _EDGE_ZERO_TERMS[:terms])
    return ZeroEstimate(n, k, ZeroMethod.EDGE_SERIES, math.sqrt(2.0) * total)


def tau_series_center(n: int, j: int, terms: int = CENTER_TAU_TERMS) -> float:
    _center_index(n, j)
    _check_terms(terms, CENTER_TAU_TERMS)
    s = xi(n, j)
    return sum(b(s) * n ** (-i) for i, b in enumerate(SERIES_COEFFS.center_b[:terms], start=1))


def zero_series_center(n: int, j: int, terms: int = CENTER_ZERO_TERMS) -> ZeroEstimate:
    k = _center_index(n, j)
    _check_terms(terms, CENTER_ZERO_TERMS)
    s = xi(n, j)
    parts = (n ** -0.5,
             -n ** -1.5 / 4,
             (3 + 8 * s ** 2) / 48 * n ** -2.5,
             -(3 + 40 * s ** 2) / 192 * n ** -3.5)
    return ZeroEstimate(n, k, ZeroMethod.CENTER_SERIES, math.sqrt(2.0) * s * sum(parts[:terms]))


def newton_polish(est: ZeroEstimate, max_iters: Optional[int] = None,
                  abs_tol: Optional[float] = None) -> ZeroEstimate:
    """
    Newton iteration x <- x - H_n(x) / (2n H_{n-1}(x)) on the signed-log recurrence.

    Converged once a step is below ``abs_tol * max(1, |x|)``, or once the steps
    stop shrinking at a size already within a thousand tolerances: there the
    step is recurrence round-off, not progress.
    """
    cfg = ZerosConfig.default()
    max_iters = cfg.newton_max_iters if max_iters is None else max_iters
    abs_tol = cfg.newton_abs_tol if abs_tol is None else abs_tol
    raise_for_non_integer('max_iters', max_iters, minimum=1)
    if not abs_tol > 0:
        raise InvalidArgumentError(f'abs_tol must be positive, got {abs_tol!r}')

    n = est.n
    bound = math.sqrt(2.0 * n + 1.0)
    log_2n = math.log(2.0 * n)
    x = est.value
    last_step = math.inf
    for iteration in range(1, max_iters + 1):
        h, h_prev = hermite_pair_exact(n, x)
        if h.is_zero:
            break
        if h_prev.is_zero:
            raise NumericalFailureError(f'Newton step undefined at x = {x!r} for n = {n}: zero derivative')
        step = h.sign * h_prev.sign * math.exp(h.log_abs - h_prev.log_abs - log_2n)
        x -= step
        if not -bound < x < bound:
            raise NumericalFailureError(f'Newton iterate for n = {n}, k = {est.k} escaped '
                                        f'(-sqrt(2n+1), sqrt(2n+1))')
        tol = abs_tol * max(1.0, abs(x))
        if abs(step) <= tol:
            break
        if abs(step) >= last_step and last_step <= _NEWTON_STALL_FACTOR * tol:
            _LOG.debug(f'Newton polish n = {n}, k = {est.k}: stalled at step {step:.3g}')
            break
        last_step = abs(step)
    else:
        raise NumericalFailureError(f'Newton iteration for n = {n}, k = {est.k} did not converge '
                                    f'in {max_iters} steps')
    _LOG.debug(f'Newton polish n = {n}, k = {est.k}: {iteration} iterations')
    return ZeroEstimate(n, est.k, ZeroMethod.NEWTON_POLISHED, x, est.exact_ref)


def exact_zero(n: int, k: int, zeros: Optional[List[float]] = None) -> ZeroEstimate:
    """The k-th largest zero from the Sturm oracle."""
    _check_index(n, k)
    zeros = hermite_zeros_exact(n) if zeros is None else zeros
    value = zeros[n - k]
    return ZeroEstimate(n, k, ZeroMethod.EXACT_ORACLE, value, value)


def zeros_table(n: int) -> List[ComparisonRow]:
    """
    Positive zeros of H_n in ascending order, each paired with its tau-based
    estimate and, inside their validity gates, the centre and edge expansions.
    """
    raise_for_non_integer('n', n, minimum=2)
    if n % 2:
        raise InvalidArgumentError(f'n must be even, got {n}')
    zeros = hermite_zeros_exact(n)
    rows = []
    for k in range(n // 2, 0, -1):
        j = n // 2 + 1 - k
        center = zero_series_center(n, j).value if j <= center_series_gate(n) else None
        edge = zero_series_edge(n, k).value if k <= edge_series_gate(n) else None
        rows.append(ComparisonRow(k=k,
                                  exact=zeros[n - k],
                                  tau_based=zero_from_tau(n, k).value,
                                  center_series=center,
                                  edge_series=edge))
    return rows
