# The MIT License (MIT)
# Copyright (c) 2026 by the hermite-rays development team and contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the "Software"), to deal in
# the Software without restriction, including without limitation the rights to
# use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies
# of the Software, and to permit persons to whom the Software is furnished to do
# so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from logging.config import dictConfig
from typing import List, Optional

import click
import numpy as np

from hermite_rays.errors import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, HermiteError, InvalidArgumentError, OutputError
from hermite_rays.records import FORMATS, linear_value, relative_error, render_records, signed_log_fields
from hermite_rays.typedefs import Record
from hermite_rays.version import version

_LOG = logging.getLogger('hermite_rays')

EVAL_METHODS = ('exact', 'outer', 'transition', 'oscillatory', 'auto')
ZERO_METHODS = ('exact', 'tau', 'kapteyn', 'edge', 'center', 'polished')
FIGURES = ('outer', 'oscillatory')


def _configure_logging(level: str):
    dictConfig({
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'default': {
                'format': '[%(levelname).1s %(asctime)s  %(name)s] %(message)s',
            }
        },
        'handlers': {
            'stderr': {
                'class': 'logging.StreamHandler',
                'stream': 'ext://sys.stderr',
                'formatter': 'default'
            }
        },
        'loggers': {
            'hermite_rays': {
                'level': level,
                'handlers': ['stderr'],
                'propagate': False
            }
        }
    })


def _emit(records: List[Record], columns: List[str], fmt: str):
    click.echo(render_records(records, columns, fmt=fmt), nl=False)


def _eval_point(n: int, x: float, method: str, region_cfg, compare_exact: bool) -> Record:
    from hermite_rays.core.asymptotics import Region, classify_region, eval_auto, phi1, phi2, phi3, phi4, phi5
    from hermite_rays.core.hermite_core import hermite_eval_exact

    if method == 'auto':
        result = eval_auto(x, n, cfg=region_cfg)
        value, used, region = result.value, result.method, str(result.region)
    elif method == 'exact':
        value, used = hermite_eval_exact(n, x), 'exact'
        region = str(classify_region(x, n, cfg=region_cfg)) if n >= 1 else ''
    elif method == 'outer':
        if x >= 0:
            value, used, region = phi1(x, n), 'phi1', str(Region.OUTER_RIGHT)
        else:
            value, used, region = phi2(x, n), 'phi2', str(Region.OUTER_LEFT)
    elif method == 'transition':
        if x >= 0:
            value, used, region = phi3(x, n), 'phi3', str(Region.TRANSITION_RIGHT)
        else:
            value, used, region = phi4(x, n), 'phi4', str(Region.TRANSITION_LEFT)
    else:
        value, used, region = phi5(x, n), 'phi5', str(Region.OSCILLATORY)

    record = {'n': n, 'x': x, 'method': used, 'region': region}
    record.update(signed_log_fields(value))
    if compare_exact:
        exact = value if method == 'exact' else hermite_eval_exact(n, x)
        if exact.cancelled:
            _LOG.info(f'H_{n}({x!r}) sits within about 1e-12 of a zero; exact_log_abs is round-off there')
        record['exact_sign'] = exact.sign
        record['exact_log_abs'] = None if exact.is_zero else exact.log_abs
        record['rel_err'] = relative_error(value, exact)
    return record


# noinspection PyShadowingBuiltins
@click.command(name='eval')
@click.option('--n', 'n', type=int, required=True, help='Degree n of H_n.')
@click.option('--x', 'x', type=float, help='Single evaluation point.')
@click.option('--x-range', 'x_range', metavar='LO:HI:COUNT',
              help='Evaluate at COUNT equispaced points from LO to HI inclusive.')
@click.option('--method', type=click.Choice(EVAL_METHODS), default='auto', show_default=True,
              help='Approximation to use. "auto" picks the one for the region of x.')
@click.option('--beta-cut', 'beta_cut', type=float,
              help='Half width of the Airy transition layer in stretch units. Defaults to 2.0.')
@click.option('--format', 'format', type=click.Choice(FORMATS), default='csv', show_default=True)
@click.option('--compare-exact', 'compare_exact', is_flag=True,
              help='Add the exact value and the relative error of the approximation.')
@click.option('--workers', type=click.IntRange(min=1), default=1, show_default=True,
              help='Number of threads evaluating the points.')
def eval_(n: int, x: Optional[float], x_range: Optional[str], method: str, beta_cut: Optional[float],
          format: str, compare_exact: bool, workers: int):
    """
    Evaluate H_n(x) or one of its asymptotic approximations.
    """
    from hermite_rays.core.asymptotics import RegionConfig
    from hermite_rays.errors import raise_for_non_finite
    from hermite_rays.util import parse_real_range

    if (x is None) == (x_range is None):
        raise click.UsageError('Exactly one of --x or --x-range must be given.')
    if n < 0:
        raise InvalidArgumentError(f'n must be non-negative, got {n}')
    if n == 0 and method not in ('exact', 'outer'):
        raise InvalidArgumentError(f'method "{method}" requires n >= 1')
    region_cfg = RegionConfig(beta_cut=beta_cut) if beta_cut is not None else RegionConfig.default()

    if x is not None:
        raise_for_non_finite('x', x)
        xs = [x]
    else:
        lo, hi, count = parse_real_range(x_range)
        raise_for_non_finite('lo', lo)
        raise_for_non_finite('hi', hi)
        xs = np.linspace(lo, hi, count).tolist()

    def point(value: float) -> Record:
        return _eval_point(n, value, method, region_cfg, compare_exact)

    if workers > 1 and len(xs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            records = list(executor.map(point, xs))
    else:
        records = [point(value) for value in xs]

    columns = ['n', 'x', 'method', 'region', 'sign', 'log_abs', 'value_linear']
    if compare_exact:
        columns += ['exact_sign', 'exact_log_abs', 'rel_err']
    _emit(records, columns, format)


@click.command(name='zeros')
@click.option('--n', 'n', type=int, required=True, help='Degree n of H_n.')
@click.option('--method', type=click.Choice(ZERO_METHODS), default='tau', show_default=True,
              help='Route to the zeros.')
@click.option('--k-range', 'k_range', metavar='LO:HI',
              help='Inclusive range of zero indices, counted from the largest zero. '
                   'Defaults to the non-negative zeros.')
@click.option('--tol', type=float, default=1e-12, show_default=True,
              help='Absolute tolerance of the tau bisection and of Newton polishing.')
@click.option('--max-terms', 'max_terms', type=int, default=5000, show_default=True,
              help='Cap on the number of Kapteyn series terms.')
@click.option('--compare-exact', 'compare_exact', is_flag=True,
              help='Add the exact zero and the absolute error.')
@click.option('--format', 'format', type=click.Choice(FORMATS), default='csv', show_default=True)
def zeros(n: int, method: str, k_range: Optional[str], tol: float, max_terms: int, compare_exact: bool,
          format: str):
    """
    Compute zeros of H_n, largest first by index k.
    """
    from hermite_rays.core.hermite_core import hermite_zeros_exact
    from hermite_rays.core.zeros_asym import center_series_gate, edge_series_gate, exact_zero, newton_polish, \
        zero_from_kapteyn, zero_from_tau, zero_series_center, zero_series_edge
    from hermite_rays.util import parse_index_range

    if n < 1:
        raise InvalidArgumentError(f'n must be at least 1, got {n}')
    if not (math.isfinite(tol) and tol > 0):
        raise InvalidArgumentError(f'--tol must be positive, got {tol}')
    if max_terms < 1:
        raise InvalidArgumentError(f'--max-terms must be at least 1, got {max_terms}')
    if k_range:
        lo, hi = parse_index_range(k_range, 1, n)
    elif method == 'edge':
        lo, hi = 1, min((n + 1) // 2, edge_series_gate(n))
    elif method == 'center':
        lo, hi = max(1, n // 2 + 1 - center_series_gate(n)), min((n + 1) // 2, n // 2 + 1)
    else:
        lo, hi = 1, (n + 1) // 2

    exact = hermite_zeros_exact(n) if compare_exact or method == 'exact' else None
    records = []
    for k in range(lo, hi + 1):
        if method == 'exact':
            est = exact_zero(n, k, zeros=exact)
        elif method == 'tau':
            est = zero_from_tau(n, k, abs_tol=tol)
        elif method == 'kapteyn':
            est = zero_from_kapteyn(n, k, max_terms=max_terms)
        elif method == 'edge':
            if k > edge_series_gate(n):
                raise InvalidArgumentError(f'edge series is offered for k <= {edge_series_gate(n)} only, got k = {k}',
                                           hint=f'use --k-range 1:{edge_series_gate(n)} or --method tau')
            est = zero_series_edge(n, k)
        elif method == 'center':
            j = n // 2 + 1 - k
            if not 0 <= j <= center_series_gate(n):
                raise InvalidArgumentError(f'center series is offered for 0 <= j <= {center_series_gate(n)} only '
                                           f'(j = floor(n/2) + 1 - k), got j = {j} for k = {k}',
                                           hint='omit --k-range to get every zero the center series covers')
            est = zero_series_center(n, j)
        else:
            est = newton_polish(zero_from_tau(n, k), abs_tol=tol)
        record = {'n': n, 'k': k, 'method': str(est.method), 'value': est.value}
        if compare_exact:
            reference = exact[n - k]
            record['exact_ref'] = reference
            record['abs_err'] = abs(est.value - reference)
        records.append(record)

    columns = ['n', 'k', 'method', 'value']
    if compare_exact:
        columns += ['exact_ref', 'abs_err']
    _emit(records, columns, format)


@click.command(name='table')
@click.option('--n', 'n', type=int, default=20, show_default=True, help='Even degree n of H_n.')
@click.option('--format', 'format', type=click.Choice(FORMATS), default='csv', show_default=True)
def table(n: int, format: str):
    """
    Compare exact positive zeros with the tau, center and edge approximations.
    """
    from hermite_rays.core.zeros_asym import zeros_table

    records = [{'k': row.k,
                'exact': row.exact,
                'tau': row.tau_based,
                'center': row.center_series,
                'edge': row.edge_series} for row in zeros_table(n)]
    _emit(records, ['k', 'exact', 'tau', 'center', 'edge'], format)


def _figure_setting(key: str, value_type):
    from hermite_rays.cfg import Cfg
    from hermite_rays.util import get_config_value

    return get_config_value(Cfg.get_section('figure'), key, value_type=value_type, key_path='figure')


def oscillatory_figure_records(n: int, samples: int) -> List[Record]:
    """
    Exact and asymptotic H_n on x = sqrt(2n) sin(theta), both divided by
    exp{(n/2)[ln 2n - cos 2 theta]}.
    """
    from hermite_rays.core.asymptotics import phi_oscillatory
    from hermite_rays.core.hermite_core import SignedLogValue, hermite_eval_exact
    from hermite_rays.typedefs import Number

    clip = float(_figure_setting('theta_clip', Number))
    edge = math.sqrt(2.0 * n)
    records = []
    for theta in np.linspace(0.0, 0.5 * math.pi - clip, samples).tolist():
        scale = 0.5 * n * (math.log(2.0 * n) - math.cos(2.0 * theta))
        exact = hermite_eval_exact(n, edge * math.sin(theta))
        asym = phi_oscillatory(theta, n)
        records.append({
            'theta': theta,
            'exact_normalized': linear_value(SignedLogValue(exact.sign, exact.log_abs - scale)),
            'asym_normalized': linear_value(SignedLogValue(asym.sign, asym.log_abs - scale)),
        })
    return records


def outer_figure_records(n: int, samples: int) -> List[Record]:
    """
    Exact H_n against phi1 / phi2 beyond both turning points.
    """
    from hermite_rays.core.asymptotics import phi1, phi2
    from hermite_rays.core.hermite_core import hermite_eval_exact
    from hermite_rays.typedefs import Number

    margin = float(_figure_setting('outer_margin', Number))
    extent = float(_figure_setting('outer_extent', Number))
    edge = math.sqrt(2.0 * n)
    left = samples // 2
    right = samples - left
    xs = [-x for x in reversed(np.linspace(edge + margin, edge + extent, left).tolist())]
    xs += np.linspace(edge + margin, edge + extent, right).tolist()
    records = []
    for x in xs:
        asym = phi1(x, n) if x > 0 else phi2(x, n)
        records.append({'x': x,
                        'exact': linear_value(hermite_eval_exact(n, x)),
                        'asymptotic': linear_value(asym)})
    return records


@click.command(name='figure')
@click.option('--which', type=click.Choice(FIGURES), required=True, help='Figure data to produce.')
@click.option('--n', 'n', type=int, help='Degree n of H_n. Defaults to 4 for outer and 20 for oscillatory.')
@click.option('--samples', type=int, help='Number of sample points. Defaults to 200.')
@click.option('--out', 'out', type=click.Path(dir_okay=False), required=True, help='Output file.')
@click.option('--format', 'format', type=click.Choice(FORMATS), default='csv', show_default=True)
def figure(which: str, n: Optional[int], samples: Optional[int], out: str, format: str):
    """
    Write the data behind the outer or oscillatory comparison figure.
    """
    if n is None:
        n = _figure_setting('outer_n' if which == 'outer' else 'oscillatory_n', int)
    if samples is None:
        samples = _figure_setting('samples', int)
    if samples < 2:
        raise InvalidArgumentError(f'--samples must be at least 2, got {samples}')

    if which == 'oscillatory':
        if n < 1:
            raise InvalidArgumentError(f'n must be at least 1, got {n}')
        records = oscillatory_figure_records(n, samples)
        columns = ['theta', 'exact_normalized', 'asym_normalized']
    else:
        if n < 0:
            raise InvalidArgumentError(f'n must be non-negative, got {n}')
        records = outer_figure_records(n, samples)
        columns = ['x', 'exact', 'asymptotic']

    text = render_records(records, columns, fmt=format)
    try:
        with open(out, 'w', encoding='utf-8', newline='') as fp:
            fp.write(text)
    except OSError as e:
        raise OutputError(f'Could not write {out}: {e.strerror or e}')
    _LOG.info(f'wrote {len(records)} records to {out}')


# noinspection PyShadowingBuiltins,PyUnusedLocal
@click.group(name='hermite-rays')
@click.version_option(version)
@click.option('--verbose', is_flag=True, help='Log progress information to stderr.')
@click.option('--debug', is_flag=True, help='Log debugging information to stderr.')
def cli(verbose: bool, debug: bool):
    """
    Ray-method asymptotics of Hermite polynomials and their zeros.
    """
    _configure_logging('DEBUG' if debug else 'INFO' if verbose else 'WARNING')


cli.add_command(eval_)
cli.add_command(zeros)
cli.add_command(table)
cli.add_command(figure)


def main(args=None):
    # noinspection PyBroadException
    try:
        exit_code = cli.main(args=args, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        exit_code = EXIT_USAGE
    except click.Abort:
        click.echo('Aborted!', err=True)
        exit_code = EXIT_USAGE
    except HermiteError as e:
        click.echo(f'Error: {e}', err=True)
        if e.hint:
            click.echo(f'Hint: {e.hint}', err=True)
        exit_code = e.exit_code
    except Exception:
        import traceback
        traceback.print_exc()
        exit_code = EXIT_NUMERIC
    sys.exit(exit_code or EXIT_OK)


if __name__ == '__main__':
    main()
