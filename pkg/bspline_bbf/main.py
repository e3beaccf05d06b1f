"""
Main entry point for bspline-bbf.

Commands read knot vectors from a file (--knots) or an inline string
(--inline), compute Bernstein-Bezier coefficient tables and run the
verification suite and the accuracy/timing experiments. Data goes to stdout
or --output; logs go to stderr.

Exit codes: 0 success, 1 invalid input or arguments, 2 empty span,
3 failed verification.
"""

import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Union

import click

from . import __version__
from .config import ConfigManager, ConfigValidationError
from .config.manager import VALID_LOG_LEVELS
from .config.cli import config as config_group
from .conversion import ConversionError, EmptySpanError, dump_table, format_value, reconstruct
from .conversion import span as span_conversion
from .experiments import ExperimentConfigError, ExperimentReport, run_accuracy_experiment, run_timing_experiment
from .knots import KnotValidationError, KnotVector, find_span, load_knots, multiplicity, parse_knots
from .logging import initialize_logging
from .oracle import deboor_cox_eval
from .verification import VerificationTolerances, run_checks

EXIT_INVALID = 1
EXIT_EMPTY_SPAN = 2
EXIT_VERIFICATION_FAILED = 3

FORMATS = ['json', 'csv', 'text']


def fail(message: str, code: int = EXIT_INVALID) -> NoReturn:
    click.echo(click.style(f"✗ {message}", fg='red'), err=True)
    sys.exit(code)


def fail_with_error(ctx: click.Context, error: Exception, code: int = EXIT_INVALID, **context: Any) -> NoReturn:
    """Log ``error`` with the command and its arguments, then exit like ``fail``."""
    manager = ctx.find_object(dict).get('logger_manager')
    if manager is not None:
        manager.log_error_with_context(error, {'command': ctx.info_name, **context})
    fail(f"{type(error).__name__}: {error}", code)


def _settings(ctx: click.Context) -> Dict[str, Any]:
    """Load configuration once per invocation and set up logging from it."""
    obj = ctx.find_object(dict)
    if 'settings' not in obj:
        try:
            settings = ConfigManager(obj.get('config_path')).load_or_default()
        except ConfigValidationError as e:
            fail(f"Configuration error: {e.message}")
        log = settings['logging']
        obj['logger_manager'] = initialize_logging(
            log_dir=log['log_dir'], log_level=obj.get('log_level') or log['level'],
            console_output=log['console'], structured_format=log['structured'])
        obj['settings'] = settings
    return obj['settings']


def _read_knots(knots: Optional[str], inline: Optional[str]) -> KnotVector:
    if (knots is None) == (inline is None):
        fail("give exactly one of --knots FILE or --inline TEXT")
    try:
        if knots is not None:
            return load_knots(knots)
        return parse_knots(inline)
    except KnotValidationError as e:
        fail(str(e))


def _parse_point(text: str) -> Union[int, float, Fraction]:
    try:
        if '/' in text:
            return Fraction(text)
        try:
            return int(text)
        except ValueError:
            return float(text)
    except (ValueError, ZeroDivisionError):
        fail(f"invalid parameter value '{text}'")


def _parse_int_list(text: Optional[str], default: List[int], name: str) -> List[int]:
    if text is None:
        return list(default)
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ExperimentConfigError(f"{name} must be a comma-separated list of integers, got '{text}'")


def _resolve_span(kv: KnotVector, span: Optional[int], at: Optional[str]) -> int:
    if span is not None and at is not None:
        fail("give at most one of --span and --at")
    if at is not None:
        try:
            return find_span(kv, _parse_point(at))
        except KnotValidationError as e:
            fail(str(e))
    if span is None:
        fail("one of --span J or --at U is required")
    return span


def _check_degree(kv: KnotVector, degree: Optional[int]) -> None:
    if degree is not None and degree != kv.degree:
        fail(f"DegreeMismatch: --degree {degree} but the knot vector has degree {kv.degree}")


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    Path(output).write_text(text, encoding='utf-8')
    click.echo(f"Wrote {output}", err=True)


def knot_options(func):
    func = click.option('--inline', help='Knot vector as JSON or "m n; t_-m ... t_n+m" text')(func)
    func = click.option('--knots', type=click.Path(dir_okay=False), help='Knot vector file (JSON or text)')(func)
    return func


def method_option(func):
    return click.option('--method', type=click.Choice(span_conversion.METHODS),
                        help='Conversion method (default from configuration)')(func)


@click.group()
@click.option('--config', 'config_path', type=click.Path(dir_okay=False),
              help='Configuration file (default config/default.yaml)')
@click.option('--log-level', type=click.Choice(VALID_LOG_LEVELS, case_sensitive=False),
              help='Log level; overrides the configuration and BSPLINE_BBF_LOG_LEVEL')
@click.version_option(version=__version__, prog_name="bspline-bbf")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str]):
    """Bernstein-Bezier coefficients of B-splines over one knot span."""
    ctx.ensure_object(dict)
    ctx.obj['config_path'] = config_path
    ctx.obj['log_level'] = log_level.upper() if log_level else None


cli.add_command(config_group)


@cli.command()
@knot_options
@click.pass_context
def validate(ctx: click.Context, knots: Optional[str], inline: Optional[str]):
    """Validate a knot vector and print its summary."""
    _settings(ctx)
    kv = _read_knots(knots, inline)
    t0, tn = kv.domain
    click.echo(click.style("✓ Knot vector is valid", fg='green'))
    click.echo(f"  Degree: {kv.degree}")
    click.echo(f"  Spans: {kv.spans}")
    click.echo(f"  Domain: [{format_value(t0)}, {format_value(tn)}]")
    click.echo(f"  Non-empty spans: {', '.join(str(j) for j in kv.nonempty_spans())}")
    distinct = sorted(set(kv.values))
    click.echo("  Multiplicities: " + ', '.join(
        f"{format_value(value)}x{multiplicity(kv, value)}" for value in distinct))
    click.echo(f"  Clamped: {'yes' if kv.is_clamped() else 'no'}")


@cli.command()
@knot_options
@click.option('--degree', type=int, help='Expected degree; must match the knot vector')
@click.option('--span', 'span', type=int, help='Span index j')
@click.option('--at', help='Parameter u; converts the span containing it')
@method_option
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json', show_default=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write to file instead of stdout')
@click.pass_context
def convert(ctx: click.Context, knots: Optional[str], inline: Optional[str], degree: Optional[int],
            span: Optional[int], at: Optional[str], method: Optional[str], fmt: str, output: Optional[str]):
    """Compute the coefficient table of one non-empty span."""
    settings = _settings(ctx)
    kv = _read_knots(knots, inline)
    _check_degree(kv, degree)
    j = _resolve_span(kv, span, at)
    method = method or settings['conversion']['default_method']

    try:
        table = span_conversion.convert_span(kv, j, method)
    except EmptySpanError as e:
        fail_with_error(ctx, e, EXIT_EMPTY_SPAN, span=j, method=method)
    except ConversionError as e:
        fail_with_error(ctx, e, span=j, method=method)

    _write(dump_table(table, fmt), output)


@cli.command(name='eval')
@knot_options
@click.option('--at', required=True, help='Parameter u')
@click.option('--index', type=int, help='Basis function index i (default: all non-trivial)')
@method_option
@click.pass_context
def evaluate(ctx: click.Context, knots: Optional[str], inline: Optional[str], at: str,
             index: Optional[int], method: Optional[str]):
    """Evaluate N_{m,i}(u) from the coefficient table and the de Boor-Cox recurrence."""
    settings = _settings(ctx)
    kv = _read_knots(knots, inline)
    u = _parse_point(at)
    method = method or settings['conversion']['default_method']
    try:
        j = find_span(kv, u)
    except KnotValidationError as e:
        fail(str(e))

    if index is not None and not -kv.degree <= index < kv.spans:
        fail(f"index {index} outside [-{kv.degree}, {kv.spans - 1}]")

    table = span_conversion.convert_span(kv, j, method)
    indices = [index] if index is not None else list(table.indices)
    click.echo(f"u = {format_value(u)} in span {j}, degree {kv.degree}, method {method}")
    for i in indices:
        value = reconstruct(table, kv, i, u)
        reference = deboor_cox_eval(kv, i, u)
        click.echo(f"  N[{i}] = {format_value(value)}  (de Boor-Cox {format_value(reference)})")


@cli.command()
@knot_options
@method_option
@click.option('--samples', type=int, help='Sample points per span (default from configuration)')
@click.pass_context
def verify(ctx: click.Context, knots: Optional[str], inline: Optional[str], method: Optional[str],
           samples: Optional[int]):
    """Run the invariant checks on every non-empty span."""
    settings = _settings(ctx)
    kv = _read_knots(knots, inline)
    method = method or settings['conversion']['default_method']
    tolerances = VerificationTolerances.from_config(settings['verification'])
    if samples is not None:
        if samples < 1:
            fail(f"--samples must be at least 1, got {samples}")
        tolerances = VerificationTolerances(tolerances.partition, tolerances.equivalence,
                                            tolerances.reconstruction, samples)

    report = run_checks(kv, span_conversion.CONVERTERS[method], tolerances)
    click.echo(report.format_text(), nl=False)
    if not report.passed:
        sys.exit(EXIT_VERIFICATION_FAILED)


def experiment_options(func):
    func = click.option('--output', '-o', type=click.Path(dir_okay=False),
                        help='Write the m,n,metric,value CSV to this file')(func)
    func = click.option('--seed', type=int, help='Base seed')(func)
    func = click.option('--trials', type=int, help='Knot vectors per (m, n) cell')(func)
    func = click.option('--ns', help='Comma-separated span counts, e.g. 10,50')(func)
    func = click.option('--ms', help='Comma-separated degrees, e.g. 3,4,5')(func)
    return func


def _emit_report(report: ExperimentReport, output: Optional[str]) -> None:
    click.echo(report.format_table(), nl=False)
    if output is not None:
        Path(output).write_text(report.to_csv(), encoding='utf-8')
        click.echo(f"Wrote {output}", err=True)


@cli.command()
@experiment_options
@click.option('--repetitions', type=int, help='Timed repetitions per cell; the median is reported')
@click.option('--warmup/--no-warmup', default=None, help='Run one untimed pass first')
@click.pass_context
def bench(ctx: click.Context, ms: Optional[str], ns: Optional[str], trials: Optional[int],
          seed: Optional[int], output: Optional[str], repetitions: Optional[int], warmup: Optional[bool]):
    """Time the O(m^2) conversion against the O(m^3) scheme."""
    section = _settings(ctx)['timing']
    try:
        report = run_timing_experiment(
            _parse_int_list(ms, section['ms'], '--ms'),
            _parse_int_list(ns, section['ns'], '--ns'),
            trials=section['trials'] if trials is None else trials,
            seed=section['seed'] if seed is None else seed,
            repetitions=section['repetitions'] if repetitions is None else repetitions,
            warmup=section['warmup'] if warmup is None else warmup,
        )
    except ExperimentConfigError as e:
        fail_with_error(ctx, e, ms=ms, ns=ns, trials=trials)
    _emit_report(report, output)


@cli.command()
@experiment_options
@click.option('--jobs', type=int, help='Worker processes for the trials')
@click.option('--dyadic-bits', type=int, help='Knots are snapped to multiples of 2^-bits')
@click.pass_context
def accuracy(ctx: click.Context, ms: Optional[str], ns: Optional[str], trials: Optional[int],
             seed: Optional[int], output: Optional[str], jobs: Optional[int], dyadic_bits: Optional[int]):
    """Mean correct digits of both float methods against exact arithmetic."""
    section = _settings(ctx)['accuracy']
    jobs = section['jobs'] if jobs is None else jobs
    if jobs < 1:
        fail(f"ExperimentConfigError: jobs must be at least 1, got {jobs}")
    try:
        report = run_accuracy_experiment(
            _parse_int_list(ms, section['ms'], '--ms'),
            _parse_int_list(ns, section['ns'], '--ns'),
            trials=section['trials'] if trials is None else trials,
            seed=section['seed'] if seed is None else seed,
            digit_cap=float(section['digit_cap']),
            dyadic_bits=section['dyadic_bits'] if dyadic_bits is None else dyadic_bits,
            jobs=jobs,
        )
    except ExperimentConfigError as e:
        fail_with_error(ctx, e, ms=ms, ns=ns, trials=trials, jobs=jobs)
    _emit_report(report, output)


def main():
    """Console script entry point."""
    cli(obj={})


if __name__ == "__main__":
    main()
