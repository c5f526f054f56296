"""
Telescopia - Kommandozeile
Unterbefehle für Summation, Integration, Diagonalen und Operatorumwandlung
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional, Sequence, Tuple

import click
from sympy import Rational, SympifyError

from ..config.diagonal_profiles import get_profile, list_profiles
from ..config.settings import configure_logging, load_config
from ..core.rational_function import RationalFunction
from ..diagonal.challenge import challenge_problem, challenge_run
from ..diagonal.problem import DiagonalProblem
from ..errors import DomainError, TelescopiaError, VerificationError
from ..integration.definite import integral_rhs
from ..integration.hermite import hermite_reduce
from ..integration.method_manager import MethodManager
from ..integration.methods.base_method import verify_ct_diff
from ..integration.order_degree import order_degree_scan, points_to_csv
from ..ore.operator import OreAlgebraSpec, format_operator, parse_operator
from ..ore.recurrence import ode_to_rec
from ..parsing.grammar import parse_expr
from ..parsing.lowering import lower_rational, lower_term
from ..summation.gosper import brute_force_partial_sums, gosper, gosper_sum_values, verify_gosper
from ..summation.hyperterm import ProperTermExpr, compile_proper_term
from ..summation.sum_recurrence import check_sum_recurrence, ct_to_sum_recurrence
from ..summation.zeilberger import verify_ct_shift, zeilberger
from .output import emit_csv, emit_human, emit_json

logger = logging.getLogger(__name__)

# interner Index für Terme, die nur von der Summationsvariablen abhängen
_HIDDEN_INDEX = "_n"


class RationalParamType(click.ParamType):
    """Exakte rationale Zahl, z.B. `0`, `-3` oder `1/2`."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Rational):
            return value
        try:
            return Rational(value)
        except (TypeError, ValueError, SympifyError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalParamType()


class TelescopiaGroup(click.Group):
    """Übersetzt Bibliotheksfehler in Exit-Codes und eine Fehlerzeile auf stderr."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except TelescopiaError as exc:
            logger.debug("command failed", exc_info=True)
            click.echo(f"error: {exc}", err=True)
            ctx.exit(exc.exit_code)


json_option = click.option('--json', 'as_json', is_flag=True, help="JSON auf stdout statt Textausgabe")


def _section(cfg: Dict[str, Any], name: str) -> Dict[str, Any]:
    return cfg.get(name, {}) or {}


def _validate(cfg: Dict[str, Any]) -> bool:
    return bool(_section(cfg, 'output').get('validate_json', True))


def _parse_term(expression: str, declared: Sequence[str], variables: Tuple[str, str]) -> ProperTermExpr:
    return lower_term(parse_expr(expression, declared), variables)


def _parse_rational(expression: str, variables: Sequence[str]) -> RationalFunction:
    return lower_rational(parse_expr(expression, variables), variables)


def _emit(cfg, as_json: bool, document: Dict[str, Any], schema: str, title: str, fields) -> None:
    if as_json:
        emit_json(document, schema, validate=_validate(cfg))
    else:
        emit_human(title, fields)


@click.group(cls=TelescopiaGroup)
@click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
              help="YAML-Datei, die die Standardkonfiguration überlagert")
@click.option('--log-level', default=None, help="z.B. DEBUG, INFO, WARNING")
@click.pass_context
def cli(ctx, config_path: Optional[str], log_level: Optional[str]):
    """Exaktes kreatives Teleskopieren."""
    cfg = load_config(config_path)
    configure_logging(cfg, log_level)
    ctx.obj = cfg


# ----------------------------------------------------------------------
# Summation
# ----------------------------------------------------------------------

@cli.command('gosper')
@click.argument('expression')
@click.option('--var', default='k', show_default=True, help="Summationsvariable")
@click.option('--check', type=click.IntRange(min=0), default=None,
              help="Partialsummen bis N mit direkter Summation vergleichen")
@json_option
@click.pass_obj
def gosper_command(cfg, expression: str, var: str, check: Optional[int], as_json: bool):
    """Unbestimmte Summation eines hypergeometrischen Terms."""
    term = _parse_term(expression, (var,), (_HIDDEN_INDEX, var))
    _, ratio = term.shift_quotients()
    result = gosper(ratio, var)

    check_doc = None
    if result is not None:
        if not verify_gosper(ratio, result):
            raise VerificationError(f"Gosper certificate {result.certificate} does not verify")
        if check is not None:
            hyper = compile_proper_term(term)
            closed = gosper_sum_values(hyper, result, check)
            direct = brute_force_partial_sums(hyper, check)
            for index, (a, b) in enumerate(zip(closed, direct)):
                if a != b:
                    raise VerificationError(f"partial sum mismatch at {var} = {index}", failing_index=index)
            check_doc = {'terms': check + 1, 'partial_sums': [str(v) for v in closed]}

    document = {
        'command': 'gosper',
        'expression': expression,
        'variable': var,
        'summable': result is not None,
        'certificate': str(result.certificate) if result is not None else None,
        'verified': result is not None,
        'check': check_doc,
    }
    if result is None:
        fields = [('result', 'not summable')]
    else:
        fields = [('certificate', result.certificate), ('antidifference', f"({result.certificate})*f({var})")]
        if check_doc:
            fields.append(('partial sums', check_doc['partial_sums']))
    _emit(cfg, as_json, document, 'gosper', f"gosper: {expression}", fields)


def _telescope_sum(cfg, expression: str, n: str, k: str, max_order: Optional[int]):
    term = _parse_term(expression, (n, k), (n, k))
    hyper = compile_proper_term(term)
    r_max = max_order if max_order is not None else int(_section(cfg, 'zeilberger').get('max_order', 5))
    result = zeilberger(hyper, r_max=r_max)
    if not verify_ct_shift(hyper, result):
        raise VerificationError(f"telescoper {result.telescoper} does not verify")
    return hyper, result


@cli.command('zeilberger')
@click.argument('expression')
@click.option('--n', 'n', default='n', show_default=True, help="freie Variable")
@click.option('--k', 'k', default='k', show_default=True, help="Summationsvariable")
@click.option('--max-order', type=click.IntRange(min=0), default=None)
@json_option
@click.pass_obj
def zeilberger_command(cfg, expression: str, n: str, k: str, max_order: Optional[int], as_json: bool):
    """Telescoper und Zertifikat eines eigentlichen hypergeometrischen Terms."""
    _, result = _telescope_sum(cfg, expression, n, k, max_order)
    document = {
        'command': 'zeilberger',
        'expression': expression,
        'n': n,
        'k': k,
        **result.to_dict(),
        'verified': True,
    }
    fields = [('telescoper', format_operator(result.telescoper)),
              ('certificate', result.certificate),
              ('order', result.order),
              ('verified', True)]
    _emit(cfg, as_json, document, 'zeilberger', f"zeilberger: {expression}", fields)


@cli.command('sumrec')
@click.argument('expression')
@click.option('--n', 'n', default='n', show_default=True)
@click.option('--k', 'k', default='k', show_default=True)
@click.option('--max-order', type=click.IntRange(min=0), default=None)
@click.option('--check', type=click.IntRange(min=0), default=None,
              help="Rekurrenz an den Summen für n = 0..N prüfen")
@json_option
@click.pass_obj
def sumrec_command(cfg, expression: str, n: str, k: str, max_order: Optional[int],
                   check: Optional[int], as_json: bool):
    """Rekurrenz der bestimmten Summe über k = 0..n."""
    hyper, result = _telescope_sum(cfg, expression, n, k, max_order)
    recurrence = ct_to_sum_recurrence(hyper, result)
    terms = check if check is not None else int(_section(cfg, 'summation').get('check_terms', 20))
    report = check_sum_recurrence(hyper, recurrence, terms + 1)
    if not report.ok:
        raise VerificationError(f"sum recurrence fails at {n} = {report.failing[0]}",
                                failing_index=report.failing[0])
    rhs = [str(recurrence.rhs(m)) for m in range(terms + 1)]
    document = {
        'command': 'sumrec',
        'expression': expression,
        'n': n,
        'k': k,
        'telescoper': str(result.telescoper),
        'certificate': str(result.certificate),
        'recurrence': str(recurrence),
        'homogeneous': all(v == '0' for v in rhs),
        'rhs': rhs,
        'check': report.to_dict(),
    }
    fields = [('recurrence', recurrence),
              ('telescoper', format_operator(result.telescoper)),
              ('certificate', result.certificate),
              ('G(n)', rhs),
              ('sums', document['check']['sums']),
              ('singular indices', report.singular or '-')]
    _emit(cfg, as_json, document, 'sumrec', f"sumrec: {expression}", fields)


# ----------------------------------------------------------------------
# Integration
# ----------------------------------------------------------------------

@cli.command('hermite')
@click.argument('expression')
@click.option('--x', 'x', default='x', show_default=True, help="Parameter")
@click.option('--y', 'y', default='y', show_default=True, help="Integrationsvariable")
@json_option
@click.pass_obj
def hermite_command(cfg, expression: str, x: str, y: str, as_json: bool):
    """Hermite-Reduktion f = Dy(g) + h."""
    f = _parse_rational(expression, (x, y))
    result = hermite_reduce(f, y)
    if not result.verify(f):
        raise VerificationError(f"Hermite reduction of {f} does not verify")
    document = {'command': 'hermite', 'expression': expression, **result.to_dict(), 'verified': True}
    _emit(cfg, as_json, document, 'hermite', f"hermite: {expression}", [('g', result.g), ('h', result.h)])


@cli.command('ct-rational')
@click.argument('expression')
@click.option('--x', 'x', default='x', show_default=True)
@click.option('--y', 'y', default='y', show_default=True)
@click.option('--method', type=click.Choice(['reduction', 'az']), default=None)
@click.option('--order', type=click.IntRange(min=0), default=None, help="feste Ordnung (az) bzw. Höchstordnung")
@click.option('--bounds', type=(RATIONAL, RATIONAL), default=None,
              help="Integrationsgrenzen a b für die rechte Seite von L·∫f")
@json_option
@click.pass_obj
def ct_rational_command(cfg, expression: str, x: str, y: str, method: Optional[str], order: Optional[int],
                        bounds, as_json: bool):
    """Telescoper einer rationalen Funktion bezüglich Dy."""
    f = _parse_rational(expression, (x, y))
    manager = MethodManager(_section(cfg, 'rational_ct'))
    result = manager.telescope(f, x, y, method=method, order=order)
    if not verify_ct_diff(f, result):
        raise VerificationError(f"telescoper {result.telescoper} does not verify")

    integral = None
    if bounds is not None:
        lower, upper = bounds
        integral = {'lower': str(lower), 'upper': str(upper), 'value': str(integral_rhs(result, lower, upper))}
    document = {
        'command': 'ct-rational',
        'expression': expression,
        'x': x,
        'y': y,
        **result.to_dict(),
        'verified': True,
        'integral_rhs': integral,
    }
    fields = [('telescoper', format_operator(result.telescoper)),
              ('certificate', result.certificate),
              ('method', result.method),
              ('verified', True)]
    if integral:
        fields.append((f"rhs on [{integral['lower']}, {integral['upper']}]", integral['value']))
    _emit(cfg, as_json, document, 'ct_rational', f"ct-rational: {expression}", fields)


@cli.command('od-curve')
@click.argument('expression')
@click.option('--x', 'x', default='x', show_default=True)
@click.option('--y', 'y', default='y', show_default=True)
@click.option('--rmin', type=click.IntRange(min=0), default=None)
@click.option('--rmax', type=click.IntRange(min=0), default=None)
@click.option('--dcap', type=click.IntRange(min=0), default=None)
@click.option('--workers', type=click.IntRange(min=1), default=None)
@json_option
@click.pass_obj
def od_curve_command(cfg, expression: str, x: str, y: str, rmin: Optional[int], rmax: Optional[int],
                     dcap: Optional[int], workers: Optional[int], as_json: bool):
    """Ordnungs-Grad-Kurve als CSV (`order,degree`)."""
    section = _section(cfg, 'order_degree')
    f = _parse_rational(expression, (x, y))
    points = order_degree_scan(
        f,
        r_min=rmin if rmin is not None else int(section.get('r_min', 0)),
        r_max=rmax if rmax is not None else int(section.get('r_max', 4)),
        d_cap=dcap if dcap is not None else int(section.get('d_cap', 20)),
        x=x,
        y=y,
        workers=workers if workers is not None else int(section.get('workers', 1)),
    )
    if as_json:
        document = {'command': 'od-curve', 'expression': expression, 'x': x, 'y': y,
                    'points': [p.to_dict() for p in points]}
        emit_json(document, 'od_curve', validate=_validate(cfg))
    else:
        emit_csv(points_to_csv(points))


# ----------------------------------------------------------------------
# Diagonalen und Operatoren
# ----------------------------------------------------------------------

@cli.command('diagonal')
@click.argument('expression', required=False)
@click.option('--d', 'd', type=int, default=None, help="Anzahl der Variablen x1..xd")
@click.option('--challenge', is_flag=True, help="1/(1 - Σ x_i/(1 - x_i)) verwenden")
@click.option('--check', type=click.IntRange(min=0), default=None, help="Reihenkoeffizienten 0..N prüfen")
@click.option('--profile', type=click.Choice(list_profiles()), default=None)
@click.option('--list-profiles', 'list_profiles_flag', is_flag=True, help="Benannte Diagonalprobleme auflisten")
@click.pass_obj
def diagonal_command(cfg, expression: Optional[str], d: Optional[int], challenge: bool,
                     check: Optional[int], profile: Optional[str], list_profiles_flag: bool):
    """Diagonal-ODE, Rekurrenz und Reihenabgleich als JSON-Bericht."""
    if list_profiles_flag:
        profiles = [{'name': name, **get_profile(name).to_dict()} for name in list_profiles()]
        emit_json({'command': 'diagonal', 'profiles': profiles}, 'diagonal_profiles', validate=_validate(cfg))
        return
    section = _section(cfg, 'diagonal')
    sources = sum(1 for s in (expression, profile) if s) + (1 if challenge else 0)
    if sources != 1:
        raise click.UsageError("give exactly one of EXPRESSION, --challenge or --profile")

    function = expression
    if profile:
        chosen = get_profile(profile)
        problem = chosen.problem()
        function = chosen.function
    elif challenge:
        problem = challenge_problem(d if d is not None else 2)
        function = str(problem.F)
    else:
        count = d if d is not None else 2
        if count < 1:
            raise DomainError(f"dimension must be positive, got {count}")
        variables = tuple(f"x{i}" for i in range(1, count + 1))
        problem = DiagonalProblem(_parse_rational(expression, variables), variables)
    if d is not None and d != problem.d:
        raise DomainError(f"problem has {problem.d} variables, --d is {d}")

    terms = check if check is not None else int(section.get('check_terms', 30))
    report = challenge_run(problem.d, terms, problem,
                           x=section.get('diagonal_variable', 'x'),
                           z=section.get('integration_variable', 'z'))
    report.raise_for_status()
    document = {'command': 'diagonal', 'function': function, 'variables': list(problem.variables),
                **report.to_dict()}
    emit_json(document, 'diagonal_report', validate=_validate(cfg))


@cli.command('ode2rec')
@click.argument('operator')
@click.option('--x', 'x', default='x', show_default=True)
@click.option('--index', default='n', show_default=True)
@json_option
@click.pass_obj
def ode2rec_command(cfg, operator: str, x: str, index: str, as_json: bool):
    """Differentialoperator in x, Dx -> Rekurrenz der Taylor-Koeffizienten."""
    op = parse_operator(operator, OreAlgebraSpec.derivation(x))
    recurrence = ode_to_rec(op, index)
    document = {
        'command': 'ode2rec',
        'operator': format_operator(op),
        **recurrence.to_dict(),
        'recurrence': str(recurrence),
    }
    _emit(cfg, as_json, document, 'ode2rec', f"ode2rec: {format_operator(op)}",
          [('recurrence', recurrence), ('order', recurrence.order)])


def main() -> None:
    cli(prog_name='telescopia')


__all__ = ['cli', 'main']
