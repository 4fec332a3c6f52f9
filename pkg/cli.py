# cli.py

"""
Witt Automorphism Toolkit - Command Line File

This file defines the `witt` click command group. Each subcommand parses
its arguments with the grammar in utils.py, calls one library operation and
prints canonical text, or a JSON document under --json.

Exit codes: 0 on success, 1 for a domain error (its name is printed on
standard error), 2 for usage and parse errors.
"""

import functools
import json
import logging
import sys

import click

import autgrp
import centralext
import virasoro
import witt
from errors import ParseError, WittError
from kernel import env_int, format_scalar
from utils import (automorphism_to_json, element_to_json, format_automorphism, format_element,
                   format_laurent, format_matrix, format_vector, format_vir_element,
                   laurent_to_json, matrix_to_json, parse_automorphism, parse_element,
                   parse_element_list, parse_laurent, parse_matrix, parse_vector,
                   parse_vir_element, parse_window, subspace_to_json, vir_element_to_json)

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
SOLVE_WINDOW = env_int('WITT_SOLVE_WINDOW', 10)

# Element arguments may start with "-", e.g. "-x^2 H".
CONTEXT_SETTINGS = {'ignore_unknown_options': True, 'help_option_names': ['-h', '--help']}


# --- Shared plumbing ---
def reports_errors(func):
    """Maps ParseError to a usage error (exit 2) and other domain errors to exit 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ParseError as exc:
            raise click.UsageError(str(exc)) from exc
        except WittError as exc:
            logger.debug('%s raised %s', func.__name__, exc.name, exc_info=True)
            raise click.ClickException(f'{exc.name}: {exc.message}') from exc
    return wrapper


def dimension_option(func):
    return click.option('-n', '--dim', 'n', type=click.IntRange(min=1), default=1,
                        envvar='WITT_DIMENSION', show_default=True,
                        help='Number of variables n.')(func)


def json_option(func):
    return click.option('--json', 'as_json', is_flag=True,
                        help='Print a JSON document instead of text.')(func)


def emit(as_json, text, document):
    if as_json:
        click.echo(json.dumps(document, indent=2))
    else:
        click.echo(text)


def format_index(alpha):
    return '(' + ', '.join(str(a) for a in alpha) + ')'


def load_algebra(source, check=True):
    """A bundled sample name, or the path of an algebra JSON document."""
    if source in centralext.SAMPLE_DOCUMENTS:
        return centralext.FdLieAlgebra.from_document(centralext.SAMPLE_DOCUMENTS[source], check)
    try:
        with open(source, encoding='utf-8') as handle:
            document = json.load(handle)
    except OSError as exc:
        raise click.BadParameter(f'cannot read {source}: {exc.strerror}', param_hint='ALGEBRA')
    except json.JSONDecodeError as exc:
        raise ParseError(f'invalid JSON in {source}: {exc.msg}', exc.pos) from exc
    return centralext.FdLieAlgebra.from_document(document, check)


def load_subspace(algebra, text):
    return centralext.Subspace.span(algebra.dim, parse_matrix(text))


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option('-v', '--verbose', count=True, help='Log to standard error (-vv for debug).')
def cli(verbose):
    """Exact computations in the Witt algebras W_n and the Virasoro algebra."""
    if verbose:
        level = logging.INFO if verbose == 1 else logging.DEBUG
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


command = functools.partial(cli.command, context_settings=CONTEXT_SETTINGS)


# --- Witt algebra ---
@command('bracket')
@click.argument('a')
@click.argument('b')
@dimension_option
@json_option
@reports_errors
def bracket_command(a, b, n, as_json):
    """[A, B] in W_n."""
    result = witt.bracket(parse_element(a, n), parse_element(b, n))
    emit(as_json, format_element(result), element_to_json(result))


@command('grade')
@click.argument('a')
@click.option('--weight', '-w', required=True, help='Integer weight vector, e.g. "(1,2)".')
@dimension_option
@json_option
@reports_errors
def grade_command(a, weight, n, as_json):
    """The (Z, weight)-homogeneous components of A."""
    components = witt.graded_components(parse_element(a, n), parse_vector(weight, n, integral=True))
    lines = [f'{deg}: {format_element(piece)}' for deg, piece in components.items()]
    emit(as_json, '\n'.join(lines) or '0',
         {'components': [{'degree': deg, 'element': element_to_json(piece)}
                         for deg, piece in components.items()]})


@command('lead')
@click.argument('a')
@click.option('--weight', '-w', required=True, help='Integer weight vector.')
@click.option('--side', type=click.Choice([witt.PLUS, witt.MINUS]), default=witt.PLUS, show_default=True)
@dimension_option
@json_option
@reports_errors
def lead_command(a, weight, side, n, as_json):
    """The leading (plus) or least (minus) homogeneous component of A."""
    result = witt.leading_term(parse_element(a, n), parse_vector(weight, n, integral=True), side)
    emit(as_json, format_element(result), element_to_json(result))


@command('support')
@click.argument('a')
@dimension_option
@json_option
@reports_errors
def support_command(a, n, as_json):
    """The weights at which A has a nonzero coefficient."""
    points = sorted(witt.support(parse_element(a, n)))
    emit(as_json, '\n'.join(format_index(p) for p in points), {'support': [list(p) for p in points]})


@command('hull')
@click.argument('a')
@dimension_option
@json_option
@reports_errors
def hull_command(a, n, as_json):
    """Vertices of the Newton polygon of A (n <= 2)."""
    vertices = sorted(witt.newton_polygon_vertices(parse_element(a, n)))
    emit(as_json, '\n'.join(format_index(p) for p in vertices), {'vertices': [list(p) for p in vertices]})


@command('lf-check')
@click.argument('a')
@dimension_option
@json_option
@reports_errors
def lf_check_command(a, n, as_json):
    """Whether ad(A) is locally finite, i.e. A lies in the Cartan subalgebra."""
    finite = witt.is_locally_finite(parse_element(a, n))
    emit(as_json, 'true' if finite else 'false', {'locally_finite': finite})


@command('lf-iterates')
@click.argument('a')
@click.option('--probe', '-b', default=None, help='The element ad(A) is iterated on.')
@click.option('--steps', '-m', type=click.IntRange(min=1), default=10, show_default=True)
@dimension_option
@json_option
@reports_errors
def lf_iterates_command(a, probe, steps, n, as_json):
    """ad(A)^m(B) for m = 1..steps, with the max-norm of each support."""
    element = parse_element(a, n)
    b = parse_element(probe, n) if probe else witt.non_finiteness_probe(element)
    iterates = witt.lf_iterates(element, b, steps)
    norms = witt.support_norms(iterates)
    lines = [f'{m}: [{"-" if norm is None else norm}] {format_element(value)}'
             for m, (norm, value) in enumerate(zip(norms, iterates), start=1)]
    emit(as_json, '\n'.join(lines),
         {'probe': element_to_json(b),
          'iterates': [{'m': m, 'norm': norm, 'element': element_to_json(value)}
                       for m, (norm, value) in enumerate(zip(norms, iterates), start=1)]})


@command('solve-bracket')
@click.argument('b')
@click.argument('target')
@click.option('--window', default=f'-{SOLVE_WINDOW}:{SOLVE_WINDOW}', show_default=True,
              help='Weight box "lo:hi" or "lo:hi,lo:hi,...".')
@dimension_option
@json_option
@reports_errors
def solve_bracket_command(b, target, window, n, as_json):
    """All w in the window with [w, B] = TARGET."""
    solution = witt.solve_bracket_equation(parse_element(b, n), parse_element(target, n),
                                           parse_window(window, n))
    if not solution.solvable:
        emit(as_json, 'no solution', {'solvable': False})
        return
    lines = [f'particular: {format_element(solution.particular)}']
    lines += [f'nullspace {k}: {format_element(v)}' for k, v in enumerate(solution.nullspace, start=1)]
    emit(as_json, '\n'.join(lines),
         {'solvable': True, 'particular': element_to_json(solution.particular),
          'nullspace': [element_to_json(v) for v in solution.nullspace]})


@command('centralizer')
@click.argument('generators', nargs=-1, required=True)
@click.option('--window', default=f'-{SOLVE_WINDOW}:{SOLVE_WINDOW}', show_default=True)
@click.option('--normalizer', is_flag=True, help='Compute the normalizer instead.')
@dimension_option
@json_option
@reports_errors
def centralizer_command(generators, window, normalizer, n, as_json):
    """A basis of the centralizer (or normalizer) of GENERATORS within the window."""
    solve = witt.normalizer_window if normalizer else witt.centralizer_window
    basis = solve(parse_element_list(generators, n), parse_window(window, n))
    emit(as_json, '\n'.join(format_element(v) for v in basis) or '0',
         {'basis': [element_to_json(v) for v in basis]})


# --- Automorphisms ---
@command('apply')
@click.argument('sigma')
@click.argument('x')
@click.option('--laurent', is_flag=True, help='X is a Laurent polynomial, not a Witt element.')
@dimension_option
@json_option
@reports_errors
def apply_command(sigma, x, laurent, n, as_json):
    """Applies the automorphism SIGMA to X."""
    automorphism = parse_automorphism(sigma, n)
    if laurent:
        result = autgrp.apply_to_laurent(automorphism, parse_laurent(x, n))
        emit(as_json, format_laurent(result), laurent_to_json(result))
    else:
        result = autgrp.apply_to_witt(automorphism, parse_element(x, n))
        emit(as_json, format_element(result), element_to_json(result))


@command('compose')
@click.argument('sigma')
@click.argument('tau')
@dimension_option
@json_option
@reports_errors
def compose_command(sigma, tau, n, as_json):
    """The canonical form of SIGMA o TAU."""
    result = autgrp.compose(parse_automorphism(sigma, n), parse_automorphism(tau, n))
    emit(as_json, format_automorphism(result), automorphism_to_json(result))


@command('invert')
@click.argument('sigma')
@dimension_option
@json_option
@reports_errors
def invert_command(sigma, n, as_json):
    """The inverse of SIGMA."""
    result = autgrp.inverse(parse_automorphism(sigma, n))
    emit(as_json, format_automorphism(result), automorphism_to_json(result))


@command('decompose')
@click.argument('ring_map')
@dimension_option
@json_option
@reports_errors
def decompose_command(ring_map, n, as_json):
    """Reads (A, lambda) off a ring map such as "x1 -> 5 x2, x2 -> 7 x1"."""
    if '->' not in ring_map:
        raise click.UsageError('decompose expects a ring map "x1 -> ..., x2 -> ..."')
    result = parse_automorphism(ring_map, n)
    emit(as_json, format_automorphism(result), automorphism_to_json(result))


@command('recover')
@click.option('--cartan', '-H', 'cartan', multiple=True, required=True, help='Image of H_i, in order.')
@click.option('--partials', '-d', 'partials', multiple=True, required=True, help='Image of d_i, in order.')
@dimension_option
@json_option
@reports_errors
def recover_command(cartan, partials, n, as_json):
    """Recovers the automorphism with the given images of H_1..H_n and d_1..d_n."""
    result = autgrp.recover_from_images(parse_element_list(cartan, n), parse_element_list(partials, n))
    emit(as_json, format_automorphism(result), automorphism_to_json(result))


@command('fixators')
@click.argument('sigma')
@dimension_option
@json_option
@reports_errors
def fixators_command(sigma, n, as_json):
    """Whether SIGMA fixes every H_i, and whether it fixes every d_i."""
    flags = autgrp.fixator_flags(parse_automorphism(sigma, n))
    text = f'fixes_cartan: {str(flags.fixes_cartan).lower()}\n' \
           f'fixes_partials: {str(flags.fixes_partials).lower()}'
    emit(as_json, text, {'fixes_cartan': flags.fixes_cartan, 'fixes_partials': flags.fixes_partials})


# --- Virasoro ---
@command('vbracket')
@click.argument('a')
@click.argument('b')
@json_option
@reports_errors
def vbracket_command(a, b, as_json):
    """[A, B] in the Virasoro algebra."""
    result = virasoro.vir_bracket(parse_vir_element(a), parse_vir_element(b))
    emit(as_json, format_vir_element(result), vir_element_to_json(result))


@command('cocycle')
@click.argument('i', type=int)
@click.argument('j', type=int)
@json_option
def cocycle_command(i, j, as_json):
    """The Virasoro cocycle delta_{i,-j} (i^3 - i)/12."""
    value = format_scalar(virasoro.cocycle(i, j))
    emit(as_json, value, {'cocycle': value})


@command('lift-vir')
@click.argument('sigma')
@click.option('--window', type=click.IntRange(min=3), default=virasoro.DEFAULT_LIFT_WINDOW,
              envvar='VIR_LIFT_WINDOW', show_default=True)
@click.option('--verify-window', type=click.IntRange(min=0), default=None,
              help='Re-verification window, at least twice --window (default: max(2 * --window, VIR_VERIFY_WINDOW)).')
@json_option
@reports_errors
def lift_vir_command(sigma, window, verify_window, as_json):
    """The unique lift of an automorphism of W_1 to the Virasoro algebra."""
    if verify_window is not None and verify_window < 2 * window:
        raise click.BadParameter(f'must be at least twice --window ({2 * window})', param_hint='--verify-window')
    lift = virasoro.lift_w1_automorphism(parse_automorphism(sigma, 1), window, verify_window)
    phi = ', '.join(f'{i}: {format_scalar(v)}' for i, v in lift.phi) or '0'
    text = f'base: {format_automorphism(lift.base)}\ngamma: {format_scalar(lift.gamma)}\nphi: {phi}'
    emit(as_json, text, {'base': automorphism_to_json(lift.base), 'gamma': format_scalar(lift.gamma),
                         'phi': {str(i): format_scalar(v) for i, v in lift.phi}})


# --- Finite-dimensional central extensions ---
@command('fd-validate')
@click.argument('algebra')
@json_option
@reports_errors
def fd_validate_command(algebra, as_json):
    """Checks antisymmetry and the Jacobi identity of ALGEBRA (a file or sample name)."""
    report = centralext.validate(load_algebra(algebra, check=False))
    emit(as_json, str(report),
         {'valid': report.valid, 'kind': report.kind,
          'indices': list(report.indices) if report.indices else None})


@command('fd-center')
@click.argument('algebra')
@json_option
@reports_errors
def fd_center_command(algebra, as_json):
    """The centre of ALGEBRA."""
    subspace = centralext.center(load_algebra(algebra))
    emit(as_json, format_matrix(subspace.basis), subspace_to_json(subspace))


@command('fd-derived')
@click.argument('algebra')
@json_option
@reports_errors
def fd_derived_command(algebra, as_json):
    """The derived subalgebra [L, L] of ALGEBRA."""
    subspace = centralext.derived_subalgebra(load_algebra(algebra))
    emit(as_json, format_matrix(subspace.basis), subspace_to_json(subspace))


@command('fd-quotient')
@click.argument('algebra')
@click.option('--z', 'z', default='[]', show_default=True, help='Basis of the central subspace Z.')
@json_option
@reports_errors
def fd_quotient_command(algebra, z, as_json):
    """The quotient W = L/Z, its section and its cocycle."""
    lie = load_algebra(algebra)
    quotient = centralext.quotient_by_central(lie, load_subspace(lie, z))
    cocycle = [{'pair': [a + 1, b + 1], 'z': [format_scalar(t) for t in value]}
               for a, b, value in quotient.cocycle]
    lines = [f'section: {", ".join(lie.labels[s] for s in quotient.section) or "-"}',
             f'quotient: {json.dumps(quotient.algebra.to_document())}']
    lines += [f'cocycle ({a + 1}, {b + 1}): {format_vector(value)}' for a, b, value in quotient.cocycle]
    emit(as_json, '\n'.join(lines),
         {'section': [s + 1 for s in quotient.section], 'quotient': quotient.algebra.to_document(),
          'cocycle': cocycle})


@command('fd-kernel')
@click.argument('algebra')
@click.option('--z', 'z', default='[]', show_default=True)
@json_option
@reports_errors
def fd_kernel_command(algebra, z, as_json):
    """A basis of the kernel group K of shears tau_phi."""
    lie = load_algebra(algebra)
    elements = centralext.extension_kernel(lie, load_subspace(lie, z))
    lines = [f'dim K = {len(elements)}'] + [format_matrix(k.tau) for k in elements]
    emit(as_json, '\n'.join(lines),
         {'dim': len(elements), 'tau': [matrix_to_json(k.tau) for k in elements]})


@command('fd-lift')
@click.argument('algebra')
@click.option('--z', 'z', default='[]', show_default=True)
@click.option('--sigma', required=True, help='The automorphism of W = L/Z as a matrix.')
@json_option
@reports_errors
def fd_lift_command(algebra, z, sigma, as_json):
    """All lifts to L of an automorphism of W = L/Z."""
    lie = load_algebra(algebra)
    solution = centralext.lift_fd_automorphism(lie, load_subspace(lie, z), parse_matrix(sigma))
    conditions = solution.conditions
    lines = [f'classification: {solution.classification}',
             f'conditions: central={str(conditions.central).lower()} '
             f'in_derived={str(conditions.in_derived).lower()} '
             f'quotient_perfect={str(conditions.quotient_perfect).lower()}']
    if solution.base is not None:
        lines.append(f'base: {format_matrix(solution.base)}')
        lines += [f'family {k}: {format_matrix(d)}' for k, d in enumerate(solution.family, start=1)]
    emit(as_json, '\n'.join(lines),
         {'classification': solution.classification,
          'conditions': {'central': conditions.central, 'in_derived': conditions.in_derived,
                         'quotient_perfect': conditions.quotient_perfect},
          'base': matrix_to_json(solution.base) if solution.base is not None else None,
          'family': [matrix_to_json(d) for d in solution.family]})


@command('sample')
@click.argument('name', type=click.Choice(sorted(centralext.SAMPLE_DOCUMENTS)))
def sample_command(name):
    """Prints a bundled algebra document."""
    click.echo(json.dumps(centralext.sample_algebra(name).to_document(), indent=2))


if __name__ == '__main__':
    cli()
