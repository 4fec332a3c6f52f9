# routes/witt.py

"""
Witt Automorphism Toolkit - Witt Algebra Blueprint

This blueprint exposes the Witt algebra operations (bracket, gradings,
supports, local finiteness and window solving) as JSON endpoints under /witt.
"""

from flask import Blueprint, jsonify

import witt
from forms import BracketForm, CentralizerForm, ElementForm, GradeForm, IteratesForm, SolveBracketForm
from routes import invalid
from utils import element_to_json, format_element

# Create a Blueprint named 'witt_api' for everything under /witt
witt_api = Blueprint('witt_api', __name__, url_prefix='/witt')


def _element_response(element):
    return jsonify({'text': format_element(element), **element_to_json(element)})


@witt_api.route('/bracket', methods=['POST'])
def bracket():
    """
    [a, b] in W_n.

    Request body:
        a (str), b (str): Elements in the text grammar.
        n (int): Number of variables, default 1.

    Returns:
        Response: The bracket as text and as a terms document.
    """
    form = BracketForm()
    if not form.validate_on_submit():
        return invalid(form)
    return _element_response(witt.bracket(form.values['a'], form.values['b']))


@witt_api.route('/grade', methods=['POST'])
def grade():
    """Homogeneous components of a for the integer weight vector `weight`."""
    form = GradeForm()
    if not form.validate_on_submit():
        return invalid(form)
    components = witt.graded_components(form.values['a'], form.values['weight'])
    return jsonify({'components': [{'degree': deg, 'text': format_element(piece),
                                    **element_to_json(piece)}
                                   for deg, piece in components.items()]})


@witt_api.route('/lead', methods=['POST'])
def lead():
    form = GradeForm()
    if not form.validate_on_submit():
        return invalid(form)
    return _element_response(witt.leading_term(form.values['a'], form.values['weight'], form.side.data))


@witt_api.route('/support', methods=['POST'])
def support():
    form = ElementForm()
    if not form.validate_on_submit():
        return invalid(form)
    return jsonify({'support': [list(p) for p in sorted(witt.support(form.values['a']))]})


@witt_api.route('/hull', methods=['POST'])
def hull():
    form = ElementForm()
    if not form.validate_on_submit():
        return invalid(form)
    vertices = sorted(witt.newton_polygon_vertices(form.values['a']))
    return jsonify({'vertices': [list(p) for p in vertices]})


@witt_api.route('/lf-check', methods=['POST'])
def lf_check():
    form = ElementForm()
    if not form.validate_on_submit():
        return invalid(form)
    return jsonify({'locally_finite': witt.is_locally_finite(form.values['a'])})


@witt_api.route('/lf-iterates', methods=['POST'])
def lf_iterates():
    """
    ad(a)^m(probe) for m = 1..m, with support norms.

    The probe defaults to the non-finiteness probe of a homogeneous a.
    """
    form = IteratesForm()
    if not form.validate_on_submit():
        return invalid(form)
    a = form.values['a']
    probe = form.values.get('probe') or witt.non_finiteness_probe(a)
    iterates = witt.lf_iterates(a, probe, form.m.data)
    norms = witt.support_norms(iterates)
    return jsonify({'probe': element_to_json(probe),
                    'iterates': [{'m': m, 'norm': norm, 'text': format_element(value)}
                                 for m, (norm, value) in enumerate(zip(norms, iterates), start=1)]})


@witt_api.route('/solve-bracket', methods=['POST'])
def solve_bracket():
    """All w in the window with [w, b] = target."""
    form = SolveBracketForm()
    if not form.validate_on_submit():
        return invalid(form)
    solution = witt.solve_bracket_equation(form.values['b'], form.values['target'], form.values['window'])
    if not solution.solvable:
        return jsonify({'solvable': False})
    return jsonify({'solvable': True,
                    'particular': format_element(solution.particular),
                    'nullspace': [format_element(v) for v in solution.nullspace]})


@witt_api.route('/centralizer', methods=['POST'])
def centralizer():
    """A basis of the centralizer, or with `normalizer` set the normalizer, within the window."""
    form = CentralizerForm()
    if not form.validate_on_submit():
        return invalid(form)
    solve = witt.normalizer_window if form.normalizer.data else witt.centralizer_window
    basis = solve(form.values['generators'], form.values['window'])
    return jsonify({'basis': [format_element(v) for v in basis]})
