# routes/virasoro.py

"""
Witt Automorphism Toolkit - Virasoro Blueprint

This blueprint serves the Virasoro bracket, its cocycle and the lift of
automorphisms of W_1 under /vir.
"""

from flask import Blueprint, jsonify

import virasoro
from forms import CocycleForm, LiftVirForm, VirBracketForm
from kernel import format_scalar
from routes import invalid
from utils import automorphism_to_json, format_vir_element, vir_element_to_json

virasoro_api = Blueprint('virasoro_api', __name__, url_prefix='/vir')


@virasoro_api.route('/bracket', methods=['POST'])
def bracket():
    form = VirBracketForm()
    if not form.validate_on_submit():
        return invalid(form)
    result = virasoro.vir_bracket(form.values['a'], form.values['b'])
    return jsonify({'text': format_vir_element(result), **vir_element_to_json(result)})


@virasoro_api.route('/cocycle', methods=['POST'])
def cocycle():
    form = CocycleForm()
    if not form.validate_on_submit():
        return invalid(form)
    return jsonify({'cocycle': format_scalar(virasoro.cocycle(form.i.data, form.j.data))})


@virasoro_api.route('/lift', methods=['POST'])
def lift():
    """
    Lifts an automorphism of W_1 to the Virasoro algebra.

    Request body:
        sigma (str): The automorphism of W_1.
        window (int): Solving window N, default VIR_LIFT_WINDOW.
        verify_window (int): Re-verification window, default max(2N, VIR_VERIFY_WINDOW).

    Returns:
        Response: gamma, the nonzero values of phi, and the base automorphism.
    """
    form = LiftVirForm()
    if not form.validate_on_submit():
        return invalid(form)
    result = virasoro.lift_w1_automorphism(form.values['sigma'], form.window.data, form.verify_window.data)
    return jsonify({'base': automorphism_to_json(result.base),
                    'gamma': format_scalar(result.gamma),
                    'phi': {str(i): format_scalar(v) for i, v in result.phi}})
