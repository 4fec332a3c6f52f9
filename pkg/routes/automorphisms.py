# routes/automorphisms.py

"""
Witt Automorphism Toolkit - Automorphisms Blueprint

This blueprint handles the automorphism group endpoints under /aut:
applying, composing and inverting automorphisms, decomposing ring maps,
recovering an automorphism from generator images, and fixator checks.
"""

from flask import Blueprint, jsonify

import autgrp
from forms import ApplyForm, AutomorphismForm, ComposeForm, DecomposeForm, RecoverForm
from routes import invalid
from utils import (automorphism_to_json, element_to_json, format_automorphism, format_element,
                   format_laurent, laurent_to_json)

automorphisms = Blueprint('automorphisms', __name__, url_prefix='/aut')


def _automorphism_response(sigma):
    return jsonify({'text': format_automorphism(sigma), **automorphism_to_json(sigma)})


@automorphisms.route('/apply', methods=['POST'])
def apply():
    """
    Applies sigma to x.

    Request body:
        sigma (str): "A=[[...]] lambda=(...)" or a ring map.
        x (str): A Witt element, or a Laurent polynomial when `laurent` is true.
        n (int): Number of variables, default 1.
    """
    form = ApplyForm()
    if not form.validate_on_submit():
        return invalid(form)
    sigma, x = form.values['sigma'], form.values['x']
    if form.laurent.data:
        result = autgrp.apply_to_laurent(sigma, x)
        return jsonify({'text': format_laurent(result), **laurent_to_json(result)})
    result = autgrp.apply_to_witt(sigma, x)
    return jsonify({'text': format_element(result), **element_to_json(result)})


@automorphisms.route('/compose', methods=['POST'])
def compose():
    form = ComposeForm()
    if not form.validate_on_submit():
        return invalid(form)
    return _automorphism_response(autgrp.compose(form.values['sigma'], form.values['tau']))


@automorphisms.route('/invert', methods=['POST'])
def invert():
    form = AutomorphismForm()
    if not form.validate_on_submit():
        return invalid(form)
    return _automorphism_response(autgrp.inverse(form.values['sigma']))


@automorphisms.route('/decompose', methods=['POST'])
def decompose():
    # Parsing the ring map already decomposes it; NotAUnit and NotUnimodular surface as 422
    form = DecomposeForm()
    if not form.validate_on_submit():
        return invalid(form)
    return _automorphism_response(form.values['ring_map'])


@automorphisms.route('/recover', methods=['POST'])
def recover():
    """Recovers sigma from the lists `cartan` (images of H_i) and `partials` (images of d_i)."""
    form = RecoverForm()
    if not form.validate_on_submit():
        return invalid(form)
    return _automorphism_response(autgrp.recover_from_images(form.values['cartan'], form.values['partials']))


@automorphisms.route('/fixators', methods=['POST'])
def fixators():
    form = AutomorphismForm()
    if not form.validate_on_submit():
        return invalid(form)
    flags = autgrp.fixator_flags(form.values['sigma'])
    return jsonify({'fixes_cartan': flags.fixes_cartan, 'fixes_partials': flags.fixes_partials})
