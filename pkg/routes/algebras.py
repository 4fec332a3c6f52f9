# routes/algebras.py

"""
Witt Automorphism Toolkit - Finite-Dimensional Algebras Blueprint

This blueprint handles central extensions of finite-dimensional Lie
algebras under /fd: a combined analysis of an algebra and a central
subspace, and the lift of an automorphism of the quotient.
"""

from flask import Blueprint, jsonify

import centralext
from forms import AlgebraForm, FdLiftForm
from kernel import format_scalar
from routes import invalid
from utils import matrix_to_json, subspace_to_json

algebras = Blueprint('algebras', __name__, url_prefix='/fd')


@algebras.route('/analyze', methods=['POST'])
def analyze():
    """
    Validates an algebra and, when valid, reports its centre, derived
    subalgebra, the quotient by z and the kernel group K.

    Request body:
        algebra (object) or sample (str): The algebra.
        z (str): Basis of the central subspace as a matrix, default "[]".

    Returns:
        Response: The validation report, plus the analysis for a valid algebra.
    """
    form = AlgebraForm()
    if not form.validate_on_submit():
        return invalid(form)
    algebra = form.load(check=False)
    report = centralext.validate(algebra)
    body = {'valid': report.valid, 'kind': report.kind,
            'indices': list(report.indices) if report.indices else None}
    if not report.valid:
        return jsonify(body)

    subspace = form.subspace(algebra)
    quotient = centralext.quotient_by_central(algebra, subspace)
    conditions = centralext.extension_conditions(algebra, subspace)
    body.update({
        'center': subspace_to_json(centralext.center(algebra)),
        'derived': subspace_to_json(centralext.derived_subalgebra(algebra)),
        'quotient': quotient.algebra.to_document(),
        'section': [s + 1 for s in quotient.section],
        'cocycle': [{'pair': [a + 1, b + 1], 'z': [format_scalar(t) for t in value]}
                    for a, b, value in quotient.cocycle],
        'conditions': {'central': conditions.central, 'in_derived': conditions.in_derived,
                       'quotient_perfect': conditions.quotient_perfect,
                       'unique_lifts': conditions.unique_lifts},
        'kernel': [matrix_to_json(k.tau) for k in centralext.extension_kernel(algebra, subspace)],
    })
    return jsonify(body)


@algebras.route('/lift', methods=['POST'])
def lift():
    """All lifts of the automorphism `sigma` of W = L/z to L."""
    form = FdLiftForm()
    if not form.validate_on_submit():
        return invalid(form)
    algebra = form.load()
    solution = centralext.lift_fd_automorphism(algebra, form.subspace(algebra), form.values['sigma'])
    return jsonify({'classification': solution.classification,
                    'base': matrix_to_json(solution.base) if solution.base is not None else None,
                    'family': [matrix_to_json(d) for d in solution.family]})
