# routes/__init__.py

"""
Witt Automorphism Toolkit - Routes Package

Blueprints of the JSON HTTP API, one per library area.
"""

from flask import jsonify


def invalid(form):
    """
    The 400 response for a request body that failed form validation.

    Args:
        form (FlaskForm): The validated form.

    Returns:
        tuple: JSON body with the WTForms error dictionary, and the 400 status code.
    """
    return jsonify({'error': 'ValidationError', 'message': 'invalid request body',
                    'fields': form.errors}), 400
