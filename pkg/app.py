# app.py

"""
Witt Automorphism Toolkit - Main Application File

This file initializes the Flask application, reads its configuration from
environment variables, registers the API blueprints, maps domain errors
to JSON responses, attaches the `witt` command group to the Flask CLI and
configures logging when the development server is run directly.
"""

import logging # Import the logging module
import os # Import os to access environment variables

from flask import Flask, jsonify, url_for

from cli import LOG_FORMAT, cli
from errors import WittError

# Import blueprints *after* the library modules they wrap
from routes.algebras import algebras
from routes.automorphisms import automorphisms
from routes.virasoro import virasoro_api
from routes.witt import witt_api


# Create the Flask application instance
app = Flask(__name__)

# --- Configuration ---
# Get SECRET_KEY from environment variable, default to hardcoded dev key if not set
app.config['SECRET_KEY'] = os.environ.get('SECRET_KEY', 'witt_toolkit_dev_key')

# Determine debug mode based on environment variable, default to False
app.config['DEBUG'] = os.environ.get('DEBUG', 'False').lower() in ('true', '1', 't')

# Flask-WTF reads JSON bodies; the API forms turn CSRF off individually
app.config['WTF_CSRF_ENABLED'] = os.environ.get('WTF_CSRF_ENABLED', 'False').lower() in ('true', '1', 't')

# Log level for app.logger and the library loggers, e.g. DEBUG to see solver sizes
app.config['LOG_LEVEL'] = os.environ.get('LOG_LEVEL', 'WARNING').upper()
app.logger.setLevel(app.config['LOG_LEVEL'])
# --- End Configuration ---


# --- Register Blueprints ---
app.register_blueprint(witt_api)
app.register_blueprint(automorphisms)
app.register_blueprint(virasoro_api)
app.register_blueprint(algebras)
# --- End Register Blueprints ---

# Make the command line available as `flask witt ...`
app.cli.add_command(cli, 'witt')


# --- Main Routes ---
@app.route('/')
def index():
    """
    Lists the API endpoints.

    Returns:
        Response: JSON mapping of endpoint names to URLs.
    """
    endpoints = sorted(rule.endpoint for rule in app.url_map.iter_rules()
                       if 'POST' in rule.methods)
    return jsonify({'name': 'witt-toolkit',
                    'endpoints': {endpoint: url_for(endpoint) for endpoint in endpoints}})
# --- End Main Routes ---


# --- Error Handlers ---
@app.errorhandler(WittError)
def domain_error(e):
    """
    Handles domain errors (NotUnimodular, NotCentral, ...) raised by the library.

    Args:
        e (WittError): The raised error.

    Returns:
        tuple: JSON error body and the 422 status code.
    """
    app.logger.info('Domain error %s: %s', e.name, e.message)
    return jsonify({'error': e.name, 'message': e.message}), 422


@app.errorhandler(404)
def page_not_found(e):
    # 404s are common and not worth logging
    return jsonify({'error': 'NotFound', 'message': 'no such endpoint'}), 404


@app.errorhandler(405)
def method_not_allowed(e):
    return jsonify({'error': 'MethodNotAllowed', 'message': 'the API endpoints accept POST'}), 405


@app.errorhandler(500)
def internal_server_error(e):
    """
    Handles 500 Internal Server errors by logging the error and returning a JSON body.

    Args:
        e: The exception object (contains error details).

    Returns:
        tuple: JSON error body and the 500 status code.
    """
    # Log the exception details using the app.logger
    app.logger.error('Internal Server Error: %s', e)
    return jsonify({'error': 'InternalServerError', 'message': 'internal server error'}), 500
# --- End Error Handlers ---


if __name__ == '__main__':
    """
    Main entry point for running the Flask development server.
    This block ONLY runs when you execute app.py directly (e.g., python app.py);
    Gunicorn imports the 'app' instance instead.
    """
    # --- Logging Configuration (for development server) ---
    # Write records at LOG_LEVEL and above to LOG_FILE (default error.log)
    file_handler = logging.FileHandler(os.environ.get('LOG_FILE', 'error.log'))
    file_handler.setLevel(app.config['LOG_LEVEL'])
    formatter = logging.Formatter(LOG_FORMAT)
    file_handler.setFormatter(formatter)
    app.logger.addHandler(file_handler)
    # Library modules log under their module names; route them to the same file
    for name in ('kernel', 'witt', 'autgrp', 'virasoro', 'centralext'):
        library_logger = logging.getLogger(name)
        library_logger.setLevel(app.config['LOG_LEVEL'])
        library_logger.addHandler(file_handler)
    # --- End Logging Configuration ---

    # Run the Flask development server
    app.run(debug=app.config['DEBUG'])
