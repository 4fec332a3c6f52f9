# tests/conftest.py

"""
Shared fixtures: the Flask app and test client, click runners, and the
hypothesis profile used by the randomized suites.
"""

import os

import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from app import app as flask_app
from cli import cli

# Exact arithmetic makes individual examples slow; no per-example deadline.
settings.register_profile('witt', deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'witt'))


@pytest.fixture
def app():
    flask_app.config.update(TESTING=True, WTF_CSRF_ENABLED=False)
    yield flask_app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def invoke(runner):
    """Runs `witt ARGS...` and returns the click Result."""
    def run(*args):
        return runner.invoke(cli, list(args))
    return run
