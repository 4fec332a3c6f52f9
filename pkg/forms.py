# forms.py

"""
Witt Automorphism Toolkit - Forms File

This file defines the Flask-WTF forms that validate JSON request bodies of
the HTTP API. Each text field is checked by a custom validate_<field>
method that runs the grammar parser from utils.py and keeps the parsed
value in `form.values` for the route to use.
"""

from flask_wtf import FlaskForm
from wtforms import BooleanField, Field, IntegerField, StringField
from wtforms.validators import DataRequired, NumberRange, Optional, ValidationError

import centralext
import virasoro
from errors import ParseError
from utils import (parse_automorphism, parse_element, parse_element_list, parse_laurent,
                   parse_matrix, parse_vector, parse_vir_element, parse_window)
from witt import MINUS, PLUS

DEFAULT_WINDOW = '-5:5'


class ListField(Field):
    """A field holding every value submitted under its name (a JSON array)."""

    def process_formdata(self, valuelist):
        self.data = [str(value) for value in valuelist]


class DocumentField(Field):
    """A field holding a JSON object as submitted."""

    def process_formdata(self, valuelist):
        self.data = valuelist[0] if valuelist else None


# --- Base form ---
class ApiForm(FlaskForm):
    """Base form for JSON requests: no CSRF token and a shared dimension field n."""

    class Meta:
        csrf = False

    n = IntegerField('Dimension', default=1, validators=[Optional(), NumberRange(min=1)])

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Parsed values keyed by field name, filled in by the validators below
        self.values = {}

    @property
    def dimension(self):
        return self.n.data or 1

    def parse_into(self, field, parser, *args):
        """
        Runs a grammar parser on a field and stores the result.

        Args:
            field: The field being validated.
            parser: A utils.parse_* function taking the text first.

        Raises:
            ValidationError: If the text does not parse.
        """
        if field.data is None:
            return
        try:
            self.values[field.name] = parser(field.data, *args)
        except ParseError as exc:
            raise ValidationError(exc.message)


# --- Witt algebra forms ---
class ElementForm(ApiForm):
    """A single Witt element."""
    a = StringField('Element', validators=[DataRequired()])

    def validate_a(self, a):
        self.parse_into(a, parse_element, self.dimension)


class BracketForm(ElementForm):
    """Two Witt elements a and b."""
    b = StringField('Second element', validators=[DataRequired()])

    def validate_b(self, b):
        self.parse_into(b, parse_element, self.dimension)


class GradeForm(ElementForm):
    weight = StringField('Weight', validators=[DataRequired()])
    side = StringField('Side', default=PLUS)

    def validate_weight(self, weight):
        self.parse_into(weight, parse_vector, self.dimension, True)

    def validate_side(self, side):
        if side.data not in (PLUS, MINUS):
            raise ValidationError(f'Side must be {PLUS!r} or {MINUS!r}.')


class IteratesForm(ElementForm):
    probe = StringField('Probe', validators=[Optional()])
    m = IntegerField('Steps', default=10, validators=[Optional(), NumberRange(min=1, max=50)])

    def validate_probe(self, probe):
        if probe.data:
            self.parse_into(probe, parse_element, self.dimension)


class SolveBracketForm(ApiForm):
    b = StringField('Fixed element', validators=[DataRequired()])
    target = StringField('Target', validators=[DataRequired()])
    window = StringField('Window', default=DEFAULT_WINDOW)

    def validate_b(self, b):
        self.parse_into(b, parse_element, self.dimension)

    def validate_target(self, target):
        self.parse_into(target, parse_element, self.dimension)

    def validate_window(self, window):
        self.parse_into(window, parse_window, self.dimension)


class CentralizerForm(ApiForm):
    generators = ListField('Generators', validators=[DataRequired()])
    window = StringField('Window', default=DEFAULT_WINDOW)
    normalizer = BooleanField('Normalizer', default=False)

    def validate_generators(self, generators):
        self.parse_into(generators, parse_element_list, self.dimension)

    def validate_window(self, window):
        self.parse_into(window, parse_window, self.dimension)


# --- Automorphism forms ---
class AutomorphismForm(ApiForm):
    """A single automorphism, in matrix form or ring-map form."""
    sigma = StringField('Automorphism', validators=[DataRequired()])

    def validate_sigma(self, sigma):
        # Domain errors such as NotUnimodular propagate to the 422 handler
        self.parse_into(sigma, parse_automorphism, self.dimension)


class ComposeForm(AutomorphismForm):
    tau = StringField('Second automorphism', validators=[DataRequired()])

    def validate_tau(self, tau):
        self.parse_into(tau, parse_automorphism, self.dimension)


class ApplyForm(AutomorphismForm):
    x = StringField('Argument', validators=[DataRequired()])
    laurent = BooleanField('Laurent polynomial', default=False)

    def validate_x(self, x):
        parser = parse_laurent if self.laurent.data else parse_element
        self.parse_into(x, parser, self.dimension)


class DecomposeForm(ApiForm):
    ring_map = StringField('Ring map', validators=[DataRequired()])

    def validate_ring_map(self, ring_map):
        if '->' not in ring_map.data:
            raise ValidationError('Expected a ring map "x1 -> ..., x2 -> ...".')
        self.parse_into(ring_map, parse_automorphism, self.dimension)


class RecoverForm(ApiForm):
    cartan = ListField('Images of H_i', validators=[DataRequired()])
    partials = ListField('Images of d_i', validators=[DataRequired()])

    def validate_cartan(self, cartan):
        self.parse_into(cartan, parse_element_list, self.dimension)

    def validate_partials(self, partials):
        self.parse_into(partials, parse_element_list, self.dimension)


# --- Virasoro forms ---
class VirBracketForm(ApiForm):
    a = StringField('Element', validators=[DataRequired()])
    b = StringField('Second element', validators=[DataRequired()])

    def validate_a(self, a):
        self.parse_into(a, parse_vir_element)

    def validate_b(self, b):
        self.parse_into(b, parse_vir_element)


class CocycleForm(ApiForm):
    i = IntegerField('i')
    j = IntegerField('j')

    def validate_i(self, i):
        if i.data is None:
            raise ValidationError('This field is required.')

    def validate_j(self, j):
        if j.data is None:
            raise ValidationError('This field is required.')


class LiftVirForm(AutomorphismForm):
    window = IntegerField('Window', default=virasoro.DEFAULT_LIFT_WINDOW,
                          validators=[Optional(), NumberRange(min=3, max=40)])
    verify_window = IntegerField('Verification window', validators=[Optional(), NumberRange(min=0, max=80)])

    def validate_verify_window(self, verify_window):
        if verify_window.data is not None and self.window.data and verify_window.data < 2 * self.window.data:
            raise ValidationError(f'Must be at least twice the window ({2 * self.window.data}).')

    @property
    def dimension(self):
        return 1


# --- Finite-dimensional algebra forms ---
class AlgebraForm(ApiForm):
    """An algebra given as a document or a sample name, and a central subspace z."""
    algebra = DocumentField('Algebra document')
    sample = StringField('Sample algebra', validators=[Optional()])
    z = StringField('Central subspace', default='[]')

    def validate_sample(self, sample):
        if sample.data and sample.data not in centralext.SAMPLE_DOCUMENTS:
            raise ValidationError(f'Unknown sample; choose from {sorted(centralext.SAMPLE_DOCUMENTS)}.')

    def validate_algebra(self, algebra):
        if algebra.data is None and not self.sample.data:
            raise ValidationError('Give an algebra document or a sample name.')
        if algebra.data is not None and not isinstance(algebra.data, dict):
            raise ValidationError('The algebra must be a JSON object.')

    def validate_z(self, z):
        self.parse_into(z, parse_matrix)

    def load(self, check=True):
        """
        The submitted algebra.

        Raises:
            InvalidStructureConstants: If check is set and the structure constants are invalid.
        """
        document = self.algebra.data
        if document is None:
            document = centralext.SAMPLE_DOCUMENTS[self.sample.data]
        return centralext.FdLieAlgebra.from_document(document, check)

    def subspace(self, algebra):
        return centralext.Subspace.span(algebra.dim, self.values.get('z', ()))


class FdLiftForm(AlgebraForm):
    sigma = StringField('Automorphism of W', validators=[DataRequired()])

    def validate_sigma(self, sigma):
        self.parse_into(sigma, parse_matrix)


