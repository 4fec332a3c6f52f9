# utils.py

"""
Witt Automorphism Toolkit - Utility Functions

This file contains the text grammar shared by the command line and the HTTP
API: a tokenizer, parsers for Witt and Virasoro elements, Laurent
polynomials, automorphisms, matrices, weights and windows, the canonical
printers, and the JSON document codecs.
"""

import re
from fractions import Fraction
from typing import NamedTuple

from errors import ParseError
from autgrp import Automorphism, decompose_ring_map
from kernel import IntMatrix, LaurentPolynomial, format_scalar, to_scalar, unit_index
from virasoro import VirElement
from witt import WittElement, Window

TOKEN_RE = re.compile(
    r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<arrow>->)|(?P<op>[-+*/^(),=\[\]:]))')
GENERATOR_RE = re.compile(r'^(H|d)(\d*)$')
VARIABLE_RE = re.compile(r'^x(\d*)$')


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text):
    """Splits text into int, name, arrow and operator tokens, ending with an 'end' token."""
    tokens, pos = [], 0
    while True:
        match = TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            if text[pos:].strip():
                position = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f'unexpected character {text[position]!r}', position)
            break
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


# --- Parsing ---
class _Parser:
    """Recursive-descent parser over the token list of one input string."""

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def error(self, message, token=None):
        return ParseError(message, (token or self.token).position)

    def advance(self):
        token = self.token
        if token.kind != 'end':
            self.index += 1
        return token

    def accept(self, value):
        if self.token.kind in ('op', 'arrow') and self.token.value == value:
            return self.advance()
        return None

    def expect(self, value):
        token = self.accept(value)
        if token is None:
            found = self.token.value or 'end of input'
            raise self.error(f'expected {value!r}, found {found!r}')
        return token

    def expect_end(self):
        if self.token.kind != 'end':
            raise self.error(f'unexpected {self.token.value!r}')

    def at_name(self, pattern=None):
        return self.token.kind == 'name' and (pattern is None or pattern.match(self.token.value))

    def integer(self):
        sign = -1 if self.accept('-') else 1
        if sign == 1:
            self.accept('+')
        if self.token.kind != 'int':
            raise self.error('expected an integer')
        return sign * int(self.advance().value)

    def rational(self):
        """int ["/" int], unsigned."""
        if self.token.kind != 'int':
            raise self.error('expected a number')
        numerator = int(self.advance().value)
        if self.accept('/'):
            token = self.token
            if token.kind != 'int':
                raise self.error('expected a denominator')
            denominator = int(self.advance().value)
            if denominator == 0:
                raise self.error('zero denominator', token)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def signed_rational(self):
        sign = -1 if self.accept('-') else 1
        if sign == 1:
            self.accept('+')
        return sign * self.rational()

    def exponent(self):
        """After '^': a single integer or a parenthesised integer tuple."""
        if self.accept('('):
            values = [self.integer()]
            while self.accept(','):
                values.append(self.integer())
            self.expect(')')
            return tuple(values)
        return (self.integer(),)

    def sign(self):
        if self.accept('-'):
            return -1
        self.accept('+')
        return 1

    def separator(self):
        """The sign of the next term, or None when the sum has ended."""
        if self.accept('+'):
            return 1
        if self.accept('-'):
            return -1
        return None

    # --- Witt and Virasoro elements ---
    def generator_index(self, token, n):
        kind, digits = GENERATOR_RE.match(token.value).groups()
        if not digits:
            if n != 1:
                raise self.error(f'generator {kind} needs an index when n = {n}', token)
            return kind, 0
        index = int(digits)
        if not 1 <= index <= n:
            raise self.error(f'generator index out of range: {token.value} with n = {n}', token)
        return kind, index - 1

    def witt_term(self, n, allow_central):
        """[rational] ["*"] [monomial] gen, or [rational] ["*"] "c"."""
        coeff = self.rational() if self.token.kind == 'int' else Fraction(1)
        self.accept('*')
        alpha, monomial_token = None, self.token
        if self.at_name() and self.token.value == 'x':
            self.advance()
            alpha = self.exponent() if self.accept('^') else (1,)
        token = self.token
        if allow_central and alpha is None and self.at_name() and token.value == 'c':
            self.advance()
            return 'c', coeff
        if not self.at_name(GENERATOR_RE):
            raise self.error('expected a generator H or d' + (' or c' if allow_central else ''))
        self.advance()
        kind, j = self.generator_index(token, n)
        if alpha is None:
            alpha = (0,) * n
        elif len(alpha) != n:
            raise self.error(f'monomial has {len(alpha)} exponents, expected {n}', monomial_token)
        if kind == 'd':
            alpha = tuple(a - e for a, e in zip(alpha, unit_index(n, j)))
        return (alpha, j), coeff

    def witt_sum(self, n, allow_central=False):
        mapping, central = {}, Fraction(0)
        if [t.value for t in self.tokens] == ['0', '']:
            return WittElement.zero(n), central
        sign = self.sign()
        while sign is not None:
            key, coeff = self.witt_term(n, allow_central)
            if key == 'c':
                central += sign * coeff
            else:
                alpha, j = key
                mapping.setdefault(alpha, [Fraction(0)] * n)[j] += sign * coeff
            sign = self.separator()
        self.expect_end()
        return WittElement.from_mapping(n, mapping), central

    # --- Laurent polynomials ---
    def variable_exponent(self, n):
        token = self.advance()
        digits = VARIABLE_RE.match(token.value).group(1)
        if not digits:
            if self.accept('^'):
                exponent = self.exponent()
                if len(exponent) == n:
                    return exponent
                raise self.error(f'monomial has {len(exponent)} exponents, expected {n}', token)
            if n != 1:
                raise self.error(f'variable x needs an index when n = {n}', token)
            return (1,)
        i = int(digits)
        if not 1 <= i <= n:
            raise self.error(f'variable index out of range: {token.value} with n = {n}', token)
        power = self.integer() if self.accept('^') else 1
        return tuple(power * e for e in unit_index(n, i - 1))

    def laurent_term(self, n):
        coeff = self.rational() if self.token.kind == 'int' else None
        alpha = [0] * n
        seen_variable = False
        self.accept('*')
        while self.at_name(VARIABLE_RE):
            for k, e in enumerate(self.variable_exponent(n)):
                alpha[k] += e
            seen_variable = True
            self.accept('*')
        if coeff is None and not seen_variable:
            raise self.error('expected a coefficient or a variable')
        return tuple(alpha), Fraction(1) if coeff is None else coeff

    def laurent_sum(self, n):
        mapping = {}
        sign = self.sign()
        while sign is not None:
            alpha, coeff = self.laurent_term(n)
            mapping[alpha] = mapping.get(alpha, Fraction(0)) + sign * coeff
            sign = self.separator()
        return LaurentPolynomial.from_mapping(n, mapping)

    # --- Matrices and automorphisms ---
    def row(self, entry):
        self.expect('[')
        values = []
        if not self.accept(']'):
            values.append(entry())
            while self.accept(','):
                values.append(entry())
            self.expect(']')
        return values

    def matrix(self, entry):
        self.expect('[')
        rows = []
        if not self.accept(']'):
            rows.append(self.row(entry))
            while self.accept(','):
                rows.append(self.row(entry))
            self.expect(']')
        return rows

    def tuple_of(self, entry):
        self.expect('(')
        values = [entry()]
        while self.accept(','):
            values.append(entry())
        self.expect(')')
        return values

    def keyword(self, name):
        if not (self.at_name() and self.token.value == name):
            return False
        self.advance()
        self.expect('=')
        return True

    def ring_map(self, n):
        images = {}
        while True:
            token = self.token
            if not self.at_name(VARIABLE_RE):
                raise self.error('expected a variable x or x<i>')
            alpha = self.variable_exponent(n)
            if sorted(alpha) != [0] * (n - 1) + [1]:
                raise self.error(f'{token.value} is not a generator', token)
            i = alpha.index(1)
            if i in images:
                raise self.error(f'{token.value} is mapped twice', token)
            self.expect('->')
            images[i] = self.laurent_sum(n)
            if not self.accept(','):
                break
        self.expect_end()
        if len(images) != n:
            raise self.error(f'{len(images)} images given for n = {n}')
        return decompose_ring_map([images[i] for i in range(n)])

    def automorphism(self, n):
        if any(t.kind == 'arrow' for t in self.tokens):
            return self.ring_map(n)
        rows, scalars = None, None
        while self.token.kind != 'end':
            token = self.token
            if self.keyword('A'):
                rows = self.matrix(self.integer)
            elif self.keyword('lambda'):
                scalars = self.tuple_of(self.signed_rational)
            else:
                raise self.error('expected A=[[...]] or lambda=(...)', token)
        if rows is None:
            rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        if scalars is None:
            scalars = [1] * len(rows)
        if len(rows) != n or any(len(row) != n for row in rows) or len(scalars) != n:
            raise ParseError(f'automorphism is not {n}-dimensional', 0)
        return Automorphism(IntMatrix(tuple(tuple(row) for row in rows)), tuple(scalars))


def parse_element(text, n):
    """Parses a Witt element such as "3/2 x^(1,-2) H1 - x^(0,1) H2" or "d1"."""
    return _Parser(text).witt_sum(n)[0]


def parse_vir_element(text):
    """Parses a Virasoro element such as "x^2 H - 1/2 c"."""
    w, central = _Parser(text).witt_sum(1, allow_central=True)
    return VirElement(w, central)


def parse_laurent(text, n):
    """Parses a Laurent polynomial such as "3 x1^2 x2^-1 - 1/2" or "x^(1,2)"."""
    parser = _Parser(text)
    result = parser.laurent_sum(n)
    parser.expect_end()
    return result


def parse_automorphism(text, n):
    """
    Parses "A=[[0,1],[1,0]] lambda=(5,7)" or the ring-map form "x1 -> 5 x2, x2 -> 7 x1".

    Raises:
        ParseError: On a syntax error.
        WittError: When the parsed data is not an automorphism (e.g. NotUnimodular).
    """
    return _Parser(text).automorphism(n)


def parse_matrix(text):
    """A rational matrix "[[1, 0], [1/2, 1]]"; "[]" is the empty matrix."""
    parser = _Parser(text)
    rows = parser.matrix(parser.signed_rational)
    parser.expect_end()
    return tuple(tuple(row) for row in rows)


def parse_vector(text, n, integral=False):
    """A vector "(1, 2)", "1,2" or "3" of length n, rational unless integral is set."""
    parser = _Parser(text)
    entry = parser.integer if integral else parser.signed_rational
    if parser.token.value == '(':
        values = parser.tuple_of(entry)
    else:
        values = [entry()]
        while parser.accept(','):
            values.append(entry())
    parser.expect_end()
    if len(values) != n:
        raise ParseError(f'vector has {len(values)} entries, expected {n}', 0)
    return tuple(values)


def parse_window(text, n):
    """"-10:10" for a cube, or "lo:hi,lo:hi,..." per coordinate."""
    parser = _Parser(text)
    bounds = []
    while True:
        token = parser.token
        lo = parser.integer()
        parser.expect(':')
        hi = parser.integer()
        if lo > hi:
            raise parser.error(f'empty range {lo}:{hi}', token)
        bounds.append((lo, hi))
        if not parser.accept(','):
            break
    parser.expect_end()
    if len(bounds) == 1:
        bounds *= n
    if len(bounds) != n:
        raise ParseError(f'window has {len(bounds)} ranges, expected {n}', 0)
    return Window(tuple(lo for lo, _ in bounds), tuple(hi for _, hi in bounds))


def parse_element_list(texts, n):
    return [parse_element(text, n) for text in texts]


# --- Printing ---
def format_monomial(alpha, variable='x'):
    if not any(alpha):
        return ''
    if len(alpha) == 1:
        return f'{variable}^{alpha[0]}'
    return f'{variable}^(' + ','.join(str(a) for a in alpha) + ')'


def generator_name(kind, j, n):
    return kind if n == 1 else f'{kind}{j + 1}'


def _join(parts):
    """Joins (coefficient, body) pairs into 'a + b - c' with unit coefficients omitted."""
    pieces = []
    for coeff, body in parts:
        magnitude = abs(coeff)
        text = body if magnitude == 1 and body else ' '.join(
            p for p in (format_scalar(magnitude), body) if p)
        if not pieces:
            pieces.append(('-' if coeff < 0 else '') + text)
        else:
            pieces.append(('- ' if coeff < 0 else '+ ') + text)
    return ' '.join(pieces) if pieces else '0'


def format_element(w, kind='H'):
    """Canonical text of an element: terms by exponent, then generator index."""
    parts = []
    for alpha, j, coeff in w.basis_terms():
        body = ' '.join(p for p in (format_monomial(alpha), generator_name(kind, j, w.dim)) if p)
        parts.append((coeff, body))
    return _join(parts)


def format_vir_element(v):
    parts = [(coeff, ' '.join(p for p in (format_monomial(alpha), generator_name('H', j, 1)) if p))
             for alpha, j, coeff in v.w.basis_terms()]
    if v.central:
        parts.append((v.central, 'c'))
    return _join(parts)


def format_laurent(f):
    return _join([(coeff, format_monomial(alpha)) for alpha, coeff in f.terms])


def format_vector(values):
    return '(' + ', '.join(format_scalar(v) for v in values) + ')'


def format_matrix(rows):
    return '[' + ', '.join('[' + ', '.join(format_scalar(v) for v in row) + ']' for row in rows) + ']'


def format_automorphism(sigma):
    return f'A={format_matrix(sigma.matrix.rows)} lambda={format_vector(sigma.scalars)}'


# --- JSON documents ---
def element_to_json(w):
    return {'terms': [{'exp': list(alpha), 'gen': f'H{j + 1}', 'coeff': format_scalar(coeff)}
                      for alpha, j, coeff in w.basis_terms()]}


def vir_element_to_json(v):
    document = element_to_json(v.w)
    document['central'] = format_scalar(v.central)
    return document


def element_from_json(document, n):
    """Reads an element back from its {"terms": [...]} document."""
    mapping = {}
    try:
        for term in document.get('terms', []):
            alpha = tuple(int(a) for a in term['exp'])
            kind, digits = GENERATOR_RE.match(term['gen']).groups()
            j = int(digits or 1) - 1
            if len(alpha) != n or not 0 <= j < n:
                raise ParseError(f'term {term} does not fit n = {n}', 0)
            if kind == 'd':
                alpha = tuple(a - e for a, e in zip(alpha, unit_index(n, j)))
            mapping.setdefault(alpha, [Fraction(0)] * n)[j] += to_scalar(str(term['coeff']))
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f'malformed element document: {exc}', 0) from exc
    return WittElement.from_mapping(n, mapping)


def vir_element_from_json(document):
    return VirElement(element_from_json(document, 1), to_scalar(str(document.get('central', '0'))))


def laurent_to_json(f):
    return {'terms': [{'exp': list(alpha), 'coeff': format_scalar(coeff)} for alpha, coeff in f.terms]}


def automorphism_to_json(sigma):
    return {'A': [list(row) for row in sigma.matrix.rows],
            'lambda': [format_scalar(s) for s in sigma.scalars]}


def matrix_to_json(rows):
    return [[format_scalar(v) for v in row] for row in rows]


def subspace_to_json(subspace):
    return {'dim': subspace.dim, 'basis': matrix_to_json(subspace.basis)}
