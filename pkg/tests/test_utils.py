# tests/test_utils.py

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from autgrp import Automorphism
from errors import NotAUnit, NotUnimodular, ParseError
from kernel import IntMatrix, LaurentPolynomial
from utils import (automorphism_to_json, element_from_json, element_to_json, format_automorphism,
                   format_element, format_laurent, format_matrix, format_vir_element, parse_automorphism,
                   parse_element, parse_laurent, parse_matrix, parse_vector, parse_vir_element,
                   parse_window, tokenize, vir_element_from_json, vir_element_to_json)
from virasoro import VirElement
from witt import Window, WittElement
from strategies import dims, witt_elements


def h(n, alpha, j=0, coeff=1):
    return WittElement.term(n, alpha, j, coeff)


class TestTokenizer:

    def test_token_kinds(self):
        kinds = [t.kind for t in tokenize('3/2 x^(1,-2) H1 -> c')]
        assert kinds == ['int', 'op', 'int', 'name', 'op', 'op', 'int', 'op', 'op', 'int', 'op',
                         'name', 'arrow', 'name', 'end']

    def test_unexpected_character_position(self):
        with pytest.raises(ParseError) as info:
            tokenize('x^2 H $')
        assert info.value.position == 6


class TestElementGrammar:

    @pytest.mark.parametrize('text, n, expected', [
        ('x^-2 H', 1, h(1, (-2,))),
        ('3 x^-1 H', 1, h(1, (-1,), 0, 3)),
        ('H', 1, h(1, (0,))),
        ('-1/2 x H', 1, h(1, (1,), 0, Fraction(-1, 2))),
        ('d', 1, h(1, (-1,))),
        ('x^2 d', 1, h(1, (1,))),
        ('x^(2,1) H2', 2, h(2, (2, 1), 1)),
        ('H1 + 3 H2', 2, WittElement.cartan(2, (1, 3))),
        ('x^(0,1) d1', 2, h(2, (-1, 1), 0)),
        ('0', 1, WittElement.zero(1)),
        ('x^2', 1, None),
    ])
    def test_parse_element(self, text, n, expected):
        if expected is None:
            with pytest.raises(ParseError):
                parse_element(text, n)
        else:
            assert parse_element(text, n) == expected

    def test_terms_are_collected(self):
        assert parse_element('x H + x H - 2 x H', 1).is_zero()

    @pytest.mark.parametrize('text, n, message', [
        ('x^(1) H3', 2, 'generator index out of range'),
        ('x^(1,2,3) H1', 2, 'monomial has 3 exponents'),
        ('H', 2, 'needs an index'),
        ('x^2', 1, 'expected a generator'),
        ('1/0 H', 1, 'zero denominator'),
        ('H H', 1, 'unexpected'),
    ])
    def test_parse_errors(self, text, n, message):
        with pytest.raises(ParseError) as info:
            parse_element(text, n)
        assert message in info.value.message

    def test_parse_vir_element(self):
        assert parse_vir_element('x^2 H - 1/2 c') == VirElement.basis(2) + VirElement.central_element(Fraction(-1, 2))
        assert parse_vir_element('c') == VirElement.central_element()

    def test_central_element_only_in_the_virasoro_grammar(self):
        with pytest.raises(ParseError):
            parse_element('c', 1)

    @given(data=st.data())
    def test_printed_elements_parse_back(self, data):
        n = data.draw(dims)
        a = data.draw(witt_elements(n))
        assert parse_element(format_element(a), n) == a


class TestPrinting:

    def test_format_element(self):
        assert format_element(h(1, (-1,), 0, 3)) == '3 x^-1 H'
        assert format_element(h(1, (0,), 0, -4) + VirElement.basis(3).w) == '-4 H + x^3 H'
        assert format_element(h(2, (2, 1), 1, Fraction(1, 2))) == '1/2 x^(2,1) H2'
        assert format_element(WittElement.zero(2)) == '0'

    def test_format_vir_element(self):
        v = VirElement.basis(0, -4) + VirElement.central_element(Fraction(1, 2))
        assert format_vir_element(v) == '-4 H + 1/2 c'

    def test_format_laurent(self):
        f = LaurentPolynomial.from_mapping(1, {(-3,): 8, (0,): -1})
        assert format_laurent(f) == '8 x^-3 - 1'

    def test_format_automorphism(self):
        sigma = Automorphism(IntMatrix(((0, 1), (1, 0))), (Fraction(1, 7), 5))
        assert format_automorphism(sigma) == 'A=[[0, 1], [1, 0]] lambda=(1/7, 5)'

    def test_format_matrix(self):
        assert format_matrix(((1, Fraction(1, 2)), (0, -1))) == '[[1, 1/2], [0, -1]]'


class TestOtherGrammars:

    def test_parse_laurent(self):
        f = parse_laurent('3 x1^2 x2^-1 - 1/2', 2)
        assert f == LaurentPolynomial.from_mapping(2, {(2, -1): 3, (0, 0): Fraction(-1, 2)})
        assert parse_laurent('x^(1,2)', 2) == LaurentPolynomial.monomial(2, (1, 2))
        assert parse_laurent('x + 1', 1) == LaurentPolynomial.from_mapping(1, {(1,): 1, (0,): 1})

    def test_parse_matrix_form_automorphism(self):
        sigma = parse_automorphism('A=[[-1]] lambda=(2)', 1)
        assert sigma == Automorphism(IntMatrix(((-1,),)), (2,))
        assert parse_automorphism('lambda=(3/2)', 1) == Automorphism.torus((Fraction(3, 2),))

    def test_parse_ring_map(self):
        sigma = parse_automorphism('x1 -> 5 x2, x2 -> 7 x1', 2)
        assert sigma == Automorphism(IntMatrix(((0, 1), (1, 0))), (5, 7))
        assert parse_automorphism('x -> 2 x^-1', 1) == Automorphism(IntMatrix(((-1,),)), (2,))

    def test_ring_map_domain_errors(self):
        with pytest.raises(NotAUnit):
            parse_automorphism('x -> x + 1', 1)
        with pytest.raises(NotUnimodular):
            parse_automorphism('x -> x^2', 1)

    @pytest.mark.parametrize('text', ['x1 -> x2', 'x1 -> x2, x1 -> x1', 'A=[[1,0]]', 'B=[[1]]'])
    def test_bad_automorphisms(self, text):
        with pytest.raises(ParseError):
            parse_automorphism(text, 2)

    def test_parse_matrix(self):
        assert parse_matrix('[[1, 0], [1/2, -1]]') == ((1, 0), (Fraction(1, 2), -1))
        assert parse_matrix('[]') == ()

    def test_parse_vector(self):
        assert parse_vector('(1, -2)', 2, integral=True) == (1, -2)
        assert parse_vector('1/2', 1) == (Fraction(1, 2),)
        with pytest.raises(ParseError):
            parse_vector('(1, 2)', 3)
        with pytest.raises(ParseError):
            parse_vector('1/2', 1, integral=True)

    def test_parse_window(self):
        assert parse_window('-10:10', 2) == Window((-10, -10), (10, 10))
        assert parse_window('0:1,-2:2', 2) == Window((0, -2), (1, 2))
        with pytest.raises(ParseError):
            parse_window('3:1', 1)
        with pytest.raises(ParseError):
            parse_window('0:1,0:1', 3)


class TestDocuments:

    def test_element_document(self):
        document = element_to_json(h(2, (2, 1), 1, Fraction(1, 2)))
        assert document == {'terms': [{'exp': [2, 1], 'gen': 'H2', 'coeff': '1/2'}]}

    def test_partials_in_documents(self):
        document = {'terms': [{'exp': [0], 'gen': 'd', 'coeff': 3}]}
        assert element_from_json(document, 1) == h(1, (-1,), 0, 3)

    @pytest.mark.parametrize('document', [
        {'terms': [{'exp': [0, 0], 'gen': 'H1', 'coeff': '1'}]},
        {'terms': [{'exp': [0], 'gen': 'H', 'coeff': 'x'}]},
        {'terms': [{'gen': 'H', 'coeff': '1'}]},
    ])
    def test_malformed_element_documents(self, document):
        with pytest.raises(ParseError):
            element_from_json(document, 1)

    @given(data=st.data())
    def test_element_documents_read_back(self, data):
        n = data.draw(dims)
        a = data.draw(witt_elements(n))
        assert element_from_json(element_to_json(a), n) == a

    def test_vir_document(self):
        v = VirElement.basis(-1, 2) + VirElement.central_element(Fraction(1, 3))
        assert vir_element_from_json(vir_element_to_json(v)) == v

    def test_automorphism_document(self):
        sigma = Automorphism(IntMatrix(((0, 1), (1, 0))), (5, Fraction(1, 2)))
        assert automorphism_to_json(sigma) == {'A': [[0, 1], [1, 0]], 'lambda': ['5', '1/2']}
