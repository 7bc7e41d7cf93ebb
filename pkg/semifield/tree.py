"""Recursive-descent parser building term ASTs from tokens.

    stmt    := term ("=" | "<=") term
    term    := prod ( ("\\/" prod)* | ("/\\" prod)* )
    prod    := factor ( "*" factor )*
    factor  := atom ( "^" ["-"] integer )?
    atom    := ident | "e" | "0" | "(" term ")"
    quasi   := [ eq ("," eq)* ] "=>" eq
"""

from .constants import SIGNATURES
from .data import ParseError
from .data import Quasiequation
from .data import Statement
from .data import Unit
from .data import Var
from .data import Zero
from .data import inv
from .data import join
from .data import meet
from .data import mul
from .terms import as_word
from .terms import check_signature
from .tokenize import classify_identifier
from .tokenize import tokenize


def parse(text, sig):
    """Parse a statement, or a bare term when no relation is present.

    >>> parse('x <= e \\\\/ x^2', 'semiring')
    x <= e \\/ x * x
    >>> parse('e = e', 'monoid')
    e = e
    >>> parse('(x * y)^-2', 'group')
    (x * y)^-1 * (x * y)^-1
    >>> parse('x^-1', 'semiring')
    Traceback (most recent call last):
    ...
    semifield.data.SignatureError: symbol '^-1' is not in signature semiring
    >>> parse('x \\\\/ y /\\\\ z', 'lgroup')
    Traceback (most recent call last):
    ...
    semifield.data.ParseError: mixing \\/ and /\\ needs parentheses at position 7
    """
    if sig not in SIGNATURES:
        raise ValueError('unknown signature {!r}'.format(sig))
    parser = _Parser(text)
    result = parser.statement_or_term(sig)
    parser.expect('end')
    check_signature(result, sig)
    return result


def parse_statement(text, sig):
    result = parse(text, sig)
    if not isinstance(result, Statement):
        raise ParseError('expected a statement with = or <=', len(text))
    return result


def parse_term(text, sig):
    result = parse(text, sig)
    if isinstance(result, Statement):
        raise ParseError('expected a term, found a statement')
    return result


def parse_quasi(text, sig='group'):
    """Parse a quasiequation over monoid or group words.

    >>> parse_quasi('e = x^2 => e = x', 'monoid')
    e = x * x => e = x
    >>> parse_quasi('=> e = x')
    => e = x
    >>> parse_quasi('x = y, y = z => x = z').premises
    ((x, y), (y, z))
    """
    if text.count('=>') != 1:
        raise ParseError('a quasiequation has exactly one =>')
    head, conclusion = text.split('=>')
    premises = [part for part in head.split(',') if part.strip()] if head.strip() else []
    if head.strip() and len(premises) != len(head.split(',')):
        raise ParseError('empty premise in quasiequation')
    pairs = tuple(_word_equation(part, sig) for part in premises)
    return Quasiequation(pairs, _word_equation(conclusion, sig))


def _word_equation(text, sig):
    statement = parse_statement(text.strip(), sig)
    if statement.relation != '=':
        raise ParseError('quasiequations are built from equations')
    return as_word(statement.lhs), as_word(statement.rhs)


class _Parser:

    def __init__(self, text):
        self.tokens = list(tokenize(text))
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def expect(self, kind):
        token = self.current
        if token.kind != kind:
            wanted = 'end of input' if kind == 'end' else kind
            raise ParseError('expected {}, found {!r}'.format(wanted, token.text or 'end of input'),
                             token.position)
        return self.advance()

    def statement_or_term(self, sig):
        lhs = self.term(sig)
        if self.current.kind in ('eq', 'le'):
            relation = '=' if self.advance().kind == 'eq' else '<='
            rhs = self.term(sig)
            return Statement(relation, lhs, rhs, sig)
        return lhs

    def term(self, sig):
        first = self.product(sig)
        if self.current.kind not in ('join', 'meet'):
            return first
        kind = self.current.kind
        operands = [first]
        while self.current.kind in ('join', 'meet'):
            if self.current.kind != kind:
                raise ParseError('mixing \\/ and /\\ needs parentheses', self.current.position)
            self.advance()
            operands.append(self.product(sig))
        return join(*operands) if kind == 'join' else meet(*operands)

    def product(self, sig):
        factors = [self.factor(sig)]
        while self.current.kind == 'star':
            self.advance()
            factors.append(self.factor(sig))
        return mul(*factors)

    def factor(self, sig):
        base = self.atom(sig)
        if self.current.kind != 'caret':
            return base
        self.advance()
        negative = self.current.kind == 'minus'
        if negative:
            self.advance()
        exponent = int(self.expect('integer').text)
        if exponent == 0:
            return Unit()
        if negative:
            return mul(*[inv(base)] * exponent)
        return mul(*[base] * exponent)

    def atom(self, sig):
        token = self.current
        if token.kind == 'lparen':
            self.advance()
            inner = self.term(sig)
            self.expect('rparen')
            return inner
        category = classify_identifier(token)
        if category is None:
            raise ParseError('unexpected {!r}'.format(token.text or 'end of input'), token.position)
        self.advance()
        if category == 'unit':
            return Unit()
        if category == 'zero':
            return Zero()
        return Var(token.text)
