import re
from collections import namedtuple

from .data import ParseError


Token = namedtuple('Token', ('kind', 'text', 'position'))

# Longest operators first so '<=' wins over '<' and '=>' over '='.
TOKEN_PATTERN = re.compile(r'''
    (?P<space>\s+)
  | (?P<join>\\/)
  | (?P<meet>/\\)
  | (?P<implies>=>)
  | (?P<le><=)
  | (?P<lt><)
  | (?P<eq>=)
  | (?P<lparen>\()
  | (?P<rparen>\))
  | (?P<star>\*)
  | (?P<caret>\^)
  | (?P<minus>-)
  | (?P<comma>,)
  | (?P<fresh>_f[0-9]+)
  | (?P<ident>[a-z][a-z0-9_]*)
  | (?P<integer>[0-9]+)
''', re.VERBOSE)


def tokenize(characters):
    """Split a statement into tokens, dropping whitespace and ending with an
    'end' token.

    >>> [tok.text for tok in tokenize('x <= e \\\\/ x^2')]
    ['x', '<=', 'e', '\\\\/', 'x', '^', '2', '']
    >>> [tok.kind for tok in tokenize('(x /\\\\ _f1)^-1')]
    ['lparen', 'ident', 'meet', 'fresh', 'rparen', 'caret', 'minus', 'integer', 'end']
    >>> list(tokenize('x + y'))
    Traceback (most recent call last):
    ...
    semifield.data.ParseError: unexpected character '+' at position 2
    """
    position = 0
    while position < len(characters):
        match = TOKEN_PATTERN.match(characters, position)
        if match is None:
            raise ParseError('unexpected character {!r}'.format(characters[position]), position)
        kind = match.lastgroup
        if kind != 'space':
            yield Token(kind, match.group(), position)
        position = match.end()
    yield Token('end', '', len(characters))


def classify_identifier(token):
    """Constants share the identifier pattern; tell them apart.

    >>> classify_identifier(Token('ident', 'e', 0))
    'unit'
    >>> classify_identifier(Token('integer', '0', 0))
    'zero'
    >>> classify_identifier(Token('ident', 'x2', 0))
    'variable'
    """
    if token.kind == 'ident' and token.text == 'e':
        return 'unit'
    if token.kind == 'integer' and token.text == '0':
        return 'zero'
    if token.kind in ('ident', 'fresh'):
        return 'variable'
    return None
