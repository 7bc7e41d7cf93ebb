"""Operations on terms and words: free reduction, size, substitution,
signature gates and conversions between terms and words."""

import re

from .constants import FRESH_PREFIX
from .constants import JOIN
from .constants import SIGNATURES
from .constants import SYMBOL_NAMES
from .data import BasicInequation
from .data import GroupWord
from .data import Inv
from .data import Join
from .data import Meet
from .data import MonoidWord
from .data import Mul
from .data import SignatureError
from .data import SimpleInequation
from .data import Statement
from .data import Term
from .data import TranslationError
from .data import Unit
from .data import Var
from .data import inv
from .data import join
from .data import meet
from .data import mul
from .data import reduce_letters


def free_reduce(letters):
    """Freely reduce a sequence of (variable, +1/-1) letters.

    >>> free_reduce([('x', 1), ('x', -1), ('y', 1)])
    y
    >>> free_reduce([])
    e
    >>> free_reduce([('x', 1), ('y', 1), ('y', -1), ('x', -1)])
    e
    """
    if isinstance(letters, GroupWord):
        return letters
    return GroupWord(reduce_letters(tuple(letters)))


def term_size(obj):
    """Count variable, constant and operation-symbol occurrences.

    An n-ary product, join or meet contributes n - 1 symbols; a statement is
    the sum of its sides.

    >>> from semifield.tree import parse
    >>> term_size(parse('e', 'monoid'))
    1
    >>> term_size(parse('x \\\\/ x * y', 'semiring'))
    5
    >>> term_size(parse('x^-1', 'group'))
    2
    """
    if isinstance(obj, (SimpleInequation, BasicInequation)):
        obj = obj.to_statement()
    if isinstance(obj, (MonoidWord, GroupWord)):
        obj = obj.to_term()
    if isinstance(obj, Statement):
        return term_size(obj.lhs) + term_size(obj.rhs)
    assert isinstance(obj, Term), 'term_size expects a term, word or statement'
    children = obj.children()
    if not children:
        return 1
    own = 1 if isinstance(obj, Inv) else len(children) - 1
    return own + sum(term_size(child) for child in children)


def substitute(term, mapping, sig=None):
    """Replace variables homomorphically; the raw result is not simplified.

    >>> from semifield.tree import parse
    >>> t = parse('x * y', 'semiring')
    >>> substitute(t, {'x': Unit()})
    e * y
    >>> substitute(parse('x \\\\/ y', 'semiring'), {'y': Var('x')})
    x
    """
    if isinstance(term, Statement):
        return Statement(term.relation, substitute(term.lhs, mapping, sig),
                         substitute(term.rhs, mapping, sig), term.signature)
    if sig is not None:
        for image in mapping.values():
            check_signature(image, sig)
    return _substitute(term, mapping)


def _substitute(term, mapping):
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if isinstance(term, Inv):
        return inv(_substitute(term.arg, mapping))
    if isinstance(term, Mul):
        return mul(*[_substitute(arg, mapping) for arg in term.args])
    if isinstance(term, Join):
        return join(*[_substitute(arg, mapping) for arg in term.args])
    if isinstance(term, Meet):
        return meet(*[_substitute(arg, mapping) for arg in term.args])
    return term


def check_signature(obj, sig):
    """Raise SignatureError naming the first symbol outside `sig`."""
    allowed = SIGNATURES[sig]
    nodes = [obj.lhs, obj.rhs] if isinstance(obj, Statement) else [obj]
    for node in nodes:
        for sub in node.walk():
            if sub.symbol is not None and sub.symbol not in allowed:
                raise SignatureError(SYMBOL_NAMES[sub.symbol], sig)
    return obj


def smallest_signature(obj):
    """The first signature (in SIGNATURES order) containing every symbol.

    >>> from semifield.tree import parse
    >>> smallest_signature(parse('x * y <= y', 'lgroup'))
    'semiring_efree'
    """
    used = obj.symbols()
    if isinstance(obj, Statement) and obj.is_inequation:
        used |= {JOIN}
    for name, symbols in SIGNATURES.items():
        if used <= symbols:
            return name
    raise SignatureError(sorted(used)[0], 'any')


##########
# Words. #
##########


def as_monoid_word(term):
    """Read a term built from variables, e and products as a monoid word.

    >>> from semifield.tree import parse
    >>> as_monoid_word(parse('x * e * y^2', 'monoid'))
    x * y * y
    """
    if isinstance(term, Var):
        return MonoidWord((term.name,))
    if isinstance(term, Unit):
        return MonoidWord(())
    if isinstance(term, Mul):
        letters = ()
        for arg in term.args:
            letters += as_monoid_word(arg).letters
        return MonoidWord(letters)
    raise TranslationError('{} is not a monoid word'.format(term))


def as_group_word(term):
    """Read a group term as a freely reduced word.

    >>> from semifield.tree import parse
    >>> as_group_word(parse('(x * y^-1)^-1 * x', 'group'))
    y
    """
    return free_reduce(_group_letters(term))


def _group_letters(term):
    if isinstance(term, Var):
        return ((term.name, 1),)
    if isinstance(term, Unit):
        return ()
    if isinstance(term, Inv):
        return tuple((name, -exponent) for name, exponent in reversed(_group_letters(term.arg)))
    if isinstance(term, Mul):
        letters = ()
        for arg in term.args:
            letters += _group_letters(arg)
        return letters
    raise TranslationError('{} is not a group word'.format(term))


def as_word(term):
    """Monoid word when the term is inverse-free, group word otherwise."""
    try:
        return as_monoid_word(term)
    except TranslationError:
        return as_group_word(term)


def is_word_term(term):
    return all(isinstance(node, (Var, Unit, Inv, Mul)) for node in term.walk())


def joinands(term):
    return term.args if isinstance(term, Join) else (term,)


def simple_from_statement(statement):
    """Read `s <= t1 \\/ ... \\/ tn` with monoid-word sides.

    >>> from semifield.tree import parse
    >>> simple_from_statement(parse('x <= e \\\\/ x^2', 'semiring'))
    x <= e \\/ x * x
    """
    if statement.relation != '<=':
        raise TranslationError('expected an inequation, got {}'.format(statement))
    return SimpleInequation(as_monoid_word(statement.lhs),
                            tuple(as_monoid_word(arg) for arg in joinands(statement.rhs)))


def basic_from_statement(statement):
    """Read `s <= t1 \\/ ... \\/ tn` with s inverse-free and group-word ti.

    >>> from semifield.tree import parse
    >>> basic_from_statement(parse('e <= x * y^-1', 'lgroup'))
    e <= x * y^-1
    """
    if statement.relation != '<=':
        raise TranslationError('expected an inequation, got {}'.format(statement))
    return BasicInequation(as_monoid_word(statement.lhs),
                           tuple(as_group_word(arg) for arg in joinands(statement.rhs)))


def word_vector(word, names):
    """Exponent sums of a word over `names` (its abelianisation).

    >>> word_vector(GroupWord((('x', 1), ('y', -1), ('x', 1))), ('x', 'y', 'z'))
    [2, -1, 0]
    """
    index = {name: position for position, name in enumerate(names)}
    vector = [0] * len(names)
    letters = word.letters
    for letter in letters:
        name, exponent = letter if isinstance(letter, tuple) else (letter, 1)
        vector[index[name]] += exponent
    return vector


####################
# Fresh variables. #
####################


_FRESH = re.compile(re.escape(FRESH_PREFIX) + r'([0-9]+)$')


class FreshNames:
    """Deterministic supply of fresh variables avoiding a set of names.

    >>> names = FreshNames(['x', '_f1'])
    >>> names.take(), names.take()
    ('_f2', '_f3')
    """

    def __init__(self, used):
        numbers = [int(match.group(1)) for match in map(_FRESH.match, used) if match]
        self.counter = max(numbers, default=0)

    def take(self):
        self.counter += 1
        return '{}{}'.format(FRESH_PREFIX, self.counter)
