"""Values shared by every module: term ASTs, words, statement shapes,
certificates, verdicts and the exception hierarchy.

All values are immutable after construction.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union


class SemifieldError(Exception):
    """Base class for every error raised by the package."""


class ParseError(SemifieldError):

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = '{} at position {}'.format(message, position)
        super().__init__(message)


class SignatureError(SemifieldError):

    def __init__(self, symbol, signature):
        self.symbol = symbol
        self.signature = signature
        super().__init__('symbol {!r} is not in signature {}'.format(symbol, signature))


class BudgetExceeded(SemifieldError):

    def __init__(self, resource, limit):
        self.resource = resource
        self.limit = limit
        super().__init__('{} budget of {} exceeded'.format(resource, limit))


class TranslationError(SemifieldError):
    """A statement does not have the shape a translation consumes."""


##########
# Terms. #
##########


class Term:
    """Base class of the term AST. Subclasses are frozen dataclasses."""

    def variables(self):
        """Variables in first-occurrence order.

        >>> mul(Var('y'), join(Var('x'), Var('y'))).variables()
        ('y', 'x')
        """
        seen = {}
        for node in self.walk():
            if isinstance(node, Var):
                seen.setdefault(node.name, None)
        return tuple(seen)

    def symbols(self):
        """Operation and constant symbols occurring in the term.

        >>> sorted(inv(mul(Var('x'), Unit())).symbols())
        ['e', 'inv', 'mul']
        """
        return frozenset(node.symbol for node in self.walk() if node.symbol)

    def walk(self):
        yield self
        for child in self.children():
            yield from child.walk()

    def children(self):
        return ()

    def __repr__(self):
        return str(self)


@dataclass(frozen=True, repr=False)
class Var(Term):
    name: str
    symbol = None

    def __str__(self):
        return self.name


@dataclass(frozen=True, repr=False)
class Unit(Term):
    symbol = 'e'

    def __str__(self):
        return 'e'


@dataclass(frozen=True, repr=False)
class Zero(Term):
    symbol = 'zero'

    def __str__(self):
        return '0'


@dataclass(frozen=True, repr=False)
class Inv(Term):
    arg: Term
    symbol = 'inv'

    def children(self):
        return (self.arg,)

    def __str__(self):
        if isinstance(self.arg, (Var, Unit, Zero)):
            return '{}^-1'.format(self.arg)
        return '({})^-1'.format(self.arg)


@dataclass(frozen=True, repr=False)
class _Nary(Term):
    args: Tuple[Term, ...]

    def __post_init__(self):
        assert len(self.args) >= 2, 'n-ary nodes need at least two children'
        assert not any(type(arg) is type(self) for arg in self.args), \
            'n-ary nodes are stored flattened'

    def children(self):
        return self.args

    def __str__(self):
        return self.separator.join(self._render(arg) for arg in self.args)

    def _render(self, arg):
        if isinstance(arg, _Nary) and not isinstance(arg, Mul):
            return '({})'.format(arg)
        return str(arg)


@dataclass(frozen=True, repr=False)
class Mul(_Nary):
    symbol = 'mul'
    separator = ' * '


@dataclass(frozen=True, repr=False)
class Join(_Nary):
    symbol = 'join'
    separator = ' \\/ '


@dataclass(frozen=True, repr=False)
class Meet(_Nary):
    symbol = 'meet'
    separator = ' /\\ '


def _flatten(cls, args):
    flat = []
    for arg in args:
        assert isinstance(arg, Term), 'expected a term, got {!r}'.format(arg)
        if isinstance(arg, cls):
            flat.extend(arg.args)
        else:
            flat.append(arg)
    return flat


def _dedupe(args):
    return list(dict.fromkeys(args))


def mul(*args):
    """Flattened product; the empty product is e.

    >>> mul(Var('x'), mul(Var('y'), Var('z')))
    x * y * z
    >>> mul()
    e
    >>> mul(Var('x'))
    x
    """
    flat = _flatten(Mul, args)
    if not flat:
        return Unit()
    if len(flat) == 1:
        return flat[0]
    return Mul(tuple(flat))


def join(*args):
    """Flattened, deduplicated join.

    >>> join(Var('x'), join(Var('y'), Var('x')))
    x \\/ y
    >>> join(Var('x'), Var('x'))
    x
    """
    flat = _dedupe(_flatten(Join, args))
    assert flat, 'empty join'
    if len(flat) == 1:
        return flat[0]
    return Join(tuple(flat))


def meet(*args):
    """Flattened, deduplicated meet.

    >>> meet(Var('x'), join(Var('y'), Var('z')))
    x /\\ (y \\/ z)
    """
    flat = _dedupe(_flatten(Meet, args))
    assert flat, 'empty meet'
    if len(flat) == 1:
        return flat[0]
    return Meet(tuple(flat))


def inv(arg):
    return Inv(arg)


##########
# Words. #
##########


def reduce_letters(letters):
    """Cancel adjacent inverse pairs until none remain (single stack pass).

    >>> reduce_letters([('x', 1), ('x', -1), ('y', 1)])
    (('y', 1),)
    """
    stack = []
    for name, exponent in letters:
        if stack and stack[-1] == (name, -exponent):
            stack.pop()
        else:
            stack.append((name, exponent))
    return tuple(stack)


def _render_word(factors):
    return ' * '.join(factors) if factors else 'e'


@dataclass(frozen=True, repr=False)
class MonoidWord:
    """Element of the free monoid; the empty word is e.

    >>> MonoidWord(('x', 'y')) * MonoidWord(('x',))
    x * y * x
    >>> MonoidWord(())
    e
    """
    letters: Tuple[str, ...] = ()

    def __mul__(self, other):
        return MonoidWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def variables(self):
        return tuple(dict.fromkeys(self.letters))

    def to_group(self):
        return GroupWord(tuple((name, 1) for name in self.letters))

    def to_term(self):
        return mul(*[Var(name) for name in self.letters])

    def __str__(self):
        return _render_word(self.letters)

    def __repr__(self):
        return str(self)


@dataclass(frozen=True, repr=False)
class GroupWord:
    """Freely reduced element of the free group.

    >>> w = GroupWord((('x', 1), ('y', -1)))
    >>> w
    x * y^-1
    >>> w.inverse()
    y * x^-1
    >>> w * w.inverse()
    e
    """
    letters: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        for name, exponent in self.letters:
            assert exponent in (1, -1), 'letters carry exponent +1 or -1'
        if reduce_letters(self.letters) != self.letters:
            raise ValueError('group word {} is not freely reduced'.format(
                _render_word(_letter_strings(self.letters))))

    def __mul__(self, other):
        return GroupWord(reduce_letters(self.letters + other.letters))

    def __len__(self):
        return len(self.letters)

    def inverse(self):
        return GroupWord(tuple((name, -exponent) for name, exponent in reversed(self.letters)))

    def variables(self):
        return tuple(dict.fromkeys(name for name, _ in self.letters))

    def inverse_count(self):
        return sum(1 for _, exponent in self.letters if exponent < 0)

    def is_inverse_free(self):
        return self.inverse_count() == 0

    def to_monoid(self):
        assert self.is_inverse_free(), 'word contains inverses'
        return MonoidWord(tuple(name for name, _ in self.letters))

    def to_term(self):
        return mul(*[Var(name) if exponent > 0 else Inv(Var(name))
                     for name, exponent in self.letters])

    def __str__(self):
        return _render_word(_letter_strings(self.letters))

    def __repr__(self):
        return str(self)


def _letter_strings(letters):
    return [name if exponent > 0 else '{}^-1'.format(name) for name, exponent in letters]


Word = Union[MonoidWord, GroupWord]


###############
# Statements. #
###############


@dataclass(frozen=True, repr=False)
class Statement:
    """An equation s = t or an inequation s <= t over one signature.

    >>> st = Statement('<=', Var('x'), Var('y'), 'semiring')
    >>> st
    x <= y
    >>> st.as_equation()
    x \\/ y = y
    """
    relation: str
    lhs: Term
    rhs: Term
    signature: str

    def __post_init__(self):
        assert self.relation in ('=', '<='), 'relation is = or <='

    @property
    def is_inequation(self):
        return self.relation == '<='

    def as_equation(self):
        if not self.is_inequation:
            return self
        return Statement('=', join(self.lhs, self.rhs), self.rhs, self.signature)

    def variables(self):
        return tuple(dict.fromkeys(self.lhs.variables() + self.rhs.variables()))

    def symbols(self):
        return self.lhs.symbols() | self.rhs.symbols()

    def __str__(self):
        return '{} {} {}'.format(self.lhs, self.relation, self.rhs)

    def __repr__(self):
        return str(self)


def _join_words(words):
    return join(*[word.to_term() for word in words])


@dataclass(frozen=True, repr=False)
class SimpleInequation:
    """s <= t1 \\/ ... \\/ tn with every side a monoid word.

    >>> SimpleInequation(MonoidWord(('x',)), (MonoidWord(()), MonoidWord(('x', 'x'))))
    x <= e \\/ x * x
    """
    lhs: MonoidWord
    rhs: Tuple[MonoidWord, ...]

    def __post_init__(self):
        assert self.rhs, 'an inequation needs at least one joinand'
        object.__setattr__(self, 'rhs', tuple(dict.fromkeys(self.rhs)))

    def variables(self):
        names = list(self.lhs.letters)
        for word in self.rhs:
            names.extend(word.letters)
        return tuple(dict.fromkeys(names))

    def to_basic(self):
        return BasicInequation(self.lhs, tuple(word.to_group() for word in self.rhs))

    def to_statement(self, signature='semiring'):
        return Statement('<=', self.lhs.to_term(), _join_words(self.rhs), signature)

    def __str__(self):
        return str(self.to_statement())

    def __repr__(self):
        return str(self)


@dataclass(frozen=True, repr=False)
class BasicInequation:
    """s <= t1 \\/ ... \\/ tn with s a monoid word and the ti group words.

    >>> BasicInequation(MonoidWord(()), (GroupWord((('x', -1),)),))
    e <= x^-1
    """
    lhs: MonoidWord
    rhs: Tuple[GroupWord, ...]

    def __post_init__(self):
        assert self.rhs, 'an inequation needs at least one joinand'
        object.__setattr__(self, 'rhs', tuple(dict.fromkeys(self.rhs)))

    def variables(self):
        names = list(self.lhs.letters)
        for word in self.rhs:
            names.extend(name for name, _ in word.letters)
        return tuple(dict.fromkeys(names))

    def inverse_count(self):
        return sum(word.inverse_count() for word in self.rhs)

    def is_simple(self):
        return self.inverse_count() == 0

    def to_simple(self):
        assert self.is_simple(), 'inequation still contains inverses'
        return SimpleInequation(self.lhs, tuple(word.to_monoid() for word in self.rhs))

    def to_statement(self, signature='lgroup'):
        return Statement('<=', self.lhs.to_term(), _join_words(self.rhs), signature)

    def __str__(self):
        return str(self.to_statement())

    def __repr__(self):
        return str(self)


@dataclass(frozen=True, repr=False)
class Quasiequation:
    """premises => conclusion, each equation a pair of words.

    >>> x, e = MonoidWord(('x',)), MonoidWord(())
    >>> Quasiequation(((e, x * x),), (e, x))
    e = x * x => e = x
    >>> Quasiequation((), (x, x))
    => x = x
    """
    premises: Tuple[Tuple[Word, Word], ...]
    conclusion: Tuple[Word, Word]

    def variables(self):
        names = []
        for left, right in self.premises + (self.conclusion,):
            names.extend(left.variables() + right.variables())
        return tuple(dict.fromkeys(names))

    def __str__(self):
        premises = ', '.join('{} = {}'.format(*pair) for pair in self.premises)
        conclusion = '{} = {}'.format(*self.conclusion)
        if premises:
            return '{} => {}'.format(premises, conclusion)
        return '=> {}'.format(conclusion)

    def __repr__(self):
        return str(self)


#################
# Certificates. #
#################


@dataclass(frozen=True)
class Diagram:
    """Finite countermodel for an l-group inequation e <= w1 \\/ ... \\/ wn.

    Points are the integers 0..points-1 in increasing order, `maps` sends a
    variable to its partial injection as sorted (argument, value) pairs and
    `traces[i]` is the path of points followed by the i-th joinand from
    `base`.
    """
    points: int
    base: int
    maps: Dict[str, Tuple[Tuple[int, int], ...]] = field(default_factory=dict)
    traces: Tuple[Tuple[int, ...], ...] = ()

    def to_dict(self):
        return {
            'points': list(range(self.points)),
            'base': self.base,
            'maps': {name: [list(pair) for pair in pairs] for name, pairs in sorted(self.maps.items())},
            'traces': [list(trace) for trace in self.traces],
        }

    @staticmethod
    def from_dict(data):
        return Diagram(
            points=len(data['points']),
            base=data['base'],
            maps={name: tuple(tuple(pair) for pair in pairs) for name, pairs in data['maps'].items()},
            traces=tuple(tuple(trace) for trace in data['traces']))


@dataclass(frozen=True)
class IntegerWitness:
    """Integer assignment refuting an inequation in <Z, max, +, 0>."""
    assignment: Dict[str, int]

    def to_dict(self):
        return {'assignment': dict(sorted(self.assignment.items()))}


@dataclass(frozen=True)
class AlgebraWitness:
    """Assignment into a named finite algebra refuting a statement."""
    algebra: str
    assignment: Dict[str, str]

    def to_dict(self):
        return {'algebra': self.algebra, 'assignment': dict(sorted(self.assignment.items()))}


Certificate = Union[Diagram, IntegerWitness, AlgebraWitness]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    `refuted` is the statement the certificate refutes directly; it may be a
    translation of the statement that was asked about.
    """
    status: str
    certificate: Optional[Certificate] = None
    refuted: Optional[Union[BasicInequation, Statement]] = None
    stats: Dict[str, Union[float, str]] = field(default_factory=dict)

    def __post_init__(self):
        assert self.status in ('valid', 'invalid'), 'status is valid or invalid'

    @property
    def valid(self):
        return self.status == 'valid'

    def to_dict(self, timings=False):
        stats = {key: value for key, value in self.stats.items() if timings or key != 'elapsed'}
        record = {'status': self.status, 'stats': stats}
        if self.certificate is not None:
            record['certificate'] = dict(self.certificate.to_dict(),
                                         kind=type(self.certificate).__name__)
            record['refutes'] = str(self.refuted)
        return record
