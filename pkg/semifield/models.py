"""Finite and concrete models: monoids, flat extensions, the monotone-map
algebras O_k, brute-force satisfaction and the quasiequation oracles over
Z and Z_n."""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from sympy import Matrix, primerange

from .constants import Budget
from .data import BudgetExceeded
from .data import Inv
from .data import Join
from .data import Meet
from .data import MonoidWord
from .data import Mul
from .data import Quasiequation
from .data import SignatureError
from .data import SimpleInequation
from .data import Statement
from .data import Unit
from .data import Var
from .data import Zero
from .terms import word_vector


logger = logging.getLogger(__name__)

TOP = 'top'


############
# Monoids. #
############


class FiniteMonoid:
    """A monoid on elements 0..m-1 given by its multiplication table.

    >>> z3 = FiniteMonoid.cyclic(3)
    >>> z3
    <FiniteMonoid z3: e, a, a^2>
    >>> z3.names[z3.mul[2][2]]
    'a'
    """

    def __init__(self, name, names, table, unit=0):
        self.name = name
        self.names = tuple(names)
        self.mul = tuple(tuple(row) for row in table)
        self.unit = unit
        size = len(self.names)
        assert len(self.mul) == size and all(len(row) == size for row in self.mul), \
            'table must be square over the elements'
        for a in range(size):
            if self.mul[unit][a] != a or self.mul[a][unit] != a:
                raise ValueError('{} is not a unit of {}'.format(self.names[unit], name))
        for a, b, c in itertools.product(range(size), repeat=3):
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise ValueError('{} is not associative'.format(name))

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return '<FiniteMonoid {}: {}>'.format(self.name, ', '.join(self.names))

    @staticmethod
    def cyclic(n):
        assert n >= 1, 'cyclic groups have at least one element'
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return FiniteMonoid('z{}'.format(n), [_power_name(i) for i in range(n)], table)

    @staticmethod
    def trivial():
        return FiniteMonoid('trivial', ['e'], [[0]])

    @staticmethod
    def from_table(name, names, table, unit=0):
        return FiniteMonoid(name, names, table, unit)

    @staticmethod
    def product(first, second):
        pairs = list(itertools.product(range(len(first)), range(len(second))))
        index = {pair: position for position, pair in enumerate(pairs)}
        table = [[index[first.mul[a][c], second.mul[b][d]] for c, d in pairs] for a, b in pairs]
        names = ['({},{})'.format(first.names[a], second.names[b]) for a, b in pairs]
        return FiniteMonoid('{}x{}'.format(first.name, second.name), names, table,
                            index[first.unit, second.unit])

    def inverse(self, a):
        for b in range(len(self)):
            if self.mul[a][b] == self.unit and self.mul[b][a] == self.unit:
                return b
        return None

    def is_group(self):
        return all(self.inverse(a) is not None for a in range(len(self)))


def _power_name(i):
    return 'e' if i == 0 else 'a' if i == 1 else 'a^{}'.format(i)


def is_cancellative(monoid):
    """ca = cb or ac = bc forces a = b.

    >>> is_cancellative(FiniteMonoid.cyclic(4))
    True
    >>> is_cancellative(monoid_catalog()['semilattice2'])
    False
    """
    size = range(len(monoid))
    mul = monoid.mul
    for a, b, c in itertools.product(size, repeat=3):
        if a != b and (mul[c][a] == mul[c][b] or mul[a][c] == mul[b][c]):
            return False
    return True


def monoid_catalog():
    """The fixed catalog of small monoids used by the property suites."""
    catalog = {'trivial': FiniteMonoid.trivial()}
    for n in range(2, 9):
        catalog['z{}'.format(n)] = FiniteMonoid.cyclic(n)
    catalog['z2xz3'] = FiniteMonoid.product(FiniteMonoid.cyclic(2), FiniteMonoid.cyclic(3))
    catalog['semilattice2'] = FiniteMonoid('semilattice2', ['e', 'a'], [[0, 1], [1, 1]])
    catalog['nilpotent3'] = FiniteMonoid('nilpotent3', ['e', 'a', '0'],
                                         [[0, 1, 2], [1, 2, 2], [2, 2, 2]])
    return catalog


#############
# Algebras. #
#############


@dataclass(frozen=True)
class FiniteAlgebra:
    """Operation tables over elements 0..m-1, indexed as table[a][b].

    `meet`, `zero` and `top` are None when the algebra lacks them.
    """
    name: str
    names: Tuple[str, ...]
    mul: Tuple[Tuple[int, ...], ...]
    join: Tuple[Tuple[int, ...], ...]
    unit: int
    meet: Optional[Tuple[Tuple[int, ...], ...]] = None
    zero: Optional[int] = None
    top: Optional[int] = None

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return '<FiniteAlgebra {}: {}>'.format(self.name, ', '.join(self.names))

    def element(self, name):
        return self.names.index(name)

    def leq(self, a, b):
        return self.join[a][b] == b

    def to_dict(self):
        def render(table):
            return [[self.names[value] for value in row] for row in table]
        record = {
            'name': self.name,
            'elements': list(self.names),
            'unit': self.names[self.unit],
            'tables': {'mul': render(self.mul), 'join': render(self.join)},
        }
        if self.meet is not None:
            record['tables']['meet'] = render(self.meet)
        for key in ('zero', 'top'):
            if getattr(self, key) is not None:
                record[key] = self.names[getattr(self, key)]
        return record


def _tables(size, operation):
    return tuple(tuple(operation(a, b) for b in range(size)) for a in range(size))


def flat_extension(monoid, name=None):
    """M plus an absorbing top; distinct elements join to the top.

    >>> flat = flat_extension(FiniteMonoid.cyclic(2))
    >>> flat
    <FiniteAlgebra flat-zn:2: e, a, top>
    >>> flat.names[flat.join[0][1]], flat.names[flat.mul[1][1]]
    ('top', 'e')
    >>> len(flat_extension(FiniteMonoid.trivial()))
    2
    """
    size = len(monoid)
    top = size

    def mul(a, b):
        return top if top in (a, b) else monoid.mul[a][b]

    def join(a, b):
        return a if a == b else top

    if name is None:
        name = 'flat-zn:{}'.format(monoid.name[1:]) if monoid.name[1:].isdigit() else \
            'flat:{}'.format(monoid.name)
    return FiniteAlgebra(name, monoid.names + (TOP,), _tables(size + 1, mul),
                         _tables(size + 1, join), monoid.unit, top=top)


def endo_monoid_algebra(k):
    """O_k: order-preserving self-maps of a k-chain.

    Maps compose left to right, (f * g)(i) = g(f(i)); join and meet are
    pointwise.

    >>> [len(endo_monoid_algebra(k)) for k in (2, 3, 4)]
    [3, 10, 35]
    >>> endo_monoid_algebra(2).names
    ('00', '01', '11')
    """
    assert 2 <= k <= 4, 'O_k is built for chains of 2 to 4 points'
    maps = [f for f in itertools.product(range(k), repeat=k)
            if all(f[i] <= f[i + 1] for i in range(k - 1))]
    index = {f: position for position, f in enumerate(maps)}
    size = len(maps)

    def compose(a, b):
        return index[tuple(maps[b][maps[a][i]] for i in range(k))]

    def pointwise(choose):
        return lambda a, b: index[tuple(choose(x, y) for x, y in zip(maps[a], maps[b]))]

    return FiniteAlgebra('endo:{}'.format(k), tuple(''.join(map(str, f)) for f in maps),
                         _tables(size, compose), _tables(size, pointwise(max)),
                         index[tuple(range(k))], meet=_tables(size, pointwise(min)))


def boolean_zero_semifield():
    """The two-element idempotent 0-semifield {0 < e}.

    >>> boolean_zero_semifield().to_dict()['tables']['mul']
    [['0', '0'], ['0', 'e']]
    """
    return FiniteAlgebra('bool0', ('0', 'e'), _tables(2, min), _tables(2, max), 1,
                         meet=_tables(2, min), zero=0)


def algebra_from_spec(spec):
    """Build an algebra from `flat-zn:<n>`, `flat:<catalog name>`,
    `endo:<k>` or `bool0`.

    >>> algebra_from_spec('flat-zn:5')
    <FiniteAlgebra flat-zn:5: e, a, a^2, a^3, a^4, top>
    """
    kind, _, argument = spec.partition(':')
    try:
        if kind == 'flat-zn':
            return flat_extension(FiniteMonoid.cyclic(int(argument)), spec)
        if kind == 'flat':
            return flat_extension(monoid_catalog()[argument], spec)
        if kind == 'endo':
            return endo_monoid_algebra(int(argument))
        if spec == 'bool0':
            return boolean_zero_semifield()
    except (KeyError, ValueError, AssertionError):
        pass
    raise ValueError('unknown algebra {!r}'.format(spec))


#########
# Laws. #
#########


def laws_failing(algebra, kind='idempotent_semiring'):
    """Names of the laws of `kind` the tables violate.

    >>> laws_failing(flat_extension(FiniteMonoid.cyclic(3)))
    []
    >>> laws_failing(flat_extension(monoid_catalog()['semilattice2']))
    ['left distributivity', 'right distributivity']
    >>> laws_failing(endo_monoid_algebra(3), 'distributive_lmonoid')
    []
    """
    size = range(len(algebra))
    mul, join, meet = algebra.mul, algebra.join, algebra.meet
    checks = [
        ('associativity', lambda a, b, c: mul[mul[a][b]][c] == mul[a][mul[b][c]]),
        ('unit', lambda a, b, c: mul[algebra.unit][a] == a == mul[a][algebra.unit]),
    ]
    checks += _semilattice_laws('join', join)
    checks += [
        ('left distributivity', lambda a, b, c: mul[a][join[b][c]] == join[mul[a][b]][mul[a][c]]),
        ('right distributivity', lambda a, b, c: mul[join[a][b]][c] == join[mul[a][c]][mul[b][c]]),
    ]
    if kind == 'distributive_lmonoid':
        if meet is None:
            return ['meet']
        checks += _semilattice_laws('meet', meet)
        checks += [
            ('absorption', lambda a, b, c: join[a][meet[a][b]] == a == meet[a][join[a][b]]),
            ('lattice distributivity',
             lambda a, b, c: meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]),
            ('left meet distributivity',
             lambda a, b, c: mul[a][meet[b][c]] == meet[mul[a][b]][mul[a][c]]),
            ('right meet distributivity',
             lambda a, b, c: mul[meet[a][b]][c] == meet[mul[a][c]][mul[b][c]]),
        ]
    elif kind == 'zero_semiring':
        zero = algebra.zero
        if zero is None:
            return ['zero']
        checks += [
            ('zero join identity', lambda a, b, c: join[zero][a] == a),
            ('zero absorption', lambda a, b, c: mul[zero][a] == zero == mul[a][zero]),
        ]
    elif kind != 'idempotent_semiring':
        raise ValueError('unknown law suite {!r}'.format(kind))
    failing = []
    for name, law in checks:
        if not all(law(a, b, c) for a, b, c in itertools.product(size, repeat=3)):
            failing.append(name)
    return failing


def _semilattice_laws(label, table):
    return [
        ('{} associativity'.format(label), lambda a, b, c: table[table[a][b]][c] == table[a][table[b][c]]),
        ('{} commutativity'.format(label), lambda a, b, c: table[a][b] == table[b][a]),
        ('{} idempotence'.format(label), lambda a, b, c: table[a][a] == a),
    ]


#################
# Satisfaction. #
#################


def compile_term(algebra, term, names):
    """A function from a tuple of element indexes (ordered as `names`) to
    the value of `term`."""
    position = {name: index for index, name in enumerate(names)}

    def build(node):
        if isinstance(node, Var):
            index = position[node.name]
            return lambda values: values[index]
        if isinstance(node, Unit):
            return lambda values: algebra.unit
        if isinstance(node, Zero):
            if algebra.zero is None:
                raise SignatureError('0', algebra.name)
            return lambda values: algebra.zero
        if isinstance(node, Inv):
            raise SignatureError('^-1', algebra.name)
        table = {Mul: algebra.mul, Join: algebra.join, Meet: algebra.meet}[type(node)]
        if table is None:
            raise SignatureError('/\\', algebra.name)
        parts = [build(arg) for arg in node.args]

        def evaluate(values):
            result = parts[0](values)
            for part in parts[1:]:
                result = table[result][part(values)]
            return result
        return evaluate

    return build(term)


def _compile_statement(algebra, statement, names):
    if isinstance(statement, (SimpleInequation,)):
        statement = statement.to_statement()
    if isinstance(statement, Statement):
        lhs = compile_term(algebra, statement.lhs, names)
        rhs = compile_term(algebra, statement.rhs, names)
        if statement.relation == '=':
            return lambda values: lhs(values) == rhs(values)
        join = algebra.join
        return lambda values: join[lhs(values)][rhs(values)] == rhs(values)
    assert isinstance(statement, Quasiequation), 'expected a statement or quasiequation'
    pairs = [(compile_term(algebra, left.to_term(), names), compile_term(algebra, right.to_term(), names))
             for left, right in statement.premises + (statement.conclusion,)]
    premises, (left, right) = pairs[:-1], pairs[-1]
    return lambda values: (not all(a(values) == b(values) for a, b in premises)
                           or left(values) == right(values))


def _check_budget(size, count, budget):
    if size ** count > budget.max_evaluations:
        logger.warning('refusing %d^%d assignments', size, count)
        raise BudgetExceeded('evaluations', budget.max_evaluations)


def holds_finite(algebra, statement, budget=None):
    """Brute-force satisfaction; returns (holds, least violating assignment).

    >>> from semifield.tree import parse
    >>> flat = algebra_from_spec('flat-zn:2')
    >>> holds_finite(flat, parse('x <= e \\\\/ x^2', 'semiring'))
    (False, {'x': 'a'})
    >>> holds_finite(algebra_from_spec('flat-zn:3'), parse('x <= e \\\\/ x^2', 'semiring'))
    (True, None)
    >>> holds_finite(flat, parse('e = e', 'monoid'))
    (True, None)
    """
    budget = budget or Budget()
    names = sorted(statement.variables())
    _check_budget(len(algebra), len(names), budget)
    check = _compile_statement(algebra, statement, names)
    for values in itertools.product(range(len(algebra)), repeat=len(names)):
        if not check(values):
            return False, {name: algebra.names[value] for name, value in zip(names, values)}
    return True, None


def holds_at(algebra, statement, assignment):
    """Truth of `statement` under one assignment of element names."""
    names = sorted(statement.variables())
    values = tuple(algebra.element(assignment[name]) for name in names)
    return _compile_statement(algebra, statement, names)(values)


def holds_quasi(monoid, quasi, budget=None):
    """Brute-force truth of a quasiequation in a finite monoid.

    Group words need every element to be invertible.

    >>> from semifield.tree import parse_quasi
    >>> holds_quasi(FiniteMonoid.cyclic(2), parse_quasi('e = x^2 => e = x', 'monoid'))
    (False, {'x': 'a'})
    """
    budget = budget or Budget()
    names = sorted(quasi.variables())
    _check_budget(len(monoid), len(names), budget)
    position = {name: index for index, name in enumerate(names)}
    inverses = None
    if any(exponent < 0 for word in _quasi_words(quasi) if not isinstance(word, MonoidWord)
           for _, exponent in word.letters):
        if not monoid.is_group():
            raise SignatureError('^-1', monoid.name)
        inverses = [monoid.inverse(a) for a in range(len(monoid))]

    def value(word, values):
        result = monoid.unit
        for letter in word.letters:
            name, exponent = letter if isinstance(letter, tuple) else (letter, 1)
            element = values[position[name]]
            result = monoid.mul[result][element if exponent > 0 else inverses[element]]
        return result

    for values in itertools.product(range(len(monoid)), repeat=len(names)):
        if all(value(a, values) == value(b, values) for a, b in quasi.premises):
            left, right = quasi.conclusion
            if value(left, values) != value(right, values):
                return False, {name: monoid.names[v] for name, v in zip(names, values)}
    return True, None


def _quasi_words(quasi):
    for left, right in quasi.premises + (quasi.conclusion,):
        yield left
        yield right


def _equation_vectors(quasi, names):
    def difference(pair):
        left, right = pair
        return [a - b for a, b in zip(word_vector(left, names), word_vector(right, names))]
    return [difference(pair) for pair in quasi.premises], difference(quasi.conclusion)


def holds_quasi_Zn(quasi, n, budget=None):
    """Truth of a quasiequation in the cyclic group Z_n.

    >>> from semifield.tree import parse_quasi
    >>> q = parse_quasi('e = x^2 => e = x', 'monoid')
    >>> holds_quasi_Zn(q, 2), holds_quasi_Zn(q, 3)
    (False, True)
    >>> holds_quasi_Zn(parse_quasi('=> e = e'), 7)
    True
    """
    assert n >= 1, 'Z_n needs n >= 1'
    budget = budget or Budget()
    names = sorted(quasi.variables())
    _check_budget(n, len(names), budget)
    premises, conclusion = _equation_vectors(quasi, names)
    for values in itertools.product(range(n), repeat=len(names)):
        if all(sum(c * v for c, v in zip(row, values)) % n == 0 for row in premises):
            if sum(c * v for c, v in zip(conclusion, values)) % n:
                return False
    return True


def holds_quasi_Z(quasi):
    """Truth in <Z, +, 0>: the conclusion lies in the rational span of the
    premises.

    >>> from semifield.tree import parse_quasi
    >>> holds_quasi_Z(parse_quasi('e = x^2 => e = x', 'monoid'))
    True
    >>> holds_quasi_Z(parse_quasi('=> e = x', 'monoid'))
    False
    >>> holds_quasi_Z(parse_quasi('x = y => x^2 = y^2', 'monoid'))
    True
    """
    names = sorted(quasi.variables())
    premises, conclusion = _equation_vectors(quasi, names)
    if not any(conclusion):
        return True
    if not premises:
        return False
    span = Matrix(premises)
    return span.rank() == Matrix(premises + [conclusion]).rank()


def empirical_threshold(quasi, limit):
    """Largest prime p <= limit with Z_p and Z disagreeing on `quasi`, or 0.

    >>> from semifield.tree import parse_quasi
    >>> empirical_threshold(parse_quasi('e = x^6 => e = x', 'monoid'), 50)
    3
    """
    expected = holds_quasi_Z(quasi)
    threshold = 0
    for p in primerange(2, limit + 1):
        if holds_quasi_Zn(quasi, int(p)) != expected:
            threshold = int(p)
    return threshold


#############################
# Non-finite-basis witness. #
#############################


@dataclass(frozen=True)
class FlatWitness:
    """x <= e \\/ x^n with the flat extension of Z_n refuting it.

    `degenerate` marks n = 1, where the inequation holds everywhere.
    """
    n: int
    inequation: SimpleInequation
    algebra: FiniteAlgebra
    assignment: Optional[Dict[str, str]]
    degenerate: bool = False

    def to_dict(self):
        return {
            'n': self.n,
            'inequation': str(self.inequation),
            'algebra': self.algebra.name,
            'assignment': self.assignment,
            'degenerate': self.degenerate,
        }


def nfb_witness(n):
    """x <= e \\/ x^n with a refuting assignment in flat(Z_n).

    >>> nfb_witness(2).assignment
    {'x': 'a'}
    >>> nfb_witness(1).degenerate
    True
    """
    assert n >= 1, 'the witness family starts at n = 1'
    inequation = SimpleInequation(MonoidWord(('x',)), (MonoidWord(()), MonoidWord(('x',) * n)))
    algebra = flat_extension(FiniteMonoid.cyclic(n))
    if n == 1:
        return FlatWitness(n, inequation, algebra, None, degenerate=True)
    return FlatWitness(n, inequation, algebra, {'x': 'a'})
