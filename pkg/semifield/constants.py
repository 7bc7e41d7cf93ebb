"""Fixed tables: signatures, reserved names and default resource budgets."""

from dataclasses import dataclass


# Operation symbols. 'e' and 'zero' are constants, 'inv' is unary, the rest
# are flattened n-ary operations.
MUL = 'mul'
JOIN = 'join'
MEET = 'meet'
INV = 'inv'
UNIT = 'e'
ZERO = 'zero'

SIGNATURES = {
    'monoid': frozenset((MUL, UNIT)),
    'group': frozenset((MUL, UNIT, INV)),
    'semiring_efree': frozenset((MUL, JOIN)),
    'semiring': frozenset((MUL, UNIT, JOIN)),
    'semiring0': frozenset((MUL, UNIT, JOIN, ZERO)),
    'dlmonoid': frozenset((MUL, UNIT, JOIN, MEET)),
    'lgroup': frozenset((MUL, UNIT, JOIN, MEET, INV)),
}

# Printable names used in error messages.
SYMBOL_NAMES = {
    MUL: '*',
    JOIN: '\\/',
    MEET: '/\\',
    INV: '^-1',
    UNIT: 'e',
    ZERO: '0',
}

# Classes accepted by decide_statement and the signature their statements
# are parsed in.
CLASS_SIGNATURES = {
    'lgroup': 'lgroup',
    'dlmonoid': 'dlmonoid',
    'semifield': 'semiring',
    'semifield_efree': 'semiring_efree',
    'semifield0': 'semiring0',
    'commutative': 'semiring',
}

# Fresh variables are drawn as _f1, _f2, ... which the user grammar can't
# produce on its own ([a-z][a-z0-9_]*).
FRESH_PREFIX = '_f'

# Default variable names for generated corpora.
VARIABLE_NAMES = ('x', 'y', 'z', 'u', 'v', 'w')

DEFAULT_MAX_POINTS = 24
DEFAULT_MAX_NODES = 10 ** 6
DEFAULT_MAX_EVALUATIONS = 10 ** 7
DEFAULT_MAX_TERMS = 4096


@dataclass(frozen=True)
class Budget:
    """Resource limits shared by the search, the normaliser and brute force.

    >>> Budget().max_points
    24
    >>> Budget(max_nodes=10).max_nodes
    10
    """
    max_points: int = DEFAULT_MAX_POINTS
    max_nodes: int = DEFAULT_MAX_NODES
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS
    max_terms: int = DEFAULT_MAX_TERMS
