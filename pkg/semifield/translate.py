"""Syntactic translations between statement shapes and signatures.

Every function here is pure; fresh variables come from `FreshNames` seeded
with the variables of the input, so equal inputs give equal outputs.
"""

import itertools
import logging

from .constants import Budget
from .data import BasicInequation
from .data import BudgetExceeded
from .data import GroupWord
from .data import Inv
from .data import Join
from .data import Meet
from .data import MonoidWord
from .data import Mul
from .data import Quasiequation
from .data import SignatureError
from .data import SimpleInequation
from .data import Statement
from .data import TranslationError
from .data import Unit
from .data import Var
from .data import Zero
from .data import inv
from .data import join
from .data import meet
from .data import mul
from .terms import FreshNames
from .terms import as_group_word
from .terms import as_monoid_word
from .terms import is_word_term
from .terms import joinands


logger = logging.getLogger(__name__)


##############################################
# Semiring statements to simple inequations. #
##############################################


def to_simple(statement, budget=None):
    """Split a semiring statement into simple inequations.

    An idempotent semiring satisfies the statement iff it satisfies every
    returned inequation.

    >>> from semifield.tree import parse
    >>> to_simple(parse('x \\\\/ e = e', 'semiring'))
    (x <= e, e <= e, e <= x \\/ e)
    >>> to_simple(parse('e <= x * (y \\\\/ z)', 'semiring'))
    (e <= x * y \\/ x * z,)
    >>> to_simple(parse('x <= x', 'semiring'))
    (x <= x,)
    """
    budget = budget or Budget()
    if statement.relation == '=':
        directions = [(statement.lhs, statement.rhs), (statement.rhs, statement.lhs)]
    else:
        directions = [(statement.lhs, statement.rhs)]
    result = []
    for lhs, rhs in directions:
        right = tuple(sum_of_products(rhs, budget))
        for word in sum_of_products(lhs, budget):
            result.append(SimpleInequation(word, right))
    return tuple(dict.fromkeys(result))


def sum_of_products(term, budget=None):
    """Distribute products over joins, giving a deduplicated list of words.

    >>> from semifield.tree import parse
    >>> sum_of_products(parse('(x \\\\/ e) * (y \\\\/ x)', 'semiring'))
    [x * y, x * x, y, x]
    """
    budget = budget or Budget()
    if isinstance(term, Var):
        return [MonoidWord((term.name,))]
    if isinstance(term, Unit):
        return [MonoidWord(())]
    if isinstance(term, Join):
        words = []
        for arg in term.args:
            words.extend(sum_of_products(arg, budget))
        return list(dict.fromkeys(words))
    if isinstance(term, Mul):
        words = [MonoidWord(())]
        for arg in term.args:
            factor = sum_of_products(arg, budget)
            if len(words) * len(factor) > budget.max_terms:
                raise BudgetExceeded('terms', budget.max_terms)
            words = list(dict.fromkeys(left * right for left in words for right in factor))
        return words
    raise SignatureError(str(term), 'semiring')


######################
# Regularity checks. #
######################


def is_left_regular(inequation):
    """Every variable of the left side occurs on the right.

    >>> from semifield.tree import parse
    >>> from semifield.terms import simple_from_statement as simple
    >>> is_left_regular(simple(parse('x <= e \\\\/ x^2', 'semiring')))
    True
    >>> is_left_regular(simple(parse('x * y <= y', 'semiring')))
    False
    >>> is_left_regular(simple(parse('e <= x', 'semiring')))
    True
    """
    right = set()
    for word in inequation.rhs:
        right.update(word.variables())
    return set(inequation.lhs.variables()) <= right


def is_right_regular(inequation):
    right = set()
    for word in inequation.rhs:
        right.update(word.variables())
    return right <= set(inequation.lhs.variables())


def right_regularize(inequation):
    """Drop every joinand using a variable absent from the left side.

    Returns None when nothing is left.

    >>> from semifield.tree import parse
    >>> from semifield.terms import simple_from_statement as simple
    >>> right_regularize(simple(parse('x <= x \\\\/ y', 'semiring')))
    x <= x
    >>> right_regularize(simple(parse('x <= y', 'semiring'))) is None
    True
    >>> right_regularize(simple(parse('x <= e \\\\/ x^2', 'semiring')))
    x <= e \\/ x * x
    """
    allowed = set(inequation.lhs.variables())
    kept = tuple(word for word in inequation.rhs if set(word.variables()) <= allowed)
    if not kept:
        return None
    return SimpleInequation(inequation.lhs, kept)


def to_quasiequation(inequation):
    """{t1 = t2, ..., t1 = tn} => t1 = s.

    >>> from semifield.tree import parse
    >>> from semifield.terms import simple_from_statement as simple
    >>> to_quasiequation(simple(parse('x <= e \\\\/ x^2', 'semiring')))
    e = x * x => e = x
    >>> to_quasiequation(simple(parse('x <= y', 'semiring')))
    => y = x
    >>> to_quasiequation(simple(parse('e <= x \\\\/ y', 'semiring')))
    x = y => x = e
    """
    first = inequation.rhs[0]
    premises = tuple((first, other) for other in inequation.rhs[1:])
    return Quasiequation(premises, (first, inequation.lhs))


########################
# Inverse elimination. #
########################


def star_sequence(inequation, literal_joinand=False):
    """Yield the basic inequation after each inverse-elimination step.

    The first item is the input; each later item has one inverse fewer.
    With `literal_joinand` the new joinand is x*y*u*x*s instead of
    x*y*u*y*s.
    """
    if isinstance(inequation, SimpleInequation):
        inequation = inequation.to_basic()
    fresh = FreshNames(inequation.variables())
    current = inequation
    yield current
    while not current.is_simple():
        index = next(i for i, word in enumerate(current.rhs) if not word.is_inverse_free())
        word = current.rhs[index]
        cut = next(k for k, (_, exponent) in enumerate(word.letters) if exponent < 0)
        prefix = word.letters[:cut]
        name = word.letters[cut][0]
        suffix = GroupWord(word.letters[cut + 1:])
        y = fresh.take()
        head = ((name, 1), (y, 1))
        lhs = current.lhs.to_group()
        again = name if literal_joinand else y
        rhs = []
        for position, other in enumerate(current.rhs):
            if position != index:
                rhs.append(GroupWord(head) * other)
                continue
            rhs.append(GroupWord(head + prefix + ((again, 1),)) * lhs)
            rhs.append(suffix)
        current = BasicInequation(MonoidWord((name, y)) * current.lhs, tuple(rhs))
        yield current


def star_translate(inequation, literal_joinand=False):
    """Eliminate inverses from a basic inequation.

    >>> from semifield.tree import parse
    >>> from semifield.terms import basic_from_statement as basic
    >>> star_translate(basic(parse('x <= y \\\\/ z', 'lgroup')))
    x <= y \\/ z
    >>> star_translate(basic(parse('e <= x^-1', 'lgroup')))
    x * _f1 <= x * _f1 * _f1 \\/ e
    >>> star_translate(basic(parse('e <= x * y^-1', 'lgroup')))
    y * _f1 <= y * _f1 * x * _f1 \\/ e
    """
    for current in star_sequence(inequation, literal_joinand):
        pass
    return current.to_simple()


############################################
# l-group statements to basic inequations. #
############################################


def ell_to_basic(statement, budget=None, literal_last_block=False):
    """Reduce an l-group statement to basic inequations valid in all
    l-groups exactly when the statement is.

    >>> from semifield.tree import parse
    >>> ell_to_basic(parse('e <= x /\\\\ y', 'lgroup'))
    (e <= x * _f1 \\/ y * _f1^-1,)
    >>> ell_to_basic(parse('x <= y', 'lgroup'))
    (x <= y,)
    """
    budget = budget or Budget()
    fresh = FreshNames(statement.variables())
    if statement.relation == '=':
        directions = [(statement.lhs, statement.rhs), (statement.rhs, statement.lhs)]
    else:
        directions = [(statement.lhs, statement.rhs)]
    result = []
    for lhs, rhs in directions:
        result.append(_reduce_direction(lhs, rhs, fresh, budget, literal_last_block))
    return tuple(dict.fromkeys(result))


def _reduce_direction(lhs, rhs, fresh, budget, literal_last_block):
    if _is_monoid_term(lhs) and all(is_word_term(arg) for arg in joinands(rhs)):
        return BasicInequation(as_monoid_word(lhs),
                               tuple(as_group_word(arg) for arg in joinands(rhs)))
    shape = meet_of_joins(lhs), join_of_meets(rhs)
    if None not in shape:
        logger.debug('reducing %s <= %s by splitting', lhs, rhs)
        blocks = _shaped_blocks(shape[0], shape[1], fresh)
    else:
        logger.debug('reducing %s <= %s through lattice normal form', lhs, rhs)
        disjuncts = lattice_normal_form(mul(rhs, inv(lhs)), budget)
        blocks = [[[word] for word in conjunct] for conjunct in disjuncts]
    words = split_meets(blocks, fresh, literal_last_block)
    return BasicInequation(MonoidWord(()), tuple(words))


def _is_monoid_term(term):
    return is_word_term(term) and not any(isinstance(node, Inv) for node in term.walk())


def _shaped_blocks(left, right, fresh):
    """Blocks of e <= right * left^-1, product-splitting when `left` is a
    proper meet or join."""
    if len(left) == 1 and len(left[0]) == 1:
        correction = left[0][0].inverse()
        return [[[word * correction for word in member] for member in block] for block in right]
    y = GroupWord(((fresh.take(), 1),))
    blocks = [[[word * y for word in member] for member in block] for block in right]
    for member in left:
        blocks.append([[y.inverse() * word.inverse()] for word in member])
    return blocks


def split_meets(blocks, fresh, literal_last_block=False):
    """Meet-splitting: a block m1 /\\ ... /\\ mk becomes joinands
    mi * y1^-1 ... y(i-1)^-1 * yi, the last member without the trailing yk.

    Each block is a list of members; a member is a list of words joined.
    """
    words = []
    for block in blocks:
        if len(block) == 1:
            words.extend(block[0])
            continue
        count = len(block) if literal_last_block else len(block) - 1
        names = [fresh.take() for _ in range(count)]
        for position, member in enumerate(block):
            letters = tuple((name, -1) for name in names[:position])
            if position < count:
                letters += ((names[position], 1),)
            tail = GroupWord(letters)
            words.extend(word * tail for word in member)
    return list(dict.fromkeys(words))


def meet_of_joins(term):
    """Read a term as a meet of joins of group words, or None."""
    members = term.args if isinstance(term, Meet) else (term,)
    joins = []
    for member in members:
        words = join_of_words(member)
        if words is None:
            return None
        joins.append(words)
    return joins


def join_of_meets(term):
    """Read a term as a join of meets of joins of group words, or None."""
    blocks = []
    for disjunct in joinands(term):
        if is_word_term(disjunct):
            blocks.append([[as_group_word(disjunct)]])
            continue
        if not isinstance(disjunct, Meet):
            return None
        block = meet_of_joins(disjunct)
        if block is None:
            return None
        blocks.append(block)
    return blocks


def join_of_words(term):
    args = joinands(term)
    if not all(is_word_term(arg) for arg in args):
        return None
    return [as_group_word(arg) for arg in args]


def lattice_normal_form(term, budget=None):
    """Join of meets of group words equal to `term` in every l-group.

    Returns a list of disjuncts, each a tuple of words met together.

    >>> from semifield.tree import parse
    >>> lattice_normal_form(parse('(x \\\\/ y)^-1 * z', 'lgroup'))
    [(x^-1 * z, y^-1 * z)]
    """
    budget = budget or Budget()
    if isinstance(term, Var):
        return [(GroupWord(((term.name, 1),)),)]
    if isinstance(term, Unit):
        return [(GroupWord(),)]
    if isinstance(term, Join):
        disjuncts = []
        for arg in term.args:
            disjuncts.extend(lattice_normal_form(arg, budget))
        return _checked(disjuncts, budget)
    if isinstance(term, Meet):
        parts = [lattice_normal_form(arg, budget) for arg in term.args]
        _guard(parts, budget)
        return _checked([_merge(*choice) for choice in itertools.product(*parts)], budget)
    if isinstance(term, Mul):
        disjuncts = [(GroupWord(),)]
        for arg in term.args:
            factor = lattice_normal_form(arg, budget)
            _guard([disjuncts, factor], budget)
            disjuncts = _checked([
                tuple(dict.fromkeys(a * b for a in left for b in right))
                for left in disjuncts for right in factor], budget)
        return disjuncts
    if isinstance(term, Inv):
        # (\/_k /\_l w)^-1 = /\_k \/_l w^-1, distributed back to a join of meets.
        inner = lattice_normal_form(term.arg, budget)
        choices = [[(word.inverse(),) for word in conjunct] for conjunct in inner]
        _guard(choices, budget)
        return _checked([_merge(*choice) for choice in itertools.product(*choices)], budget)
    raise SignatureError(str(term), 'lgroup')


def _merge(*conjuncts):
    return tuple(dict.fromkeys(word for conjunct in conjuncts for word in conjunct))


def _guard(parts, budget):
    total = 1
    for part in parts:
        total *= max(len(part), 1)
    if total > budget.max_terms:
        raise BudgetExceeded('terms', budget.max_terms)


def _checked(disjuncts, budget):
    disjuncts = list(dict.fromkeys(disjuncts))
    if sum(len(conjunct) for conjunct in disjuncts) > budget.max_terms:
        raise BudgetExceeded('terms', budget.max_terms)
    return disjuncts


###########################
# Signature translations. #
###########################


def strip_e(term):
    """Delete e factors; an all-e product gives None (the empty product).

    >>> from semifield.tree import parse
    >>> strip_e(parse('x * e * y', 'semiring'))
    x * y
    >>> strip_e(parse('e * e', 'semiring')) is None
    True
    """
    if isinstance(term, Unit):
        return None
    if isinstance(term, Inv):
        arg = strip_e(term.arg)
        return None if arg is None else inv(arg)
    if isinstance(term, Mul):
        kept = [arg for arg in map(strip_e, term.args) if arg is not None]
        return mul(*kept) if kept else None
    if isinstance(term, (Join, Meet)):
        kept = [strip_e(arg) for arg in term.args]
        if None in kept:
            raise TranslationError('e as a joinand of {} has no e-free form'.format(term))
        return join(*kept) if isinstance(term, Join) else meet(*kept)
    return term


def efree_wrap(inequation):
    """Prefix both sides with a fresh variable so no side is empty.

    >>> from semifield.tree import parse
    >>> from semifield.terms import simple_from_statement as simple
    >>> efree_wrap(simple(parse('x <= e \\\\/ x^2', 'semiring')))
    _f1 * x <= _f1 \\/ _f1 * x * x
    """
    name = FreshNames(inequation.variables()).take()
    z = MonoidWord((name,))
    return SimpleInequation(z * inequation.lhs, tuple(z * word for word in inequation.rhs))


def efree_statement(inequation):
    """The wrapped inequation as an e-free semiring statement."""
    statement = efree_wrap(inequation).to_statement()
    return Statement('<=', strip_e(statement.lhs), strip_e(statement.rhs), 'semiring_efree')


def zero_simplify(term):
    """Absorb 0 bottom-up and delete unit factors.

    The result is 0 or a 0-free semiring term.

    >>> from semifield.tree import parse
    >>> zero_simplify(parse('(x * 0) \\\\/ y', 'semiring0'))
    y
    >>> zero_simplify(parse('0 \\\\/ 0', 'semiring0'))
    0
    >>> zero_simplify(parse('(0 \\\\/ e) * x', 'semiring0'))
    x
    """
    if isinstance(term, (Var, Unit, Zero)):
        return term
    if isinstance(term, Mul):
        args = [zero_simplify(arg) for arg in term.args]
        if any(isinstance(arg, Zero) for arg in args):
            return Zero()
        return mul(*[arg for arg in args if not isinstance(arg, Unit)])
    if isinstance(term, Join):
        args = [arg for arg in map(zero_simplify, term.args) if not isinstance(arg, Zero)]
        return join(*args) if args else Zero()
    raise SignatureError(str(term), 'semiring0')
