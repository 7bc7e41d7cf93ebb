"""Decision procedures and certificate checks.

`decide_lgroup` settles basic inequations over all l-groups (and hence over
idempotent semifields), `decide_tropical` settles them over the commutative
model <Z, max, +, 0>, and `decide_statement` routes a statement of any
supported class through the translations to one of the two.
"""

import logging
import time

from .constants import CLASS_SIGNATURES
from .constants import Budget
from .data import AlgebraWitness
from .data import BasicInequation
from .data import Diagram
from .data import IntegerWitness
from .data import SimpleInequation
from .data import Statement
from .data import Verdict
from .data import Zero
from .search import find_diagram
from .search import point_bound
from .terms import check_signature
from .terms import word_vector
from .translate import ell_to_basic
from .translate import right_regularize
from .translate import to_simple
from .translate import zero_simplify
from .tropical import solve_strict


logger = logging.getLogger(__name__)


def joinand_words(inequation):
    """The words w_i = t_i * s^-1 of e <= w1 \\/ ... \\/ wn.

    >>> from semifield.tree import parse
    >>> from semifield.terms import basic_from_statement as basic
    >>> joinand_words(basic(parse('x <= e \\\\/ x^2', 'lgroup')))
    [x^-1, x]
    """
    if isinstance(inequation, SimpleInequation):
        inequation = inequation.to_basic()
    correction = inequation.lhs.to_group().inverse()
    return [word * correction for word in inequation.rhs]


def decide_lgroup(inequation, budget=None, strategy='pairwise', abelian_shortcut=True):
    """Decide a basic inequation over the variety of l-groups.

    >>> from semifield.tree import parse
    >>> from semifield.terms import basic_from_statement as basic
    >>> decide_lgroup(basic(parse('x <= e \\\\/ x^2', 'lgroup'))).status
    'valid'
    >>> verdict = decide_lgroup(basic(parse('e <= x', 'lgroup')))
    >>> verdict.status, verdict.certificate.maps
    ('invalid', {'x': ((1, 0),)})
    >>> decide_lgroup(basic(parse('e <= x \\\\/ x^-1', 'lgroup'))).valid
    True
    """
    if isinstance(inequation, SimpleInequation):
        inequation = inequation.to_basic()
    budget = budget or Budget()
    start = time.perf_counter()
    words = joinand_words(inequation)
    stats = {'points': point_bound(words), 'nodes': 0, 'strategy': strategy}

    def verdict(status, certificate=None):
        stats['elapsed'] = time.perf_counter() - start
        return Verdict(status, certificate, inequation if certificate else None, stats)

    if any(len(word) == 0 for word in words):
        return verdict('valid')
    if abelian_shortcut:
        names = inequation.variables()
        solution = solve_strict([[-value for value in word_vector(word, names)] for word in words],
                                len(names))
        if solution is not None:
            stats['strategy'] = 'abelian'
            return verdict('invalid', translation_diagram(words, dict(zip(names, solution))))
    diagram, nodes = find_diagram(words, budget, strategy)
    stats['nodes'] = nodes
    if diagram is None:
        return verdict('valid')
    return verdict('invalid', diagram)


def translation_diagram(words, shifts):
    """Diagram on the integer line with each variable acting by a shift.

    Every word must move the base point 0 strictly down.
    """
    traces = []
    pairs = {name: set() for name in shifts}
    for word in words:
        trace = [0]
        for name, exponent in word.letters:
            step = exponent * shifts[name]
            here, there = trace[-1], trace[-1] + step
            pairs[name].add((here, there) if exponent > 0 else (there, here))
            trace.append(there)
        traces.append(trace)
    values = sorted({point for trace in traces for point in trace})
    rank = {value: position for position, value in enumerate(values)}
    return Diagram(
        points=len(values),
        base=rank[0],
        maps={name: tuple(sorted((rank[a], rank[b]) for a, b in found))
              for name, found in sorted(pairs.items()) if found},
        traces=tuple(tuple(rank[point] for point in trace) for trace in traces))


#########################
# Certificate checking. #
#########################


def diagram_errors(diagram, inequation):
    """Reasons `diagram` fails to refute `inequation`; empty when it does.

    >>> from semifield.tree import parse
    >>> from semifield.terms import basic_from_statement as basic
    >>> d = Diagram(points=2, base=1, maps={'x': ((1, 0),)}, traces=((1, 0),))
    >>> diagram_errors(d, basic(parse('e <= x', 'lgroup')))
    []
    >>> diagram_errors(d, basic(parse('e <= x \\\\/ x^-1', 'lgroup')))
    ['expected 2 traces, found 1']
    """
    words = joinand_words(inequation)
    errors = []
    if any(len(word) == 0 for word in words):
        return ['a joinand reduces to e']
    if not 0 <= diagram.base < diagram.points:
        return ['base {} is not a point'.format(diagram.base)]
    if diagram.points > point_bound(words):
        errors.append('{} points exceed the bound {}'.format(diagram.points, point_bound(words)))
    maps = {}
    for name, pairs in diagram.maps.items():
        arguments = [a for a, _ in pairs]
        values = [b for _, b in pairs]
        if any(not 0 <= p < diagram.points for p in arguments + values):
            errors.append('map {} leaves the point set'.format(name))
        if len(set(arguments)) != len(arguments):
            errors.append('map {} is not a function'.format(name))
        if len(set(values)) != len(values):
            errors.append('map {} is not injective'.format(name))
        ordered = sorted(pairs)
        if any(b1 >= b2 for (_, b1), (_, b2) in zip(ordered, ordered[1:])):
            errors.append('map {} is not order-preserving'.format(name))
        maps[name] = dict(pairs)
    if errors:
        return errors
    if len(diagram.traces) != len(words):
        return ['expected {} traces, found {}'.format(len(words), len(diagram.traces))]
    for index, (word, trace) in enumerate(zip(words, diagram.traces)):
        errors.extend(_trace_errors(index, word, trace, maps, diagram.base))
    return errors


def _trace_errors(index, word, trace, maps, base):
    if len(trace) != len(word) + 1 or trace[0] != base:
        return ['trace {} does not start at the base with one point per letter'.format(index)]
    for step, (name, exponent) in enumerate(word.letters):
        here, there = trace[step], trace[step + 1]
        table = maps.get(name, {})
        ok = table.get(here) == there if exponent > 0 else table.get(there) == here
        if not ok:
            return ['trace {} breaks at letter {}'.format(index, step)]
    if not trace[-1] < base:
        return ['trace {} ends at {}, not below the base {}'.format(index, trace[-1], base)]
    return []


def verify_diagram(diagram, inequation):
    """True iff the diagram satisfies every diagram invariant for the inequation."""
    if isinstance(inequation, SimpleInequation):
        inequation = inequation.to_basic()
    errors = diagram_errors(diagram, inequation)
    if errors:
        logger.debug('diagram rejected: %s', '; '.join(errors))
    return not errors


def tropical_value(word, assignment):
    return sum(assignment.get(name, 0) * count
               for name, count in zip(word.variables(), word_vector(word, word.variables())))


def verify_integer_witness(witness, inequation):
    """The left side strictly exceeds every joinand under the assignment."""
    left = tropical_value(inequation.lhs, witness.assignment)
    return all(left > tropical_value(word, witness.assignment) for word in inequation.rhs)


def verify_verdict(verdict):
    """Check the certificate of an invalid verdict by direct evaluation.

    Valid verdicts carry no certificate and always pass.
    """
    if verdict.valid:
        return True
    certificate, refuted = verdict.certificate, verdict.refuted
    if isinstance(certificate, Diagram):
        return verify_diagram(certificate, refuted)
    if isinstance(certificate, IntegerWitness):
        return verify_integer_witness(certificate, refuted)
    if isinstance(certificate, AlgebraWitness):
        from .models import algebra_from_spec, holds_at
        return not holds_at(algebra_from_spec(certificate.algebra), refuted, certificate.assignment)
    return False


#####################
# Tropical backend. #
#####################


def decide_tropical(inequation, commutative=True):
    """Decide an inequation over <Z, max, +, 0>.

    >>> from semifield.tree import parse
    >>> from semifield.terms import simple_from_statement as simple
    >>> decide_tropical(simple(parse('x <= e \\\\/ x^2', 'semiring'))).status
    'valid'
    >>> decide_tropical(simple(parse('x * y <= x \\\\/ y', 'semiring'))).certificate.assignment
    {'x': 1, 'y': 1}
    >>> decide_tropical(simple(parse('x * y <= y * x', 'semiring'))).status
    'valid'
    """
    if not commutative:
        raise ValueError('the tropical model is commutative; use decide_lgroup instead')
    start = time.perf_counter()
    names = inequation.variables()
    lhs = word_vector(inequation.lhs, names)
    rows = [[a - b for a, b in zip(lhs, word_vector(word, names))] for word in inequation.rhs]
    solution = solve_strict(rows, len(names))
    stats = {'elapsed': time.perf_counter() - start}
    if solution is None:
        return Verdict('valid', stats=stats)
    return Verdict('invalid', IntegerWitness(dict(zip(names, solution))), inequation, stats)


#############
# Dispatch. #
#############


def decide_statement(statement, cls, budget=None, strategy='pairwise', abelian_shortcut=True):
    """Decide a statement over one of the supported classes.

    >>> from semifield.tree import parse
    >>> decide_statement(parse('x * 0 \\\\/ x <= x', 'semiring0'), 'semifield0').status
    'valid'
    >>> decide_statement(parse('x <= y', 'semiring0'), 'semifield0').certificate
    AlgebraWitness(algebra='bool0', assignment={'x': 'e', 'y': '0'})
    >>> decide_statement(parse('e <= x /\\\\ y', 'dlmonoid'), 'dlmonoid').status
    'invalid'
    """
    if cls not in CLASS_SIGNATURES:
        raise ValueError('unknown class {!r}'.format(cls))
    check_signature(statement, CLASS_SIGNATURES[cls])
    budget = budget or Budget()
    logger.debug('deciding %s over %s', statement, cls)
    options = dict(budget=budget, strategy=strategy, abelian_shortcut=abelian_shortcut)
    if cls in ('lgroup', 'dlmonoid'):
        return _all_valid((decide_lgroup(basic, **options) for basic in ell_to_basic(statement, budget)))
    if cls in ('semifield', 'semifield_efree'):
        return _all_valid((decide_lgroup(simple, **options) for simple in to_simple(statement, budget)))
    if cls == 'commutative':
        return _all_valid((decide_tropical(simple) for simple in to_simple(statement, budget)))
    return _decide_zero(statement, budget, options)


def _all_valid(verdicts):
    """First invalid verdict, or a valid one summing the statistics."""
    stats = {'nodes': 0, 'elapsed': 0.0, 'pieces': 0}
    for verdict in verdicts:
        stats['pieces'] += 1
        stats['nodes'] += verdict.stats.get('nodes', 0)
        stats['elapsed'] += verdict.stats.get('elapsed', 0.0)
        if not verdict.valid:
            return Verdict('invalid', verdict.certificate, verdict.refuted,
                           dict(verdict.stats, nodes=stats['nodes'], elapsed=stats['elapsed']))
    return Verdict('valid', stats=stats)


def _decide_zero(statement, budget, options):
    lhs, rhs = zero_simplify(statement.lhs), zero_simplify(statement.rhs)
    lhs_zero, rhs_zero = isinstance(lhs, Zero), isinstance(rhs, Zero)
    names = statement.variables()
    if lhs_zero and rhs_zero or (lhs_zero and statement.is_inequation):
        return Verdict('valid', stats={'nodes': 0})
    if lhs_zero or rhs_zero:
        # Sending every variable to e in {0, e} makes the nonzero side e.
        witness = AlgebraWitness('bool0', {name: 'e' for name in names})
        return Verdict('invalid', witness, statement, {'nodes': 0})
    simplified = Statement(statement.relation, lhs, rhs, 'semiring')

    def pieces():
        for simple in to_simple(simplified, budget):
            regular = right_regularize(simple)
            if regular is None:
                kept = set(simple.lhs.variables())
                witness = AlgebraWitness('bool0', {name: 'e' if name in kept else '0' for name in names})
                yield Verdict('invalid', witness, statement, {'nodes': 0})
                return
            yield decide_lgroup(regular, **options)
    return _all_valid(pieces())
