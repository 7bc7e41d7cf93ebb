"""
semifield
===
Decide equations of idempotent semifields and lattice-ordered groups.

1. Parse statements over one of the signatures in `constants.SIGNATURES`.
2. Translate them to simple or basic inequations.
3. Search for a finite diagram refuting the inequation, or settle it over
   the tropical semifield by exact linear elimination.
4. Cross-check against finite algebras and the quasiequation oracles.

Every subcommand prints one human-readable line per result, or one JSON
record per line with --json. Exit codes: 0 verdict or output produced,
1 parse or usage error, 2 resource budget exceeded.
"""

import argparse
import json
import logging
import sys

from .bench import bench
from .constants import CLASS_SIGNATURES
from .constants import DEFAULT_MAX_EVALUATIONS
from .constants import DEFAULT_MAX_NODES
from .constants import DEFAULT_MAX_POINTS
from .constants import DEFAULT_MAX_TERMS
from .constants import FRESH_PREFIX
from .constants import SIGNATURES
from .constants import Budget
from .corpus import SHAPES
from .corpus import generate_corpus
from .corpus import read_corpus
from .corpus import write_corpus
from .data import BudgetExceeded
from .data import SemifieldError
from .data import Statement
from .decide import decide_lgroup
from .decide import decide_statement
from .models import algebra_from_spec
from .models import holds_finite
from .models import holds_quasi_Z
from .models import holds_quasi_Zn
from .models import nfb_witness
from .orders import group_right_order_exists
from .orders import monoid_right_order_exists
from .search import STRATEGIES
from .terms import as_group_word
from .terms import as_monoid_word
from .terms import basic_from_statement
from .terms import simple_from_statement
from .terms import smallest_signature
from .terms import term_size
from .translate import efree_statement
from .translate import ell_to_basic
from .translate import right_regularize
from .translate import star_translate
from .translate import to_quasiequation
from .translate import to_simple
from .translate import zero_simplify
from .tree import parse
from .tree import parse_quasi
from .tree import parse_statement
from .tree import parse_term


__all__ = ('run', 'main')

logger = logging.getLogger(__name__)

TRANSLATIONS = ('simple', 'star', 'basic', 'quasi', 'efree', 'zero', 'rightreg')


def main():
    sys.exit(run(sys.argv[1:]))


def run(argv, out=None):
    """Run one command and return its exit code.

    >>> run(['decide', '--class', 'semifield', 'x <= e \\\\/ x^2'])
    valid: x <= e \\/ x^2
    0
    >>> run(['decide', '--class', 'semifield', 'x <= y +'])
    1
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return 0 if not stop.code else 1
    if getattr(args, 'handler', None) is None:
        parser.print_usage(sys.stderr)
        return 1
    configure_logging(args.verbose)
    budget = Budget(args.max_points, args.max_nodes, args.max_evaluations, args.max_terms)
    try:
        records = args.handler(args, budget)
        for record in records:
            emit(record, args, out)
    except BudgetExceeded as error:
        print('error: {}'.format(error), file=sys.stderr)
        return 2
    except RecursionError:
        print('error: recursion limit of {} exceeded'.format(sys.getrecursionlimit()), file=sys.stderr)
        return 2
    except (SemifieldError, ValueError, OSError) as error:
        print('error: {}'.format(error), file=sys.stderr)
        return 1
    return 0


def configure_logging(verbosity):
    level = logging.WARNING if not verbosity else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def emit(record, args, out):
    text = record.pop('text')
    print(json.dumps(record, sort_keys=True) if args.json else text, file=out)


def _record(text, **fields):
    """A record carries its human-readable rendering under 'text'; JSON
    output drops it."""
    return dict(fields, text=text)


##############
# Arguments. #
##############


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='log to stderr (-vv for debug)')
    common.add_argument('--json', action='store_true', help='one JSON record per line')
    common.add_argument('--timings', action='store_true', help='include elapsed times in records')
    common.add_argument('--max-points', type=int, default=DEFAULT_MAX_POINTS,
                        help='diagram size limit; the pairwise search refuses to start when '
                        'one plus the total word length exceeds it')
    common.add_argument('--max-nodes', type=int, default=DEFAULT_MAX_NODES)
    common.add_argument('--max-evaluations', type=int, default=DEFAULT_MAX_EVALUATIONS)
    common.add_argument('--max-terms', type=int, default=DEFAULT_MAX_TERMS)
    common.add_argument('--strategy', choices=STRATEGIES, default='pairwise',
                        help='pairwise orders all trace points with propagation (default); '
                        'trace extends the maps letter by letter')

    parser = argparse.ArgumentParser(
        prog='semifield', description='Decide equations of idempotent semifields and l-groups.')
    commands = parser.add_subparsers(dest='command')

    command = commands.add_parser('parse', parents=[common], help='parse and print statements')
    command.add_argument('--sig', choices=sorted(SIGNATURES), default='lgroup')
    command.add_argument('statements', nargs='+')
    command.set_defaults(handler=do_parse)

    command = commands.add_parser('translate', parents=[common], help='apply one translation')
    command.add_argument('translation', choices=TRANSLATIONS)
    command.add_argument('--literal', action='store_true',
                         help='x*y*u*x*s joinand for star, trailing fresh variable for basic')
    command.add_argument('statements', nargs='+')
    command.set_defaults(handler=do_translate)

    command = commands.add_parser('decide', parents=[common], help='decide statements over a class')
    command.add_argument('--class', dest='cls', choices=sorted(CLASS_SIGNATURES), default='semifield')
    command.add_argument('--no-shortcut', action='store_true', help='always run the diagram search')
    command.add_argument('statements', nargs='+')
    command.set_defaults(handler=do_decide)

    model = commands.add_parser('model', help='finite and concrete models').add_subparsers(dest='action')
    command = model.add_parser('check', parents=[common], help='brute-force a statement in an algebra')
    command.add_argument('--algebra', required=True, help='flat-zn:<n>, flat:<monoid>, endo:<k> or bool0')
    command.add_argument('statements', nargs='+')
    command.set_defaults(handler=do_model_check)
    command = model.add_parser('quasi', parents=[common], help='check a quasiequation in Z or Z_n')
    command.add_argument('--in', dest='structure', required=True, help='Z or Zn:<n>')
    command.add_argument('statements', nargs='+')
    command.set_defaults(handler=do_model_quasi)
    command = model.add_parser('export', parents=[common], help='print operation tables')
    command.add_argument('--algebra', required=True)
    command.set_defaults(handler=do_model_export)

    order = commands.add_parser('order', help='right-order existence').add_subparsers(dest='kind')
    command = order.add_parser('group', parents=[common], help='words to make positive')
    command.add_argument('words', nargs='+')
    command.set_defaults(handler=do_order_group)
    command = order.add_parser('monoid', parents=[common], help='pairs s<t to make strict')
    command.add_argument('pairs', nargs='+')
    command.set_defaults(handler=do_order_monoid)

    command = commands.add_parser('witness', parents=[common], help='x <= e \\/ x^n and its refutation')
    command.add_argument('--n', type=int, required=True)
    command.set_defaults(handler=do_witness)

    command = commands.add_parser('gen', parents=[common], help='generate a seeded corpus')
    command.add_argument('--seed', type=int, default=1)
    command.add_argument('--count', type=int, default=10)
    command.add_argument('--vars', dest='variables', type=int, default=2)
    command.add_argument('--joinands', type=int, default=2)
    command.add_argument('--max-len', type=int, default=4)
    command.add_argument('--signature', choices=sorted(SHAPES), default='semiring')
    command.add_argument('--shape', default=None)
    command.add_argument('--out', default=None, help='write to a file instead of stdout')
    command.set_defaults(handler=do_gen)

    command = commands.add_parser('bench', parents=[common], help='decide every line of a corpus')
    command.add_argument('--class', dest='cls', choices=sorted(CLASS_SIGNATURES), default='semifield')
    command.add_argument('corpus')
    command.set_defaults(handler=do_bench)
    return parser


#############
# Commands. #
#############


def do_parse(args, budget):
    for text in args.statements:
        result = parse(text, args.sig)
        signature = smallest_signature(result) if isinstance(result, Statement) else None
        yield _record('{}  [size {}]'.format(result, term_size(result)),
                      command='parse', input=text, output=str(result),
                      size=term_size(result), signature=signature)


def _fresh(inputs, outputs):
    used = set(inputs)
    found = []
    for output in outputs:
        for name in output.variables():
            if name.startswith(FRESH_PREFIX) and name not in used and name not in found:
                found.append(name)
    return found


def _quasi_size(quasi):
    return sum(term_size(word) for pair in quasi.premises + (quasi.conclusion,) for word in pair)


def translate_one(kind, text, budget, literal=False):
    """(input statement, list of outputs) for one translation."""
    if kind == 'simple':
        statement = parse_statement(text, 'semiring')
        return statement, list(to_simple(statement, budget))
    if kind == 'star':
        statement = parse_statement(text, 'lgroup')
        return statement, [star_translate(basic_from_statement(statement), literal)]
    if kind == 'basic':
        statement = parse_statement(text, 'lgroup')
        return statement, list(ell_to_basic(statement, budget, literal))
    if kind == 'zero':
        result = parse(text, 'semiring0')
        if isinstance(result, Statement):
            return result, [Statement(result.relation, zero_simplify(result.lhs),
                                      zero_simplify(result.rhs), 'semiring0')]
        return result, [zero_simplify(result)]
    statement = parse_statement(text, 'semiring')
    simple = simple_from_statement(statement)
    if kind == 'quasi':
        return statement, [to_quasiequation(simple)]
    if kind == 'efree':
        return statement, [efree_statement(simple)]
    regular = right_regularize(simple)
    return statement, [] if regular is None else [regular]


def do_translate(args, budget):
    for text in args.statements:
        statement, outputs = translate_one(args.translation, text, budget, args.literal)
        sizes = [_quasi_size(item) if args.translation == 'quasi' else term_size(item) for item in outputs]
        rendered = [str(item) for item in outputs]
        lines = rendered or ['Empty']
        yield _record('\n'.join(lines), command='translate', translation=args.translation,
                      input=text, output=rendered, fresh_vars=_fresh(statement.variables(), outputs),
                      size_in=term_size(statement), size_out=sum(sizes))


def _verdict_text(verdict, text):
    lines = ['{}: {}'.format(verdict.status, text)]
    if not verdict.valid:
        lines.append('  refutes {}'.format(verdict.refuted))
        lines.append('  certificate {}'.format(json.dumps(verdict.certificate.to_dict(), sort_keys=True)))
    return '\n'.join(lines)


def do_decide(args, budget):
    for text in args.statements:
        statement = parse_statement(text, CLASS_SIGNATURES[args.cls])
        verdict = decide_statement(statement, args.cls, budget, args.strategy, not args.no_shortcut)
        yield _record(_verdict_text(verdict, text), command='decide', input=text, **{'class': args.cls},
                      **verdict.to_dict(args.timings))


def _algebra_signature(algebra):
    if algebra.zero is not None:
        return 'semiring0'
    return 'dlmonoid' if algebra.meet is not None else 'semiring'


def do_model_check(args, budget):
    algebra = algebra_from_spec(args.algebra)
    for text in args.statements:
        statement = parse_statement(text, _algebra_signature(algebra))
        holds, witness = holds_finite(algebra, statement, budget)
        rendering = 'holds' if holds else 'fails at {}'.format(
            ', '.join('{} = {}'.format(*item) for item in sorted(witness.items())))
        yield _record('{} in {}: {}'.format(text, algebra.name, rendering), command='model check',
                      algebra=algebra.name, input=text, holds=holds, witness=witness)


def do_model_quasi(args, budget):
    structure = args.structure
    for text in args.statements:
        quasi = parse_quasi(text, 'group')
        if structure == 'Z':
            holds = holds_quasi_Z(quasi)
        elif structure.startswith('Zn:') and structure[3:].isdigit() and int(structure[3:]) >= 1:
            holds = holds_quasi_Zn(quasi, int(structure[3:]), budget)
        else:
            raise ValueError('unknown structure {!r}; use Z or Zn:<n>'.format(structure))
        yield _record('{} in {}: {}'.format(quasi, structure, 'holds' if holds else 'fails'),
                      command='model quasi', structure=structure, input=text, holds=holds)


def do_model_export(args, budget):
    tables = algebra_from_spec(args.algebra).to_dict()
    yield dict(tables, text=json.dumps(tables, indent=2))


def _order_record(command, inputs, verdict):
    text = '{}: {}'.format('exists' if verdict.exists else 'does not exist',
                           ', '.join(str(word) for word in verdict.reduced_words))
    return _record(text, command=command, input=inputs, **verdict.to_dict())


def do_order_group(args, budget):
    words = [as_group_word(parse_term(text, 'group')) for text in args.words]
    yield _order_record('order group', args.words, group_right_order_exists(words, budget, args.strategy))


def do_order_monoid(args, budget):
    pairs = []
    for text in args.pairs:
        if text.count('<') != 1 or '<=' in text:
            raise ValueError('expected a pair s<t, got {!r}'.format(text))
        left, right = text.split('<')
        pairs.append((as_monoid_word(parse_term(left, 'monoid')), as_monoid_word(parse_term(right, 'monoid'))))
    yield _order_record('order monoid', args.pairs, monoid_right_order_exists(pairs, budget, args.strategy))


def do_witness(args, budget):
    if args.n < 1:
        raise ValueError('--n must be at least 1')
    witness = nfb_witness(args.n)
    refuted = not holds_finite(witness.algebra, witness.inequation.to_statement(), budget)[0]
    valid = decide_lgroup(witness.inequation, budget, args.strategy).valid
    if witness.degenerate:
        text = '{} holds everywhere; no refuting algebra'.format(witness.inequation)
    else:
        text = '{} fails in {} at x = {}; l-groups: {}'.format(
            witness.inequation, witness.algebra.name, witness.assignment['x'],
            'valid' if valid else 'invalid')
    yield _record(text, command='witness', refuted_in_algebra=refuted, lgroup_valid=valid,
                  **witness.to_dict())


def do_gen(args, budget):
    lines = generate_corpus(args.seed, args.count, args.variables, args.joinands, args.max_len,
                            args.signature, args.shape)
    if args.out:
        write_corpus(lines, args.out)
        yield _record('wrote {} statements to {}'.format(len(lines), args.out),
                      command='gen', count=len(lines), path=args.out)
        return
    for line in lines:
        yield _record(line, command='gen', statement=line)


def do_bench(args, budget):
    report = bench(read_corpus(args.corpus), args.cls, budget, args.strategy)
    for row in report['rows']:
        yield _record('{status:9} {elapsed:8.3f}s  {statement}'.format(**row), command='bench', **row)
    summary = report['aggregate']
    yield _record('{count} statements: {valid} valid, {invalid} invalid, {excluded} excluded, '
                  'max star ratio {max_star_ratio:.3f}, max basic ratio {max_basic_ratio:.3f}'.format(**summary),
                  command='bench summary', **summary)
