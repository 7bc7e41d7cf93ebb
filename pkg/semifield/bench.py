"""Benchmark a corpus: verdicts, search effort and translation size ratios."""

import logging
import time

from .constants import CLASS_SIGNATURES
from .constants import Budget
from .data import BudgetExceeded
from .data import Statement
from .decide import decide_statement
from .terms import term_size
from .translate import ell_to_basic
from .translate import join_of_meets
from .translate import meet_of_joins
from .translate import star_translate
from .tree import parse_statement


logger = logging.getLogger(__name__)


def size_ratios(statement, budget=None):
    """Observed translation sizes against the 2S^2 and 7S^2 + S bounds.

    Returns None for statements mentioning 0, which have no l-group reading.

    >>> from semifield.tree import parse
    >>> ratios = size_ratios(parse('e <= x /\\\\ y', 'lgroup'))
    >>> ratios['shaped'], ratios['basic_ratio'] <= 1, ratios['star_ratio'] <= 1
    (True, True, True)
    """
    if 'zero' in statement.symbols():
        return None
    lifted = Statement(statement.relation, statement.lhs, statement.rhs, 'lgroup')
    size = term_size(lifted)
    basics = ell_to_basic(lifted, budget)
    shaped = meet_of_joins(lifted.lhs) is not None and join_of_meets(lifted.rhs) is not None
    basic_ratio = max(term_size(basic) for basic in basics) / (2 * size ** 2)
    star_ratio = 0.0
    for basic in basics:
        inner = term_size(basic)
        star_ratio = max(star_ratio, term_size(star_translate(basic)) / (7 * inner ** 2 + inner))
    return {'size': size, 'shaped': shaped, 'basic_ratio': basic_ratio, 'star_ratio': star_ratio}


def bench(lines, cls='semifield', budget=None, strategy='pairwise'):
    """One row per corpus line plus an aggregate summary.

    >>> bench([])['aggregate']['count']
    0
    """
    budget = budget or Budget()
    rows = []
    for line in lines:
        statement = parse_statement(line, CLASS_SIGNATURES[cls])
        row = {'statement': line}
        start = time.perf_counter()
        try:
            verdict = decide_statement(statement, cls, budget, strategy)
        except BudgetExceeded as error:
            row.update(status='excluded', reason=str(error), nodes=None)
        else:
            row.update(status=verdict.status, nodes=verdict.stats.get('nodes', 0))
        row['elapsed'] = time.perf_counter() - start
        try:
            row['ratios'] = size_ratios(statement, budget)
        except BudgetExceeded:
            row['ratios'] = None
        rows.append(row)
        logger.info('%s: %s in %.3fs', line, row['status'], row['elapsed'])
    return {'rows': rows, 'aggregate': aggregate(rows)}


def aggregate(rows):
    ratios = [row['ratios'] for row in rows if row['ratios']]
    shaped = [ratio['basic_ratio'] for ratio in ratios if ratio['shaped']]
    return {
        'count': len(rows),
        'valid': sum(1 for row in rows if row['status'] == 'valid'),
        'invalid': sum(1 for row in rows if row['status'] == 'invalid'),
        'excluded': sum(1 for row in rows if row['status'] == 'excluded'),
        'total_elapsed': sum(row['elapsed'] for row in rows),
        'max_nodes': max((row['nodes'] for row in rows if row['nodes'] is not None), default=0),
        'max_star_ratio': max((ratio['star_ratio'] for ratio in ratios), default=0.0),
        'max_basic_ratio': max(shaped, default=0.0),
    }
