"""Exact rational Fourier-Motzkin elimination for strict homogeneous systems.

A system is a list of integer rows r; it asks for a vector a with
r . a > 0 for every row. Solutions scale, so a rational solution gives an
integer one with every r . a >= 1.
"""

import logging
import math
from fractions import Fraction


logger = logging.getLogger(__name__)


def _normalize(row):
    """Divide a row by the gcd of its entries so duplicates collapse."""
    divisor = 0
    for value in row:
        divisor = math.gcd(divisor, int(value))
    if divisor in (0, 1):
        return tuple(row)
    return tuple(value // divisor for value in row)


def _eliminate(rows, column):
    positive = [row for row in rows if row[column] > 0]
    negative = [row for row in rows if row[column] < 0]
    result = {row for row in rows if row[column] == 0}
    for upper in positive:
        for lower in negative:
            combined = [upper[k] * -lower[column] + lower[k] * upper[column] for k in range(len(upper))]
            result.add(_normalize(combined))
    return sorted(result)


def _pick_column(rows, remaining):
    def cost(column):
        positive = sum(1 for row in rows if row[column] > 0)
        negative = sum(1 for row in rows if row[column] < 0)
        return positive * negative - positive - negative, column
    return min(remaining, key=cost)


def solve_strict(rows, width):
    """Integer vector a with every row . a >= 1, or None when infeasible.

    >>> solve_strict([(1, 1), (1, -1)], 2)
    [1, 0]
    >>> solve_strict([(1,), (-1,)], 1) is None
    True
    >>> solve_strict([], 3)
    [0, 0, 0]
    """
    rows = sorted({_normalize(row) for row in rows})
    stages = []
    remaining = [column for column in range(width) if any(row[column] for row in rows)]
    while True:
        if any(not any(row) for row in rows):
            logger.debug('strict system infeasible after %d eliminations', len(stages))
            return None
        if not remaining:
            break
        column = _pick_column(rows, remaining)
        remaining.remove(column)
        stages.append((column, rows))
        rows = _eliminate(rows, column)
    if rows:
        return None
    values = [Fraction(0)] * width
    for column, system in reversed(stages):
        values[column] = _choose(system, column, values)
    scale = 1
    for value in values:
        scale = scale * value.denominator // math.gcd(scale, value.denominator)
    return [int(value * scale) for value in values]


def _choose(system, column, values):
    """A value for `column` satisfying every row once later columns are fixed."""
    low, high = None, None
    for row in system:
        coefficient = row[column]
        if coefficient == 0:
            continue
        rest = sum(row[k] * values[k] for k in range(len(row)) if k != column)
        bound = Fraction(-rest, coefficient)
        if coefficient > 0:
            low = bound if low is None else max(low, bound)
        else:
            high = bound if high is None else min(high, bound)
    if low is None and high is None:
        return Fraction(0)
    if low is None:
        return high - 1
    if high is None:
        return low + 1
    return (low + high) / 2
