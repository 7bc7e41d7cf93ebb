"""Right orders on free groups and free monoids, decided through l-group
validity, and the embedding of any finite query into two generators.

A right order making s1, ..., sn positive exists iff some l-group refutes
e <= s1 \\/ ... \\/ sn.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .data import BasicInequation
from .data import Diagram
from .data import GroupWord
from .data import MonoidWord
from .decide import decide_lgroup
from .terms import free_reduce


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderVerdict:
    """Whether a right order with every query word positive exists."""
    exists: bool
    reduced_words: Tuple[GroupWord, ...]
    certificate: Optional[Diagram] = None
    refuted: Optional[BasicInequation] = None

    def to_dict(self):
        record = {'exists': self.exists, 'reduced_words': [str(word) for word in self.reduced_words]}
        if self.certificate is not None:
            record['certificate'] = dict(self.certificate.to_dict(), kind='Diagram')
            record['refutes'] = str(self.refuted)
        return record


def group_right_order_exists(words, budget=None, strategy='pairwise'):
    """Is there a right order on the free group with every word positive?

    >>> x = GroupWord((('x', 1),))
    >>> group_right_order_exists([x]).exists
    True
    >>> group_right_order_exists([x, x.inverse()]).exists
    False
    >>> group_right_order_exists([GroupWord()]).exists
    False
    """
    assert words, 'an order query needs at least one word'
    words = tuple(free_reduce(word) for word in words)
    inequation = BasicInequation(MonoidWord(()), words)
    verdict = decide_lgroup(inequation, budget=budget, strategy=strategy)
    logger.debug('order query %s: %s', inequation, verdict.status)
    if verdict.valid:
        return OrderVerdict(False, words)
    return OrderVerdict(True, words, verdict.certificate, verdict.refuted)


def monoid_right_order_exists(pairs, budget=None, strategy='pairwise'):
    """Is there a right order on the free monoid with s_i < t_i for all pairs?

    >>> x, y = MonoidWord(('x',)), MonoidWord(('y',))
    >>> monoid_right_order_exists([(x * y, y * x)]).exists
    True
    >>> monoid_right_order_exists([(x, x)]).exists
    False
    >>> monoid_right_order_exists([(MonoidWord(()), x), (MonoidWord(()), y)]).exists
    True
    """
    assert pairs, 'an order query needs at least one pair'
    words = tuple(t.to_group() * s.to_group().inverse() for s, t in pairs)
    if any(len(word) == 0 for word in words):
        return OrderVerdict(False, words)
    return group_right_order_exists(words, budget, strategy)


#########################
# Rank-two commutators. #
#########################


def commutator(a, b):
    """[a, b] = a^-1 * b^-1 * a * b.

    >>> commutator(GroupWord((('x1', 1),)), GroupWord((('x2', 1),)))
    x1^-1 * x2^-1 * x1 * x2
    """
    return a.inverse() * b.inverse() * a * b


def rank2_embed(words):
    """Send the j-th distinct variable to [x1, x2^j] and reduce.

    >>> y1, y2 = GroupWord((('y1', 1),)), GroupWord((('y2', 1),))
    >>> rank2_embed([y1 * y2])
    [x1^-1 * x2^-1 * x1 * x2 * x1^-1 * x2^-1 * x2^-1 * x1 * x2 * x2]
    >>> rank2_embed([GroupWord()])
    [e]
    """
    order = {}
    for word in words:
        for name, _ in word.letters:
            order.setdefault(name, len(order) + 1)
    x1 = GroupWord((('x1', 1),))
    images = {name: commutator(x1, GroupWord((('x2', 1),) * j)) for name, j in order.items()}
    result = []
    for word in words:
        image = GroupWord()
        for name, exponent in word.letters:
            image = image * (images[name] if exponent > 0 else images[name].inverse())
        result.append(image)
    return result


def _zeta(k):
    if k == 0:
        raise ValueError('pair_index is defined on nonzero integers')
    return 2 * k - 2 if k > 0 else -2 * k - 1


def _unzeta(n):
    return n // 2 + 1 if n % 2 == 0 else -(n + 1) // 2


def pair_index(k, l):
    """A bijection from pairs of nonzero integers onto the naturals.

    >>> pair_index(1, 1)
    0
    >>> pair_index(0, 1)
    Traceback (most recent call last):
    ...
    ValueError: pair_index is defined on nonzero integers
    """
    a, b = _zeta(k), _zeta(l)
    return (a + b) * (a + b + 1) // 2 + b


def pair_unindex(n):
    """Inverse of pair_index.

    >>> pair_unindex(0)
    (1, 1)
    >>> pair_unindex(pair_index(-3, 5))
    (-3, 5)
    """
    if n < 0:
        raise ValueError('pair_unindex is defined on naturals')
    diagonal = (math.isqrt(8 * n + 1) - 1) // 2
    b = n - diagonal * (diagonal + 1) // 2
    a = diagonal - b
    return _unzeta(a), _unzeta(b)
