"""Seeded random statements for the property suites and the benchmark.

Every generator takes a `random.Random`, so a seed fixes the output.
"""

import logging
import random

from .constants import VARIABLE_NAMES
from .data import BasicInequation
from .data import GroupWord
from .data import MonoidWord
from .data import SimpleInequation
from .data import Statement
from .data import Unit
from .data import Var
from .data import Zero
from .data import inv
from .data import join
from .data import meet
from .data import mul
from .translate import is_left_regular


logger = logging.getLogger(__name__)

SHAPES = {
    'semiring': ('simple', 'left_regular', 'equation'),
    'lgroup': ('basic', 'shaped', 'general'),
    'semiring0': ('general',),
}

MAX_ATTEMPTS = 1000


def random_monoid_word(rng, names, max_len, min_len=0):
    return MonoidWord(tuple(rng.choice(names) for _ in range(rng.randint(min_len, max_len))))


def random_group_word(rng, names, max_len, min_len=0):
    """A freely reduced word; no letter is followed by its inverse."""
    letters = []
    for _ in range(rng.randint(min_len, max_len)):
        while True:
            letter = (rng.choice(names), rng.choice((1, -1)))
            if not letters or letters[-1] != (letter[0], -letter[1]):
                break
        letters.append(letter)
    return GroupWord(tuple(letters))


def random_simple(rng, names, joinands, max_len):
    count = rng.randint(1, joinands)
    return SimpleInequation(random_monoid_word(rng, names, max_len),
                            tuple(random_monoid_word(rng, names, max_len) for _ in range(count)))


def random_left_regular(rng, names, joinands, max_len):
    for _ in range(MAX_ATTEMPTS):
        inequation = random_simple(rng, names, joinands, max_len)
        if is_left_regular(inequation):
            return inequation
    raise ValueError('no left-regular inequation found for these parameters')


def random_basic(rng, names, joinands, max_len):
    count = rng.randint(1, joinands)
    return BasicInequation(random_monoid_word(rng, names, max(max_len // 3, 1)),
                           tuple(random_group_word(rng, names, max_len, 1) for _ in range(count)))


def random_shaped(rng, names, joinands, max_len):
    """A meet of joins below a join of meets of at most binary joins."""
    def word(length=max_len):
        return random_group_word(rng, names, length).to_term()

    def small_join(width):
        return join(*[word(max(max_len // 2, 1)) for _ in range(rng.randint(1, width))])

    lhs = meet(*[small_join(2) for _ in range(rng.randint(1, 2))])
    blocks = []
    for _ in range(rng.randint(1, joinands)):
        blocks.append(meet(*[small_join(2) for _ in range(rng.randint(1, 2))]))
    return Statement('<=', lhs, join(*blocks), 'lgroup')


def random_term(rng, names, depth, operations, constants=(Unit(),)):
    if depth == 0 or rng.random() < 0.3:
        if constants and rng.random() < 0.15:
            return rng.choice(constants)
        return Var(rng.choice(names))
    operation = rng.choice(operations)
    if operation == 'inv':
        return inv(random_term(rng, names, depth - 1, operations, constants))
    args = [random_term(rng, names, depth - 1, operations, constants) for _ in range(2)]
    return {'mul': mul, 'join': join, 'meet': meet}[operation](*args)


def random_statement(rng, names, max_len, signature):
    depth = max(2, min(max_len, 4))
    if signature == 'lgroup':
        operations, constants = ('mul', 'mul', 'join', 'meet', 'inv'), (Unit(),)
    elif signature == 'semiring0':
        operations, constants = ('mul', 'mul', 'join'), (Unit(), Zero())
    else:
        operations, constants = ('mul', 'mul', 'join'), (Unit(),)
    relation = rng.choice(('=', '<='))
    return Statement(relation, random_term(rng, names, depth, operations, constants),
                     random_term(rng, names, depth, operations, constants), signature)


def generate_corpus(seed, count=10, variables=2, joinands=2, max_len=4, signature='semiring', shape=None):
    """Deterministic list of statement strings.

    >>> generate_corpus(1, count=3) == generate_corpus(1, count=3)
    True
    >>> len(generate_corpus(7, count=5, signature='lgroup', shape='shaped'))
    5
    """
    if signature not in SHAPES:
        raise ValueError('unknown corpus signature {!r}'.format(signature))
    shape = shape or SHAPES[signature][0]
    if shape not in SHAPES[signature]:
        raise ValueError('shape {!r} is not available for {}'.format(shape, signature))
    if not 1 <= variables <= len(VARIABLE_NAMES):
        raise ValueError('variables must be between 1 and {}'.format(len(VARIABLE_NAMES)))
    if count < 0 or joinands < 1 or max_len < 1:
        raise ValueError('count must be >= 0, joinands and max_len >= 1')
    rng = random.Random(seed)
    names = VARIABLE_NAMES[:variables]
    lines = []
    for _ in range(count):
        if shape == 'simple':
            item = random_simple(rng, names, joinands, max_len)
        elif shape == 'left_regular':
            item = random_left_regular(rng, names, joinands, max_len)
        elif shape == 'equation':
            item = random_statement(rng, names, max_len, 'semiring')
            item = Statement('=', item.lhs, item.rhs, 'semiring')
        elif shape == 'basic':
            item = random_basic(rng, names, joinands, max_len)
        elif shape == 'shaped':
            item = random_shaped(rng, names, joinands, max_len)
        else:
            item = random_statement(rng, names, max_len, signature)
        lines.append(str(item))
    logger.info('generated %d %s statements (%s) from seed %s', len(lines), shape, signature, seed)
    return lines


def write_corpus(lines, path):
    with open(path, 'w') as handle:
        for line in lines:
            handle.write(line + '\n')


def read_corpus(path):
    """Statement lines, skipping blanks and # comments."""
    with open(path) as handle:
        return [line.strip() for line in handle if line.strip() and not line.startswith('#')]
