"""Exhaustive search for finite diagrams refuting e <= w1 \\/ ... \\/ wn.

Words act on points from the right: the letter x moves p to maps[x](p) and
x^-1 moves p to its preimage. A diagram exists iff some l-group refutes the
inequation, so an exhausted search proves validity.

Two complete strategies are provided. `pairwise_search`, the default, fixes
the relative order of all trace points up front, branching on <, = and >
with union and transitive closure. It refuses to start when `point_bound`
exceeds the points budget. `trace_search` extends the traces letter by
letter, placing each undefined image at an existing point or in a gap
between points; it propagates nothing, so valid inequations whose proof
needs order reasoning can exhaust its node budget.
"""

import copy
import logging
import sys

from .constants import Budget
from .data import BudgetExceeded
from .data import Diagram


logger = logging.getLogger(__name__)

STRATEGIES = ('trace', 'pairwise')


def point_bound(words):
    return 1 + sum(len(word) for word in words)


def find_diagram(words, budget=None, strategy='pairwise'):
    """Return (diagram or None, nodes explored).

    >>> from semifield.data import GroupWord
    >>> x = GroupWord((('x', 1),))
    >>> diagram, _ = find_diagram([x])
    >>> diagram.points, diagram.base, diagram.maps
    (2, 1, {'x': ((1, 0),)})
    >>> find_diagram([x, x.inverse()])[0] is None
    True
    """
    budget = budget or Budget()
    if strategy == 'trace':
        search = _TraceSearch(words, budget)
    elif strategy == 'pairwise':
        if point_bound(words) > budget.max_points:
            raise BudgetExceeded('points', budget.max_points)
        search = _PairwiseSearch(words, budget)
    else:
        raise ValueError('unknown search strategy {!r}'.format(strategy))
    try:
        diagram = search.run()
    except BudgetExceeded as error:
        logger.warning('%s search over %d words stopped: %s', strategy, len(words), error)
        raise
    except RecursionError:
        logger.warning('%s search over %d words ran out of stack', strategy, len(words))
        raise BudgetExceeded('recursion', sys.getrecursionlimit()) from None
    logger.debug('%s search over %d words: %d nodes, %s', strategy, len(words),
                 search.nodes, 'found diagram' if diagram else 'exhausted')
    return diagram, search.nodes


def trace_search(words, budget=None):
    return find_diagram(words, budget, 'trace')


def pairwise_search(words, budget=None):
    return find_diagram(words, budget, 'pairwise')


class _Counter:

    def __init__(self, budget):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded('nodes', self.budget.max_nodes)


########################
# Trace-driven search. #
########################


class _State:
    """Mutable search state, copied on every branch.

    `order` lists point ids from smallest to largest; `forward[x]` and
    `backward[x]` are the partial map of x and its inverse.
    """

    def __init__(self, variables):
        self.order = [0]
        self.forward = {name: {} for name in variables}
        self.backward = {name: {} for name in variables}
        self.traces = []

    def branch(self):
        other = copy.copy(self)
        other.order = list(self.order)
        other.forward = {name: dict(pairs) for name, pairs in self.forward.items()}
        other.backward = {name: dict(pairs) for name, pairs in self.backward.items()}
        other.traces = [list(trace) for trace in self.traces]
        return other

    def rank(self):
        return {point: position for position, point in enumerate(self.order)}


class _TraceSearch(_Counter):

    def __init__(self, words, budget):
        super().__init__(budget)
        self.words = [word.letters for word in words]
        variables = {name for word in self.words for name, _ in word}
        self.state = _State(sorted(variables))

    def run(self):
        found = self._extend(self.state, 0, 0)
        if found is None:
            return None
        return _renumber(found.order, 0, found.forward, found.traces)

    def _extend(self, state, word, step):
        if word == len(self.words):
            return state
        letters = self.words[word]
        if step == 0:
            state.traces.append([0])
        trace = state.traces[-1]
        current = trace[-1]
        name, exponent = letters[step]
        table, other = (state.forward, state.backward) if exponent > 0 else (state.backward, state.forward)
        last = step + 1 == len(letters)
        image = table[name].get(current)
        if image is not None:
            if last and not self._below_base(state, image):
                return None
            trace.append(image)
            return self._advance(state, word, step)
        for point, is_new, slot in self._candidates(state, table[name], other[name], current, last):
            self.tick()
            child = state.branch()
            if is_new:
                point = max(child.order) + 1
                child.order.insert(slot, point)
                if len(child.order) > self.budget.max_points:
                    raise BudgetExceeded('points', self.budget.max_points)
            target, source = (child.forward, child.backward) if exponent > 0 else (child.backward, child.forward)
            target[name][current] = point
            source[name][point] = current
            child.traces[-1].append(point)
            found = self._advance(child, word, step)
            if found is not None:
                return found
        return None

    def _advance(self, state, word, step):
        if step + 1 == len(self.words[word]):
            return self._extend(state, word + 1, 0)
        return self._extend(state, word, step + 1)

    @staticmethod
    def _below_base(state, point):
        rank = state.rank()
        return rank[point] < rank[0]

    def _candidates(self, state, table, reverse, current, last):
        """Images for `current` keeping `table` injective and monotone.

        Yields (point, is_new, slot): an existing point, or a new point to be
        inserted at position `slot` of the order.
        """
        rank = state.rank()
        here = rank[current]
        low, high = -1, len(state.order)
        for argument, value in table.items():
            if rank[argument] < here:
                low = max(low, rank[value])
            else:
                high = min(high, rank[value])
        if last:
            high = min(high, rank[0])
        for position in range(low + 1, high + 1):
            yield None, True, position
            if position < high and state.order[position] not in reverse:
                yield state.order[position], False, None


def _renumber(order, base, forward, traces):
    rank = {point: position for position, point in enumerate(order)}
    maps = {}
    for name, pairs in sorted(forward.items()):
        if pairs:
            maps[name] = tuple(sorted((rank[a], rank[b]) for a, b in pairs.items()))
    return Diagram(
        points=len(order),
        base=rank[base],
        maps=maps,
        traces=tuple(tuple(rank[point] for point in trace) for trace in traces))


#############################
# Pairwise-relation search. #
#############################


class _Conflict(Exception):
    pass


class _PairwiseSearch(_Counter):

    def __init__(self, words, budget):
        super().__init__(budget)
        self.traces = []
        edges = {}
        size = 1
        for word in words:
            trace = [0]
            for name, exponent in word.letters:
                point = size
                size += 1
                pair = (trace[-1], point) if exponent > 0 else (point, trace[-1])
                edges.setdefault(name, []).append(pair)
                trace.append(point)
            self.traces.append(trace)
        self.size = size
        self.edges = edges
        # rel(a, c) must equal rel(b, d) whenever (a, b) and (c, d) are edges
        # of the same variable.
        self.links = {}
        for pairs in edges.values():
            for first, (a, b) in enumerate(pairs):
                for c, d in pairs[first + 1:]:
                    self.links.setdefault((a, c), []).append((b, d))
                    self.links.setdefault((c, a), []).append((d, b))
                    self.links.setdefault((b, d), []).append((a, c))
                    self.links.setdefault((d, b), []).append((c, a))

    def run(self):
        relation = [[None] * self.size for _ in range(self.size)]
        queue = []
        try:
            for point in range(self.size):
                self._assign(relation, point, point, 0, queue)
            for trace in self.traces:
                self._assign(relation, trace[-1], 0, -1, queue)
            self._propagate(relation, queue)
        except _Conflict:
            return None
        return self._branch(relation)

    def _branch(self, relation):
        pair = self._undecided(relation)
        if pair is None:
            return self._diagram(relation)
        i, j = pair
        for choice in (-1, 0, 1):
            self.tick()
            child = [row[:] for row in relation]
            queue = []
            try:
                self._assign(child, i, j, choice, queue)
                self._propagate(child, queue)
            except _Conflict:
                continue
            found = self._branch(child)
            if found is not None:
                return found
        return None

    def _undecided(self, relation):
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if relation[i][j] is None:
                    return i, j
        return None

    @staticmethod
    def _assign(relation, i, j, value, queue):
        known = relation[i][j]
        if known is None:
            relation[i][j] = value
            relation[j][i] = -value
            queue.append((i, j))
        elif known != value:
            raise _Conflict()

    def _propagate(self, relation, queue):
        while queue:
            i, j = queue.pop()
            value = relation[i][j]
            for k in range(self.size):
                onward = _compose(value, relation[j][k])
                if onward is not None:
                    self._assign(relation, i, k, onward, queue)
                backward = _compose(relation[k][i], value)
                if backward is not None:
                    self._assign(relation, k, j, backward, queue)
            for pair in ((i, j), (j, i)):
                for k, l in self.links.get(pair, ()):
                    self._assign(relation, k, l, relation[pair[0]][pair[1]], queue)

    def _diagram(self, relation):
        # Every pair is decided, so counting strictly smaller points ranks the
        # equality classes.
        below = [sum(1 for other in range(self.size) if relation[other][point] == -1)
                 for point in range(self.size)]
        ranks = sorted(set(below))
        position = {point: ranks.index(below[point]) for point in range(self.size)}
        maps = {}
        for name, pairs in sorted(self.edges.items()):
            maps[name] = tuple(sorted({(position[a], position[b]) for a, b in pairs}))
        return Diagram(
            points=len(ranks),
            base=position[0],
            maps=maps,
            traces=tuple(tuple(position[point] for point in trace) for trace in self.traces))


def _compose(first, second):
    """Relation of a to c given rel(a, b) and rel(b, c), or None."""
    if first is None or second is None:
        return None
    if first == 0:
        return second
    if second == 0 or first == second:
        return first
    return None
