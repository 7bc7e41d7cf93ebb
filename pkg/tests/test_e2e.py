"""End-to-end suites: the flat-extension witnesses, the translations and
the decision procedures checked against each other and against concrete
models."""

from semifield.constants import Budget
from semifield.corpus import generate_corpus
from semifield.corpus import random_group_word
from semifield.data import BasicInequation
from semifield.data import BudgetExceeded
from semifield.data import GroupWord
from semifield.data import Inv
from semifield.data import Join
from semifield.data import Meet
from semifield.data import Mul
from semifield.data import MonoidWord
from semifield.data import Statement
from semifield.data import Unit
from semifield.data import Var
from semifield.data import inv
from semifield.data import mul
from semifield.decide import decide_lgroup
from semifield.decide import decide_statement
from semifield.decide import decide_tropical
from semifield.decide import verify_diagram
from semifield.decide import verify_verdict
from semifield.models import FiniteMonoid
from semifield.models import algebra_from_spec
from semifield.models import boolean_zero_semifield
from semifield.models import endo_monoid_algebra
from semifield.models import flat_extension
from semifield.models import holds_finite
from semifield.models import holds_quasi
from semifield.models import monoid_catalog
from semifield.models import nfb_witness
from semifield.orders import group_right_order_exists
from semifield.orders import monoid_right_order_exists
from semifield.orders import rank2_embed
from semifield.terms import FreshNames
from semifield.terms import basic_from_statement
from semifield.terms import simple_from_statement
from semifield.terms import term_size
from semifield.translate import efree_wrap
from semifield.translate import ell_to_basic
from semifield.translate import lattice_normal_form
from semifield.translate import right_regularize
from semifield.translate import split_meets
from semifield.translate import star_translate
from semifield.translate import to_quasiequation
from semifield.translate import zero_simplify
from semifield.tree import parse
from sympy import primerange
import itertools
import random
import pytest


@pytest.fixture
def tight():
    return Budget(max_nodes=20000)


def audited(verdict):
    assert verify_verdict(verdict), str(verdict.refuted)
    return verdict


def in_integers(term, values):
    """Value of an l-group term in <Z, max, min, +, 0>."""
    if isinstance(term, Var):
        return values[term.name]
    if isinstance(term, Unit):
        return 0
    if isinstance(term, Inv):
        return -in_integers(term.arg, values)
    args = [in_integers(arg, values) for arg in term.args]
    return {Mul: sum, Join: max, Meet: min}[type(term)](args)


def holds_in_integers(statement, radius=2):
    names = statement.variables()
    for point in itertools.product(range(-radius, radius + 1), repeat=len(names)):
        values = dict(zip(names, point))
        left, right = in_integers(statement.lhs, values), in_integers(statement.rhs, values)
        if left > right or (statement.relation == '=' and left != right):
            return False
    return True


def test_witness_family():
    for n in range(2, 7):
        statement = parse('x <= e \\/ x^{}'.format(n), 'semiring')
        assert decide_statement(statement, 'semifield').valid
        assert holds_finite(flat_extension(FiniteMonoid.cyclic(n)), statement) == (False, {'x': 'a'})
        assert str(nfb_witness(n).inequation) == str(statement)


def test_prime_separation():
    primes = list(primerange(2, 14))
    for p, q in itertools.permutations(primes, 2):
        flat = algebra_from_spec('flat-zn:{}'.format(p))
        assert holds_finite(flat, parse('x <= e \\/ x^{}'.format(q), 'semiring'))[0], (p, q)
        assert not holds_finite(flat, parse('x <= e \\/ x^{}'.format(p), 'semiring'))[0], p


def test_flat_extension_matches_quasiequation():
    """A flat extension satisfies a left-regular inequation exactly when the
    monoid satisfies the attached quasiequation."""
    catalog = monoid_catalog()
    flats = {name: flat_extension(monoid) for name, monoid in catalog.items()}
    lines = generate_corpus(17, count=200, variables=3, joinands=3, max_len=4, shape='left_regular')
    for line in lines:
        statement = parse(line, 'semiring')
        quasi = to_quasiequation(simple_from_statement(statement))
        for name, monoid in catalog.items():
            assert holds_finite(flats[name], statement)[0] == holds_quasi(monoid, quasi)[0], (name, line)


def test_star_translation_size():
    for line in generate_corpus(19, count=100, variables=3, joinands=3, max_len=6,
                                signature='lgroup', shape='basic'):
        inequation = basic_from_statement(parse(line, 'lgroup'))
        size = term_size(inequation)
        assert term_size(star_translate(inequation)) <= 7 * size ** 2 + size, line


def test_star_translation_preserves_verdicts(tight):
    lines = generate_corpus(19, count=100, variables=3, joinands=3, max_len=6, signature='lgroup', shape='basic')
    excluded = 0
    for line in lines:
        inequation = basic_from_statement(parse(line, 'lgroup'))
        try:
            before = audited(decide_lgroup(inequation, tight))
            after = audited(decide_lgroup(star_translate(inequation), tight))
        except BudgetExceeded:
            excluded += 1
            continue
        assert before.status == after.status, line
    assert excluded <= len(lines) // 10


def test_meet_splitting(tight):
    for line in generate_corpus(23, count=100, variables=3, joinands=3, max_len=6,
                                signature='lgroup', shape='shaped'):
        statement = parse(line, 'lgroup')
        size = term_size(statement)
        assert all(term_size(item) <= 2 * size ** 2 for item in ell_to_basic(statement)), line
    lines = generate_corpus(29, count=30, variables=2, joinands=2, max_len=2, signature='lgroup', shape='shaped')
    decided = 0
    for line in lines:
        statement = parse(line, 'lgroup')
        try:
            verdict = audited(decide_statement(statement, 'lgroup', tight))
        except BudgetExceeded:
            continue
        decided += 1
        if verdict.valid:
            assert holds_in_integers(statement), line
    assert decided >= 2 * len(lines) // 3


def test_known_verdicts():
    assert decide_statement(parse('e <= x \\/ x^-1', 'lgroup'), 'lgroup').valid
    refuted = audited(decide_statement(parse('e <= x', 'lgroup'), 'lgroup'))
    assert refuted.status == 'invalid'
    assert verify_diagram(refuted.certificate, refuted.refuted)
    assert audited(decide_statement(parse('e <= x /\\ y', 'lgroup'), 'lgroup')).status == 'invalid'


def test_semifield_validity_transfers():
    """Valid semifield statements hold in the tropical semifield and in the
    endomorphism algebras of the two- and three-element chains."""
    chains = [endo_monoid_algebra(2), endo_monoid_algebra(3)]
    valid = 0
    for line in generate_corpus(31, count=60, variables=2, joinands=2, max_len=2):
        statement = parse(line, 'semiring')
        verdict = audited(decide_statement(statement, 'semifield'))
        if not verdict.valid:
            continue
        valid += 1
        assert decide_tropical(simple_from_statement(statement)).valid, line
        for algebra in chains:
            assert holds_finite(algebra, statement)[0], (algebra.name, line)
    assert valid > 0


def test_known_orders():
    x = GroupWord((('x', 1),))
    assert group_right_order_exists([x]).exists
    assert not group_right_order_exists([x, x.inverse()]).exists
    xy, yx = MonoidWord(('x', 'y')), MonoidWord(('y', 'x'))
    assert monoid_right_order_exists([(xy, yx)]).exists
    assert not monoid_right_order_exists([(xy, xy)]).exists


def test_rank_two_embedding_preserves_orders(tight):
    rng = random.Random(37)
    names = ['y1', 'y2', 'y3']
    compared = 0
    for _ in range(60):
        words = [random_group_word(rng, names[:rng.randint(1, 3)], 2, 1) for _ in range(rng.randint(1, 2))]
        try:
            direct = group_right_order_exists(words, tight)
            embedded = group_right_order_exists(rank2_embed(words), tight)
        except BudgetExceeded:
            continue
        compared += 1
        assert direct.exists == embedded.exists, [str(word) for word in words]
        for verdict in (direct, embedded):
            if verdict.exists:
                assert verify_diagram(verdict.certificate, verdict.refuted)
    assert compared >= 30


def test_zero_simplify_is_sound():
    zero = boolean_zero_semifield()
    for line in generate_corpus(41, count=100, variables=2, signature='semiring0'):
        statement = parse(line, 'semiring0')
        for side in (statement.lhs, statement.rhs):
            once = zero_simplify(side)
            assert term_size(once) <= term_size(side)
            assert zero_simplify(once) == once
            assert holds_finite(zero, Statement('=', side, once, 'semiring0'))[0], line


def test_zero_pipeline_matches_right_regularized():
    zero = boolean_zero_semifield()
    for line in generate_corpus(43, count=100, variables=2, joinands=2, max_len=2):
        regular = right_regularize(simple_from_statement(parse(line, 'semiring')))
        expected = 'invalid' if regular is None else decide_lgroup(regular).status
        statement = parse(line, 'semiring0')
        verdict = audited(decide_statement(statement, 'semifield0'))
        assert verdict.status == expected, line
        if verdict.valid:
            assert holds_finite(zero, statement)[0], line


def test_efree_wrap_preserves_verdicts():
    for line in generate_corpus(47, count=50, variables=2, joinands=2, max_len=2):
        inequation = simple_from_statement(parse(line, 'semiring'))
        before = audited(decide_lgroup(inequation))
        after = audited(decide_lgroup(efree_wrap(inequation)))
        assert before.status == after.status, line


def normal_form_basics(statement):
    """Basic inequations through the lattice normal form of rhs * lhs^-1,
    skipping the meet-of-joins splitting."""
    fresh = FreshNames(statement.variables())
    directions = [(statement.lhs, statement.rhs)]
    if statement.relation == '=':
        directions.append((statement.rhs, statement.lhs))
    basics = []
    for lhs, rhs in directions:
        blocks = [[[word] for word in conjunct] for conjunct in lattice_normal_form(mul(rhs, inv(lhs)))]
        basics.append(BasicInequation(MonoidWord(()), tuple(split_meets(blocks, fresh))))
    return basics


def test_splitting_agrees_with_normal_form(tight):
    lines = generate_corpus(23, count=100, variables=2, joinands=2, max_len=2, signature='lgroup', shape='shaped')
    decided = 0
    for line in lines:
        statement = parse(line, 'lgroup')
        try:
            split = all(audited(decide_lgroup(basic, tight)).valid for basic in ell_to_basic(statement))
            normal = all(audited(decide_lgroup(basic, tight)).valid for basic in normal_form_basics(statement))
        except BudgetExceeded:
            continue
        decided += 1
        assert split == normal, line
    assert decided >= 2 * len(lines) // 3
