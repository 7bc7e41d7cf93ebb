from semifield.constants import Budget
from semifield.corpus import generate_corpus
from semifield.data import BudgetExceeded
from semifield.data import SignatureError
from semifield.data import TranslationError
from semifield.data import Zero
from semifield.decide import decide_lgroup
from semifield.models import algebra_from_spec
from semifield.models import holds_finite
from semifield.terms import basic_from_statement
from semifield.terms import simple_from_statement
from semifield.terms import smallest_signature
from semifield.terms import term_size
from semifield.translate import efree_statement
from semifield.translate import efree_wrap
from semifield.translate import ell_to_basic
from semifield.translate import is_left_regular
from semifield.translate import is_right_regular
from semifield.translate import lattice_normal_form
from semifield.translate import right_regularize
from semifield.translate import star_sequence
from semifield.translate import star_translate
from semifield.translate import strip_e
from semifield.translate import to_quasiequation
from semifield.translate import to_simple
from semifield.translate import zero_simplify
from semifield.tree import parse
import pytest


def simple(text):
    return simple_from_statement(parse(text, 'semiring'))


def basic(text):
    return basic_from_statement(parse(text, 'lgroup'))


def rendered(items):
    return [str(item) for item in items]


def test_to_simple():
    assert rendered(to_simple(parse('x \\/ e = e', 'semiring'))) == ['x <= e', 'e <= e', 'e <= x \\/ e']
    assert rendered(to_simple(parse('e <= x * (y \\/ z)', 'semiring'))) == ['e <= x * y \\/ x * z']
    assert rendered(to_simple(parse('x <= x', 'semiring'))) == ['x <= x']


def test_to_simple_budget():
    statement = parse('(x \\/ y) * (x \\/ y) * (x \\/ y) <= x', 'semiring')
    assert len(to_simple(statement)) == 8
    with pytest.raises(BudgetExceeded) as info:
        to_simple(statement, Budget(max_terms=4))
    assert info.value.resource == 'terms'


@pytest.mark.parametrize('spec', ['flat-zn:3', 'flat:z2xz3', 'endo:3', 'bool0'])
def test_to_simple_preserves_truth(spec):
    algebra = algebra_from_spec(spec)
    for line in generate_corpus(11, count=25, variables=2, max_len=3, shape='equation'):
        statement = parse(line, 'semiring')
        whole = holds_finite(algebra, statement)[0]
        parts = all(holds_finite(algebra, part.to_statement())[0] for part in to_simple(statement))
        assert whole == parts, line


def test_regularity():
    assert is_left_regular(simple('x <= e \\/ x^2'))
    assert not is_left_regular(simple('x * y <= y'))
    assert is_left_regular(simple('e <= x'))
    assert is_right_regular(simple('x * y <= y'))
    assert not is_right_regular(simple('x <= x \\/ y'))


def test_right_regularize():
    assert str(right_regularize(simple('x <= x \\/ y'))) == 'x <= x'
    assert right_regularize(simple('x <= y')) is None
    inequation = simple('x <= e \\/ x^2')
    assert right_regularize(inequation) == inequation
    for line in generate_corpus(5, count=40, variables=3):
        regular = right_regularize(simple(line))
        assert regular is None or is_right_regular(regular)


def test_to_quasiequation():
    assert str(to_quasiequation(simple('x <= e \\/ x^2'))) == 'e = x * x => e = x'
    assert str(to_quasiequation(simple('x <= y'))) == '=> y = x'
    assert str(to_quasiequation(simple('e <= x \\/ y'))) == 'x = y => x = e'


def test_star_translate():
    assert star_translate(basic('x <= y \\/ z')) == simple('x <= y \\/ z')
    assert str(star_translate(basic('e <= x^-1'))) == 'x * _f1 <= x * _f1 * _f1 \\/ e'
    assert str(star_translate(basic('e <= x * y^-1'))) == 'y * _f1 <= y * _f1 * x * _f1 \\/ e'
    assert str(star_translate(basic('e <= x^-1'), literal_joinand=True)) == 'x * _f1 <= x * _f1 * x \\/ e'


def test_star_sequence_removes_one_inverse_per_step():
    for line in generate_corpus(2, count=30, variables=2, max_len=4, signature='lgroup', shape='basic'):
        steps = list(star_sequence(basic(line)))
        assert steps[0] == basic(line)
        counts = [step.inverse_count() for step in steps]
        assert counts == list(range(counts[0], -1, -1))


@pytest.mark.parametrize('text', [
    'e <= x^-1',
    'e <= x \\/ x^-1',
    'x <= x^-1 \\/ y',
    'e <= x^-1 \\/ y^-1',
])
def test_star_translate_preserves_verdicts(text):
    inequation = basic(text)
    assert decide_lgroup(inequation).status == decide_lgroup(star_translate(inequation)).status


def test_ell_to_basic():
    assert rendered(ell_to_basic(parse('e <= x /\\ y', 'lgroup'))) == ['e <= x * _f1 \\/ y * _f1^-1']
    assert rendered(ell_to_basic(parse('e <= x /\\ y', 'lgroup'), literal_last_block=True)) == \
        ['e <= x * _f1 \\/ y * _f1^-1 * _f2']
    assert rendered(ell_to_basic(parse('x <= y', 'lgroup'))) == ['x <= y']
    assert rendered(ell_to_basic(parse('x = y', 'lgroup'))) == ['x <= y', 'y <= x']


@pytest.mark.parametrize('text,status', [
    ('e <= x /\\ y', 'invalid'),
    ('x /\\ y <= x', 'valid'),
    ('x <= x \\/ y', 'valid'),
    ('e <= (e \\/ x) /\\ (e \\/ y)', 'valid'),
    ('(x \\/ y)^-1 = x^-1 /\\ y^-1', 'valid'),
    ('x * (y /\\ z) = x * y /\\ x * z', 'valid'),
    ('x \\/ y <= x', 'invalid'),
])
def test_ell_to_basic_verdicts(text, status):
    verdicts = [decide_lgroup(item) for item in ell_to_basic(parse(text, 'lgroup'))]
    assert ('valid' if all(verdict.valid for verdict in verdicts) else 'invalid') == status


def test_literal_last_block_is_stronger():
    """The trailing fresh variable turns a valid meet into an invalid one."""
    statement = parse('e <= (e \\/ x) /\\ (e \\/ y)', 'lgroup')
    literal, = ell_to_basic(statement, literal_last_block=True)
    assert not decide_lgroup(literal).valid


def test_ell_to_basic_size_bound():
    for line in generate_corpus(4, count=100, variables=3, joinands=3, max_len=6,
                                signature='lgroup', shape='shaped'):
        statement = parse(line, 'lgroup')
        size = term_size(statement)
        for item in ell_to_basic(statement):
            assert term_size(item) <= 2 * size ** 2, line


def test_lattice_normal_form():
    assert rendered(lattice_normal_form(parse('(x \\/ y)^-1 * z', 'lgroup'))) == ['(x^-1 * z, y^-1 * z)']
    with pytest.raises(BudgetExceeded):
        lattice_normal_form(parse('(x \\/ y) * (x \\/ z) * (y \\/ z)', 'lgroup'), Budget(max_terms=4))


def test_strip_e_and_efree_wrap():
    assert str(strip_e(parse('x * e * y', 'semiring'))) == 'x * y'
    assert strip_e(parse('e * e', 'semiring')) is None
    with pytest.raises(TranslationError):
        strip_e(parse('x \\/ e', 'semiring'))
    assert str(efree_wrap(simple('x <= e \\/ x^2'))) == '_f1 * x <= _f1 \\/ _f1 * x * x'
    statement = efree_statement(simple('e <= x'))
    assert str(statement) == '_f1 <= _f1 * x'
    assert smallest_signature(statement) == 'semiring_efree'


def test_efree_wrap_preserves_verdicts():
    for line in generate_corpus(6, count=50, variables=2, joinands=2, max_len=2):
        inequation = simple(line)
        assert decide_lgroup(inequation).status == decide_lgroup(efree_wrap(inequation)).status, line


def test_zero_simplify():
    assert str(zero_simplify(parse('(x * 0) \\/ y', 'semiring0'))) == 'y'
    assert zero_simplify(parse('0 \\/ 0', 'semiring0')) == Zero()
    assert str(zero_simplify(parse('(0 \\/ e) * x', 'semiring0'))) == 'x'
    with pytest.raises(SignatureError):
        zero_simplify(parse('x /\\ y', 'lgroup'))


def test_zero_simplify_shrinks_to_a_fixpoint():
    for line in generate_corpus(8, count=100, variables=2, signature='semiring0'):
        statement = parse(line, 'semiring0')
        for side in (statement.lhs, statement.rhs):
            once = zero_simplify(side)
            assert term_size(once) <= term_size(side)
            assert zero_simplify(once) == once
            assert isinstance(once, Zero) or 'zero' not in once.symbols()
