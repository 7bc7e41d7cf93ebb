from semifield.constants import Budget
from semifield.corpus import generate_corpus
from semifield.data import BudgetExceeded
from semifield.data import SignatureError
from semifield.models import FiniteMonoid
from semifield.models import algebra_from_spec
from semifield.models import boolean_zero_semifield
from semifield.models import empirical_threshold
from semifield.models import endo_monoid_algebra
from semifield.models import flat_extension
from semifield.models import holds_at
from semifield.models import holds_finite
from semifield.models import holds_quasi
from semifield.models import holds_quasi_Z
from semifield.models import holds_quasi_Zn
from semifield.models import is_cancellative
from semifield.models import laws_failing
from semifield.models import monoid_catalog
from semifield.models import nfb_witness
from semifield.terms import simple_from_statement
from semifield.translate import is_left_regular
from semifield.translate import to_quasiequation
from semifield.tree import parse
from semifield.tree import parse_quasi
from sympy import primerange
import itertools
import pytest


@pytest.fixture
def catalog():
    return monoid_catalog()


def test_flat_extension():
    flat = flat_extension(FiniteMonoid.cyclic(2))
    assert flat.names == ('e', 'a', 'top')
    e, a, top = range(3)
    assert flat.join[e][a] == top
    assert flat.mul[a][a] == e
    assert flat.mul[a][top] == flat.mul[top][e] == top
    assert len(flat_extension(FiniteMonoid.trivial())) == 2
    z3 = flat_extension(FiniteMonoid.cyclic(3))
    a = z3.element('a')
    assert z3.names[z3.mul[a][a]] == 'a^2'
    assert z3.join[a][a] == a


def test_flat_extension_is_a_semiring_iff_cancellative(catalog):
    for name, monoid in catalog.items():
        failing = laws_failing(flat_extension(monoid))
        assert (failing == []) == is_cancellative(monoid), name


def test_is_cancellative(catalog):
    assert is_cancellative(FiniteMonoid.cyclic(4))
    assert not is_cancellative(catalog['semilattice2'])
    assert not is_cancellative(catalog['nilpotent3'])
    assert is_cancellative(FiniteMonoid.trivial())


def test_is_cancellative_matches_two_sided_form(catalog):
    """c * a * d = c * b * d forces a = b."""
    for name, monoid in catalog.items():
        mul, size = monoid.mul, range(len(monoid))
        two_sided = all(a == b or mul[mul[c][a]][d] != mul[mul[c][b]][d]
                        for a, b, c, d in itertools.product(size, repeat=4))
        assert is_cancellative(monoid) == two_sided, name


def test_monoid_validation():
    with pytest.raises(ValueError):
        FiniteMonoid('bad', ['e', 'a'], [[0, 1], [1, 0]], unit=1)
    with pytest.raises(ValueError):
        FiniteMonoid('left', ['e', 'a', 'b'], [[0, 1, 2], [1, 1, 1], [2, 2, 1]])


def test_endo_monoid_algebra():
    assert len(endo_monoid_algebra(2)) == 3
    assert len(endo_monoid_algebra(3)) == 10
    for k in (2, 3):
        algebra = endo_monoid_algebra(k)
        assert laws_failing(algebra, 'distributive_lmonoid') == []
        assert algebra.names[algebra.unit] == ''.join(str(i) for i in range(k))
    o2 = endo_monoid_algebra(2)
    assert not holds_finite(o2, parse('x * y <= y * x', 'semiring'))[0]


def test_boolean_zero_semifield():
    algebra = boolean_zero_semifield()
    assert laws_failing(algebra, 'zero_semiring') == []
    assert laws_failing(flat_extension(FiniteMonoid.cyclic(2)), 'zero_semiring') == ['zero']
    with pytest.raises(ValueError):
        laws_failing(algebra, 'ring')


def test_algebra_from_spec():
    assert algebra_from_spec('flat-zn:5').name == 'flat-zn:5'
    assert len(algebra_from_spec('flat:nilpotent3')) == 4
    assert len(algebra_from_spec('endo:3')) == 10
    assert algebra_from_spec('bool0').zero == 0
    for spec in ('flat-zn:x', 'flat:missing', 'endo:9', 'cube'):
        with pytest.raises(ValueError):
            algebra_from_spec(spec)


def test_holds_finite():
    flat = algebra_from_spec('flat-zn:2')
    assert holds_finite(flat, parse('x <= e \\/ x^2', 'semiring')) == (False, {'x': 'a'})
    assert holds_finite(algebra_from_spec('flat-zn:3'), parse('x <= e \\/ x^2', 'semiring')) == (True, None)
    for spec in ('flat-zn:4', 'endo:2', 'bool0'):
        assert holds_finite(algebra_from_spec(spec), parse('e = e', 'monoid'))[0]
    assert holds_finite(flat, parse_quasi('e = x^2 => e = x', 'monoid')) == (False, {'x': 'a'})
    with pytest.raises(SignatureError):
        holds_finite(flat, parse('x /\\ y <= x', 'lgroup'))
    with pytest.raises(BudgetExceeded):
        holds_finite(algebra_from_spec('endo:4'), parse('x * y * z <= u', 'semiring'),
                     Budget(max_evaluations=1000))


def test_holds_at():
    algebra = boolean_zero_semifield()
    statement = parse('x <= y', 'semiring0')
    assert holds_at(algebra, statement, {'x': '0', 'y': 'e'})
    assert not holds_at(algebra, statement, {'x': 'e', 'y': '0'})


def test_quasiequations_in_cyclic_groups():
    q = parse_quasi('e = x^2 => e = x', 'monoid')
    assert not holds_quasi_Zn(q, 2)
    assert holds_quasi_Zn(q, 3)
    assert holds_quasi_Zn(parse_quasi('=> e = e', 'monoid'), 5)
    for n in range(1, 9):
        assert holds_quasi_Zn(q, n) == holds_quasi(FiniteMonoid.cyclic(n), q)[0]


def test_holds_quasi_Z():
    assert holds_quasi_Z(parse_quasi('e = x^2 => e = x', 'monoid'))
    assert not holds_quasi_Z(parse_quasi('=> e = x', 'monoid'))
    assert holds_quasi_Z(parse_quasi('x = y => x^2 = y^2', 'monoid'))
    assert not holds_quasi_Z(parse_quasi('x * y = e => x = e', 'monoid'))
    assert holds_quasi_Z(parse_quasi('x * y^-1 = e => y * x^-1 = e'))


def test_holds_quasi_needs_inverses():
    with pytest.raises(SignatureError):
        holds_quasi(monoid_catalog()['semilattice2'], parse_quasi('x^-1 = e => x = e'))


def test_empirical_threshold():
    assert empirical_threshold(parse_quasi('e = x^6 => e = x', 'monoid'), 50) == 3
    assert empirical_threshold(parse_quasi('e = x^35 => e = x', 'monoid'), 50) == 7
    assert empirical_threshold(parse_quasi('=> e = x', 'monoid'), 20) == 0


def test_integers_agree_with_large_cyclic_groups():
    window = [int(p) for p in primerange(37, 60)]
    for line in generate_corpus(61, count=30, variables=2, joinands=3, max_len=3):
        quasi = to_quasiequation(simple_from_statement(parse(line, 'semiring')))
        expected = holds_quasi_Z(quasi)
        assert all(holds_quasi_Zn(quasi, p) == expected for p in window), line


def test_flat_and_quasi_agree_on_small_inequations(catalog):
    """The flat extension satisfies a left-regular inequation exactly when
    the monoid satisfies its quasiequation."""
    for left, right in itertools.product(['x', 'x * y', 'e'], ['e \\/ x^2', 'x \\/ y', 'x * y \\/ y * x']):
        statement = parse('{} <= {}'.format(left, right), 'semiring')
        inequation = simple_from_statement(statement)
        if not is_left_regular(inequation):
            continue
        quasi = to_quasiequation(inequation)
        for name, monoid in catalog.items():
            assert holds_finite(flat_extension(monoid), statement)[0] == holds_quasi(monoid, quasi)[0], \
                (name, str(statement))


def test_nfb_witness():
    witness = nfb_witness(2)
    assert witness.assignment == {'x': 'a'}
    assert witness.algebra.name == 'flat-zn:2'
    assert not holds_at(witness.algebra, witness.inequation.to_statement(), witness.assignment)
    degenerate = nfb_witness(1)
    assert degenerate.degenerate and degenerate.assignment is None
    assert str(degenerate.inequation) == 'x <= e \\/ x'
    assert holds_finite(degenerate.algebra, degenerate.inequation.to_statement())[0]
    record = nfb_witness(5).to_dict()
    assert record == {'n': 5, 'inequation': 'x <= e \\/ x * x * x * x * x',
                      'algebra': 'flat-zn:5', 'assignment': {'x': 'a'}, 'degenerate': False}
