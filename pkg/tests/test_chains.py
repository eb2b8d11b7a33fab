import pytest
from hypothesis import given, strategies as st

from orientals import Chain, add, leq, meet, neg, pos_neg_parts, standard_simplex_adc
from orientals.chains import format_name, parse_name


def c(degree, **_):
    return Chain(degree, _)


def simplex(*terms, degree=1):
    return Chain(degree, {t: 1 for t in terms})


def test_add_disjoint_supports():
    x = add(simplex((0, 1)), simplex((1, 2)))
    assert dict(x.items()) == {(0, 1): 1, (1, 2): 1}


def test_add_inverse_and_cancellation():
    x = simplex((0, 1))
    assert add(x, -1 * x).is_zero()
    assert (Chain(1, {(0, 2): 1, (0, 1): -1}) + x) == simplex((0, 2))
    assert neg(neg(x)) == x


def test_zero_coefficients_are_pruned():
    assert Chain(1, {(0, 1): 0}) == Chain.zero(1)
    assert len(Chain(1, {(0, 1): 0, (1, 2): 3})) == 1


def test_degree_mismatch():
    with pytest.raises(ValueError):
        add(Chain.basis(0, (0,)), Chain.basis(1, (0, 1)))
    with pytest.raises(ValueError):
        leq(Chain.basis(0, (0,)), Chain.basis(1, (0, 1)))


def test_leq_examples():
    assert leq(Chain.zero(1), simplex((0, 1)))
    assert not leq(simplex((0, 1)), simplex((0, 2)))
    assert leq(simplex((0, 1)), Chain(1, {(0, 1): 2, (1, 2): 1}))


def test_meet_examples():
    assert meet(simplex((0, 1), (1, 2)), simplex((1, 2), (2, 3))) == simplex((1, 2))
    assert meet(simplex((0, 1)), Chain.zero(1)).is_zero()
    assert meet(Chain(1, {(0, 1): 2}), simplex((0, 1))) == simplex((0, 1))
    with pytest.raises(ValueError):
        meet(-simplex((0, 1)), simplex((0, 1)))


def test_pos_neg_parts_of_a_boundary():
    K = standard_simplex_adc(2)
    d = K.boundary(Chain.basis(2, (0, 1, 2)))
    assert d == Chain(1, {(1, 2): 1, (0, 2): -1, (0, 1): 1})
    plus, minus = pos_neg_parts(d)
    assert plus == simplex((1, 2), (0, 1))
    assert minus == simplex((0, 2))
    assert pos_neg_parts(Chain.zero(0)) == (Chain.zero(0), Chain.zero(0))


def test_name_round_trip():
    assert parse_name("(0,1,2)") == (0, 1, 2)
    assert parse_name("a") == "a"
    assert format_name((3,)) == "(3)"


def test_json_round_trip():
    x = Chain(1, {(0, 1): 2, (1, 2): -1})
    assert Chain.from_json(x.to_json()) == x
    with pytest.raises(ValueError):
        Chain.from_json({"degree": 1, "coeffs": {"(0,1)": 1.5}})


names = st.sampled_from([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
chains = st.dictionaries(names, st.integers(-4, 4)).map(lambda d: Chain(1, d))
positive = st.dictionaries(names, st.integers(0, 4)).map(lambda d: Chain(1, d))


@given(chains)
def test_decomposition_is_unique(x):
    plus, minus = pos_neg_parts(x)
    assert plus - minus == x
    assert plus.is_nonnegative() and minus.is_nonnegative()
    assert meet(plus, minus).is_zero()


@given(chains, chains, chains)
def test_leq_is_a_partial_order(a, b, d):
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, d):
        assert leq(a, d)


@given(positive, positive, positive)
def test_meet_is_the_greatest_lower_bound(a, b, lower):
    m = meet(a, b)
    assert leq(m, a) and leq(m, b)
    if leq(lower, a) and leq(lower, b):
        assert leq(lower, m)


@given(chains, chains)
def test_group_laws(a, b):
    assert a + b == b + a
    assert (a + b) - b == a
    assert hash(a + b) == hash(b + a)
