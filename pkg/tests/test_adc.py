import pytest

from orientals import (Adc, AdcHomotopy, Chain, compose_morphisms, constant_morphism,
                       identity_morphism, is_decent, j_dual, standard_simplex_adc,
                       validate_adc, validate_homotopy, validate_morphism)
from orientals.contraction import standard_contraction


def broken():
    # d(a) = b, d(b) = c: d d != 0
    return Adc([["c"], ["b"], ["a"]],
               {(2, "a"): Chain(1, {"b": 1}), (1, "b"): Chain(0, {"c": 1})}, {"c": 1})


def test_simplex_is_valid():
    assert validate_adc(standard_simplex_adc(2)).ok


def test_violation_is_reported_at_the_culprit():
    report = validate_adc(broken())
    wheres = {v.where for v in report}
    assert "a" in wheres
    assert any(v.condition == "aug d = 0" for v in report)


def test_empty_complex():
    assert validate_adc(Adc([], {}, {})).ok
    assert is_decent(Adc([], {}, {}))


def test_identity_and_composition_of_morphisms():
    K = standard_simplex_adc(3)
    one = identity_morphism(K)
    assert validate_morphism(one).ok
    const = constant_morphism(K, K, Chain.basis(0, (0,)))
    assert validate_morphism(compose_morphisms(one, const)).ok
    assert compose_morphisms(one, const) == const
    assert compose_morphisms(const, one) == const


def test_contraction_is_a_homotopy_and_negative_entries_are_caught():
    c = standard_contraction(2)
    h = c.as_homotopy()
    assert validate_homotopy(h).ok
    maps = dict(h.maps)
    maps[(0, (2,))] = Chain(1, {(0, 2): -1})
    bad = AdcHomotopy(h.start, h.end, maps)
    assert any(v.condition == "positivity" for v in validate_homotopy(bad))


def test_j_dual():
    K = standard_simplex_adc(1)
    assert j_dual(K, set()) == K
    op = j_dual(K)
    assert op.diff[(1, (0, 1))] == Chain(0, {(0,): 1, (1,): -1})
    assert j_dual(op) == K
    assert validate_adc(j_dual(standard_simplex_adc(3), {2})).ok


def test_decency():
    assert is_decent(standard_simplex_adc(4))
    assert not is_decent(Adc([["x"]], {}, {"x": -1}))


def test_constant_morphisms():
    K = standard_simplex_adc(2)
    for vertex in (0, 2):
        assert validate_morphism(constant_morphism(K, K, Chain.basis(0, (vertex,)))).ok
    with pytest.raises(ValueError):
        constant_morphism(K, K, Chain(0, {(0,): 1, (1,): 1}))
