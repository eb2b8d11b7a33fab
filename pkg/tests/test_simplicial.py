from itertools import product

import pytest

from orientals import (Poset, SimplicialComplex, base_order_preccurlyeq, chain_poset,
                       chnorm_of_complex, count_kappa_simplices, enumerate_cells,
                       is_identity, nerve_simplices, oriental, standard_simplex_adc,
                       validate_adc, xi)
from orientals.chains import Chain
from orientals import check_strongly_loop_free, check_unitary, is_decent


def test_simplex_bases():
    K = standard_simplex_adc(2)
    assert [len(names) for names in K.basis] == [3, 3, 1]
    assert K.diff[(2, (0, 1, 2))] == Chain(1, {(1, 2): 1, (0, 2): -1, (0, 1): 1})


def test_discrete_complex():
    E = Poset(["a", "b", "c"])
    C = SimplicialComplex(E)
    K = chnorm_of_complex(C)
    assert K.max_degree == 0 and len(K.basis[0]) == 3
    assert count_kappa_simplices(C, 1) == 3


def test_small_orientals():
    assert len(enumerate_cells(oriental(0), 0, 3).cells) == 1
    cells = enumerate_cells(oriental(1), 1, 3).cells
    assert sum(1 for c in cells if c.dim == 0) == 2
    assert sum(1 for c in cells if c.dim == 1 and not is_identity(c)) == 1


def test_xi():
    assert len(xi(chain_poset(2))) == 7
    assert xi(Poset(["a", "b"])) == [(0,), (1,)]
    E = Poset(["a", "b", "c"], [("a", "b")])
    named = sorted(tuple(E.elements[i] for i in S) for S in xi(E))
    assert named == [("a",), ("a", "b"), ("b",), ("c",)]


def test_poset_validation():
    with pytest.raises(ValueError):
        Poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        SimplicialComplex(Poset(["a", "b"]), [["a", "b"], ["a"], ["b"]])
    with pytest.raises(ValueError):
        SimplicialComplex(chain_poset(2), [[0, 1, 2], [0], [1], [2]])


def test_linear_extension_reorders_only_when_needed():
    assert Poset([0, 1, 2], [(0, 1)]).input_order_kept
    E = Poset(["top", "bottom"], [("bottom", "top")])
    assert E.elements == ["bottom", "top"]


def test_custom_faces():
    E = chain_poset(2)
    C = SimplicialComplex(E, [[0], [1], [2], [0, 1], [1, 2]])
    K = chnorm_of_complex(C)
    assert K.max_degree == 1 and validate_adc(K).ok
    assert check_strongly_loop_free(K).ok


def test_complexes_of_posets_have_good_bases():
    for E in (chain_poset(3), Poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])):
        K = chnorm_of_complex(SimplicialComplex(E))
        assert validate_adc(K).ok and is_decent(K)
        assert check_unitary(K).ok and check_strongly_loop_free(K).ok


def test_preccurlyeq_examples():
    assert base_order_preccurlyeq((0,), (0, 1, 2))
    assert base_order_preccurlyeq((0, 2), (0, 1))
    assert not base_order_preccurlyeq((0, 1), (0, 2))


def test_preccurlyeq_is_antisymmetric_and_extends_face_relations():
    names = [n for _, n in standard_simplex_adc(4).elements()]
    for a, b in product(names, repeat=2):
        if a != b:
            assert not (base_order_preccurlyeq(a, b) and base_order_preccurlyeq(b, a))
    for x in names:
        for k in range(len(x)):
            if len(x) == 1:
                continue
            face = x[:k] + x[k + 1:]
            if k % 2:
                assert base_order_preccurlyeq(face, x)
            else:
                assert base_order_preccurlyeq(x, face)


def brute_kappa(C, m):
    faces = set(C.faces)
    n = len(C.poset)
    return sum(1 for f in product(range(n), repeat=m + 1)
               if all(C.poset.le(a, b) for a, b in zip(f, f[1:]))
               and tuple(sorted(set(f))) in faces)


def test_kappa_counts():
    full1 = SimplicialComplex(chain_poset(1))
    assert count_kappa_simplices(full1, 1) == 3
    assert count_kappa_simplices(SimplicialComplex(chain_poset(2)), 2) == 10
    diamond = SimplicialComplex(Poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]))
    for C in (full1, diamond):
        for m in range(4):
            assert count_kappa_simplices(C, m) == brute_kappa(C, m)


def test_nerve():
    K = standard_simplex_adc(1)
    for n in range(4):
        found, truncated = nerve_simplices(K, n, 3)
        assert len(found) == n + 2 and not truncated
    point = standard_simplex_adc(0)
    assert [len(nerve_simplices(point, n, 3)[0]) for n in range(4)] == [1, 1, 1, 1]
    K2 = standard_simplex_adc(2)
    objects = [c for c in enumerate_cells(K2, 0, 3).cells]
    assert len(nerve_simplices(K2, 0, 3)[0]) == len(objects)
