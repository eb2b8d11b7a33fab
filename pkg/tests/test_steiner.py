import pytest

from orientals import (Adc, Cell, Chain, atom, atom_face_formula, atom_table,
                       check_loop_free, check_strongly_loop_free, check_unitary,
                       compose, decompose_cell, dual_cell, enumerate_cells,
                       evaluate_expression, identity, is_identity, iterated_source,
                       iterated_target, j_dual, lambda_counit, oriental, pad, source,
                       standard_simplex_adc, target, truncate_intelligent, validate_cell)


def ch(degree, *terms):
    return Chain(degree, {t: 1 for t in terms})


@pytest.fixture(scope="module")
def O2():
    return oriental(2)


@pytest.fixture(scope="module")
def alpha(O2):
    return Cell([ch(0, (0,)), ch(1, (0, 2)), ch(2, (0, 1, 2))],
                [ch(0, (2,)), ch(1, (0, 1), (1, 2)), ch(2, (0, 1, 2))], O2)


def edge(K, a, b):
    return atom_table(K, (a, b))


def test_alpha_is_a_cell(O2, alpha):
    assert validate_cell(alpha).ok
    assert validate_cell(atom_table(O2, (0,))).ok


def test_broken_boundary_is_located(O2, alpha):
    bad = Cell(alpha.row0, alpha.row1[:1] + (ch(1, (0, 1)),) + alpha.row1[2:], O2)
    report = validate_cell(bad)
    assert ("(b) boundary", "row1[1]") in {(v.condition, v.where) for v in report}


def test_boundaries_of_alpha(O2, alpha):
    assert source(alpha) == edge(O2, 0, 2)
    assert target(alpha).top == ch(1, (0, 1), (1, 2))
    assert iterated_source(alpha, 0) == atom_table(O2, (0,))
    assert iterated_source(source(alpha), 0) == iterated_source(alpha, 0)
    assert iterated_target(target(alpha), 0) == iterated_target(alpha, 0)


def test_identities(O2, alpha):
    obj = atom_table(O2, (0,))
    assert identity(obj) == Cell([ch(0, (0,)), Chain.zero(1)], [ch(0, (0,)), Chain.zero(1)])
    assert not is_identity(alpha)
    assert is_identity(identity(alpha))
    assert not is_identity(obj)
    assert source(identity(alpha)) == alpha == target(identity(alpha))


def test_composition(O2, alpha):
    composite = compose(0, edge(O2, 1, 2), edge(O2, 0, 1))
    assert composite == Cell([ch(0, (0,)), ch(1, (0, 1), (1, 2))],
                             [ch(0, (2,)), ch(1, (0, 1), (1, 2))])
    assert composite == target(alpha)
    assert compose(1, alpha, identity(source(alpha))) == alpha
    x = edge(O2, 0, 1)
    assert compose(0, x, pad(iterated_source(x, 0), 1)) == x
    with pytest.raises(ValueError):
        compose(0, edge(O2, 0, 1), edge(O2, 1, 2))


def test_atoms(O2, alpha):
    table, is_cell = atom(O2, (0, 1, 2))
    assert table == alpha and is_cell
    assert atom_table(O2, (0, 1)) == Cell([ch(0, (0,)), ch(1, (0, 1))], [ch(0, (1,)), ch(1, (0, 1))])
    assert atom_table(O2, (1,)).dim == 0


def test_face_formula_examples():
    x = (0, 1, 3, 4, 6)
    assert atom_face_formula(x, 1, 0) == ch(1, (0, 6))
    assert atom_face_formula(x, 1, 1) == ch(1, (0, 1), (1, 3), (3, 4), (4, 6))
    assert atom_face_formula(x, 4, 0) == ch(4, x)


def test_unitary():
    assert check_unitary(standard_simplex_adc(4)).ok
    K = Adc([["x", "y", "z"], ["a"]], {(1, "a"): Chain(0, {"x": 1, "y": 1, "z": -1})},
            {"x": 1, "y": 1, "z": 1})
    report = check_unitary(K)
    assert [v.where for v in report] == ["a"]
    assert check_unitary(Adc([["p", "q"]], {}, {"p": 1, "q": 1})).ok


def test_two_cycle_is_found():
    K = Adc([["x", "y"], ["a", "b"]],
            {(1, "a"): Chain(0, {"y": 1, "x": -1}), (1, "b"): Chain(0, {"x": 1, "y": -1})},
            {"x": 1, "y": 1})
    report = check_strongly_loop_free(K)
    assert not report.ok and "cycle" in report[0].detail
    assert not check_loop_free(K).ok


def test_enumeration_counts(O2):
    cells, truncated = enumerate_cells(O2, 2, 3)
    assert not truncated
    assert [sum(1 for c in cells if c.dim == d) for d in range(3)] == [3, 7, 8]
    non_identity = {c.top for c in cells if c.dim == 1 and not is_identity(c)}
    assert non_identity == {ch(1, (0, 1)), ch(1, (1, 2)), ch(1, (0, 2)), ch(1, (0, 1), (1, 2))}
    assert enumerate_cells(Adc([], {}, {}), 2, 3) == ([], False)


def test_unbounded_enumeration_is_flagged():
    # a degree-1 cycle: d(a) = 0, so any multiple of a can be added
    K = Adc([["x"], ["a"]], {(1, "a"): Chain.zero(0)}, {"x": 1})
    cells, truncated = enumerate_cells(K, 1, 2)
    assert truncated
    assert len([c for c in cells if c.dim == 1]) == 3


def test_cap_is_reported_only_when_it_cuts():
    from orientals._solver import LinearSystem
    bounded = LinearSystem(["a"], [{"r": 1}])
    assert bounded.solve({"r": 3}, 2) == ([], True)
    assert bounded.solve({"r": 3}, 3) == ([{"a": 3}], False)
    assert bounded.solve({"r": -1}, 3) == ([], False)


def test_augmentation_two_has_no_objects():
    K = Adc([["p", "q"]], {}, {"p": 2, "q": 2})
    assert enumerate_cells(K, 0, 3) == ([], False)


def test_dual_cell(O2, alpha):
    op = j_dual(O2)
    y = dual_cell(alpha, None, op)
    assert y == Cell([ch(0, (2,)), ch(1, (0, 1), (1, 2)), ch(2, (0, 1, 2))],
                     [ch(0, (0,)), ch(1, (0, 2)), ch(2, (0, 1, 2))])
    assert validate_cell(y, op).ok
    assert dual_cell(alpha, set()) == alpha
    assert dual_cell(y, None, O2) == alpha


def test_lambda_counit(O2, alpha):
    assert lambda_counit(alpha) == ch(2, (0, 1, 2))
    assert lambda_counit(identity(alpha)).is_zero()
    assert lambda_counit(compose(0, edge(O2, 1, 2), edge(O2, 0, 1))) == ch(1, (0, 1), (1, 2))


def test_lambda_is_additive_and_vanishes_exactly_on_identities():
    cells = enumerate_cells(oriental(3), 3, 3).cells
    for x in cells:
        assert lambda_counit(x).is_zero() == is_identity(x) or x.dim == 0
        for y in cells:
            if x.dim == y.dim:
                for j in range(x.dim):
                    try:
                        xy = compose(j, x, y)
                    except ValueError:
                        continue
                    assert lambda_counit(xy) == lambda_counit(x) + lambda_counit(y)


def test_truncation_merges_through_alpha(O2, alpha):
    tau = truncate_intelligent(enumerate_cells(O2, 2, 3), 1)
    merged = tau.class_of[source(alpha)]
    assert tau.class_of[target(alpha)] == merged
    assert len(tau.classes) == 6
    assert tau.is_well_defined()


def test_truncation_needs_complete_data(O2):
    with pytest.raises(ValueError):
        truncate_intelligent(([], True), 1)


def test_truncation_without_higher_cells_is_discrete():
    K = Adc([["p", "q"]], {}, {"p": 1, "q": 1})
    tau = truncate_intelligent(enumerate_cells(K, 1, 3), 0)
    assert len(tau.classes) == 2


def test_decomposition(O2, alpha):
    composite = compose(0, edge(O2, 1, 2), edge(O2, 0, 1))
    tree = decompose_cell(composite)
    assert tree["op"] == "compose" and tree["j"] == 0
    assert evaluate_expression(O2, tree) == composite
    assert decompose_cell(alpha) == {"atom": "(0,1,2)", "degree": 2}
    obj = atom_table(O2, (0,))
    assert decompose_cell(identity(obj))["op"] == "identity"


def test_every_cell_of_O3_decomposes():
    K = oriental(3)
    for x in enumerate_cells(K, 3, 3).cells:
        tree = decompose_cell(x, budget=6)
        assert tree is not None, x
        assert evaluate_expression(K, tree) == x
