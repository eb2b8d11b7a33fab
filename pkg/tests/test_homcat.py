import pytest

from orientals import Chain, Poset, chain_poset, enumerate_hom, oriental, validate_cell
from orientals.homcat import (check_one_cells, compare_truncation2, merge,
                              one_cell_of_chain, one_cells_of_poset_oriental,
                              restrict_hom_iso, split_cell, truncation2_of_poset_oriental,
                              two_cell_witness)
from orientals.steiner import atom_table, compose, identity, is_identity


def test_one_cells():
    E = chain_poset(3)
    assert len(one_cells_of_poset_oriental(E)) == 15
    assert check_one_cells(E).ok
    (S, cell), = [p for p in one_cells_of_poset_oriental(chain_poset(0))]
    assert S == (0,) and is_identity(cell)


def test_two_cell_witnesses():
    E = chain_poset(2)
    K = oriental(2)
    assert two_cell_witness((0, 2), (0, 1, 2), E, K) == atom_table(K, (0, 1, 2))
    assert two_cell_witness((0, 1, 2), (0, 1, 2), E, K) == identity(one_cell_of_chain((0, 1, 2), K))
    assert two_cell_witness((0, 1, 2), (0, 2), E, K) is None
    with pytest.raises(ValueError):
        two_cell_witness((0, 1), (0, 2), E, K)
    E3, K3 = chain_poset(3), oriental(3)
    w = two_cell_witness((0, 3), (0, 1, 2, 3), E3, K3)
    assert validate_cell(w, K3).ok
    assert w.row0[1] == Chain.basis(1, (0, 3))


def test_restriction():
    E = Poset([0, 1, 2, "junk"], [(0, 1), (1, 2)])
    a = one_cell_of_chain((0, 2))
    b = one_cell_of_chain((0, 1, 2))
    report = restrict_hom_iso(E, (0, 1, 2), a, b)
    assert report.ok and report.counts[0] == report.counts[1] > 0
    two = restrict_hom_iso(chain_poset(1), (0, 1), atom_table(oriental(1), (0,)),
                           atom_table(oriental(1), (1,)))
    assert two.ok and two.counts == (2, 2)


def test_restriction_in_a_bigger_chain():
    E = chain_poset(4)
    a = one_cell_of_chain((0, 3))
    b = one_cell_of_chain((0, 1, 2, 3))
    assert restrict_hom_iso(E, (0, 1, 2, 3), a, b).ok


def test_split_examples():
    K = oriental(3)
    alpha = atom_table(K, (0, 1, 2))
    x = compose(0, one_cell_of_chain((2, 3), K), alpha)
    left, right = split_cell(x, (0, 2, 3))
    assert left == alpha
    assert right == identity(one_cell_of_chain((2, 3), K))
    b = identity(one_cell_of_chain((0, 1, 2), oriental(2)))
    assert all(is_identity(f) for f in split_cell(b, (0, 1, 2)))
    with pytest.raises(ValueError):
        split_cell(alpha, (0, 1, 2))


def test_split_merge_round_trip_for_every_cut():
    K = oriental(4)
    path = one_cell_of_chain(range(5), K)
    for middle in [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]:
        cuts = (0,) + middle + (4,)
        cells, truncated = enumerate_hom(K, one_cell_of_chain(cuts, K), path, 2, 3)
        assert not truncated
        for x in cells:
            factors = split_cell(x, cuts)
            assert merge(factors) == x
            assert all(validate_cell(f, K).ok for f in factors)


def test_truncation2_direct():
    two = truncation2_of_poset_oriental(chain_poset(1))
    assert two.hom(0, 1) == [(0, 1)]
    two = truncation2_of_poset_oriental(chain_poset(2))
    assert two.hom(0, 2) == [(0, 2), (0, 1, 2)]
    assert ((0, 2), (0, 1, 2)) in two.two_cells()
    assert len(truncation2_of_poset_oriental(chain_poset(3)).hom(0, 3)) == 4
    data = truncation2_of_poset_oriental(chain_poset(2)).to_json()
    assert data["objects"] == [0, 1, 2]


def test_truncation2_matches_enumeration():
    assert compare_truncation2(Poset("abc", [("a", "b")])).ok
    assert compare_truncation2(chain_poset(3)).ok
