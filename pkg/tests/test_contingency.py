import itertools

import pytest

from symkron.combinat import enumerate_compositions, enumerate_partitions, multinomial
from symkron.contingency import (
    ContingencyMatrix,
    contingency_matrices,
    decompose_permutation_tensor,
    hom_dimension,
)
from symkron.errors import DegreeMismatchError

from oracles import brute_contingency


def test_worked_example_matrices_and_order():
    mats = contingency_matrices((3, 1), (2, 1, 1))
    assert [m.rows for m in mats] == [
        ((2, 1, 0), (0, 0, 1)),
        ((2, 0, 1), (0, 1, 0)),
        ((1, 1, 1), (1, 0, 0)),
    ]
    assert all(m.row_sums == (3, 1) and m.col_sums == (2, 1, 1) for m in mats)


def test_single_row_and_permutation_matrices():
    assert [m.rows for m in contingency_matrices((4,), (2, 1, 1))] == [((2, 1, 1),)]
    assert [m.rows for m in contingency_matrices((1, 1), (1, 1))] == [
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
    ]


def test_validation_and_errors():
    with pytest.raises(DegreeMismatchError):
        contingency_matrices((2, 1), (1, 1))
    with pytest.raises(ValueError):
        ContingencyMatrix(((1, 0), (0, 0)), (1, 1), (1, 0))


def test_matrix_helpers():
    mat = contingency_matrices((3, 1), (2, 1, 1))[0]
    assert mat.as_composition() == (2, 1, 0, 0, 0, 1)
    t = mat.transpose()
    assert t.rows == ((2, 0), (1, 0), (0, 1))
    assert t.row_sums == (2, 1, 1) and t.col_sums == (3, 1)
    assert mat.to_json_dict() == {
        "rows": [[2, 1, 0], [0, 0, 1]],
        "row_sums": [3, 1],
        "col_sums": [2, 1, 1],
    }


def test_enumeration_matches_brute_force():
    for d in range(5):
        margins = [c for n in range(1, 4) for c in enumerate_compositions(n, d)]
        for lam, mu in itertools.product(margins, repeat=2):
            got = {m.rows for m in contingency_matrices(lam, mu)}
            assert got == brute_contingency(lam, mu)


def test_enumeration_order_is_row_major_descending():
    for lam, mu in [((2, 2), (2, 1, 1)), ((3, 2, 1), (2, 2, 2)), ((1, 1, 1), (1, 1, 1))]:
        flats = [m.as_composition() for m in contingency_matrices(lam, mu)]
        assert flats == sorted(flats, reverse=True)
        assert len(set(flats)) == len(flats)


def test_transpose_bijection():
    for d in range(7):
        margins = [c for n in range(1, 5) for c in enumerate_compositions(n, d)]
        for lam, mu in itertools.combinations_with_replacement(margins, 2):
            direct = {m.rows for m in contingency_matrices(mu, lam)}
            flipped = {m.transpose().rows for m in contingency_matrices(lam, mu)}
            assert direct == flipped


def test_zero_margins_keep_zero_rows():
    mats = contingency_matrices((2, 0, 1), (1, 1, 1))
    assert all(m.rows[1] == (0, 0, 0) for m in mats)
    assert contingency_matrices((), ())[0].rows == ()


def test_decompose_examples():
    assert decompose_permutation_tensor((3, 1), (2, 1, 1)) == {
        (2, 1, 1): 2,
        (1, 1, 1, 1): 1,
    }
    assert decompose_permutation_tensor((5,), (3, 2)) == {(3, 2): 1}
    assert decompose_permutation_tensor((1, 1), (1, 1)) == {(1, 1): 2}
    assert decompose_permutation_tensor((), ()) == {(): 1}


def test_decompose_symmetry_and_margin_sorting():
    for d in range(6):
        for lam in enumerate_partitions(d):
            for mu in enumerate_partitions(d):
                assert decompose_permutation_tensor(lam, mu) == decompose_permutation_tensor(mu, lam)
    # zero parts and ordering of the margins are irrelevant
    assert decompose_permutation_tensor((2, 0, 1, 0, 1, 0), (1, 3)) == decompose_permutation_tensor(
        (2, 1, 1), (3, 1)
    )
    assert decompose_permutation_tensor((1, 2), (0, 3)) == decompose_permutation_tensor((2, 1), (3,))
    from symkron.combinat import sort_to_partition

    for d in range(5):
        margins = [c for n in range(1, 4) for c in enumerate_compositions(n, d)]
        for lam, mu in itertools.product(margins, repeat=2):
            assert decompose_permutation_tensor(lam, mu) == decompose_permutation_tensor(
                sort_to_partition(lam), sort_to_partition(mu)
            )


def test_dimension_count_is_conserved():
    for d in range(8):
        for lam in enumerate_partitions(d):
            for mu in enumerate_partitions(d):
                pieces = contingency_matrices(lam, mu)
                total = sum(multinomial(d, m.as_composition()) for m in pieces)
                assert total == multinomial(d, lam) * multinomial(d, mu)


def test_hom_dimension():
    assert hom_dimension((3, 1), (2, 1, 1)) == 3
    assert hom_dimension((4,), (4,)) == 1
    assert hom_dimension((1, 1), (1, 1)) == 2
    with pytest.raises(DegreeMismatchError):
        hom_dimension((2,), (1,))
    for d in range(7):
        for lam in enumerate_partitions(d):
            for mu in enumerate_partitions(d):
                assert hom_dimension(lam, mu) == len(contingency_matrices(lam, mu))
    # compositions with zero parts keep their zero rows and columns
    assert hom_dimension((2, 0, 2), (1, 1, 1, 1)) == len(
        contingency_matrices((2, 0, 2), (1, 1, 1, 1))
    )
