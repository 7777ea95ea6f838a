import pytest
from hypothesis import given, settings, strategies as st

from flagrpp.insertion import (
    Biword, BiwordError, biword_to_matrix, burge, burge_inverse, column_insert,
    insertion_tableau, is_flag_compatible, knuth_class, knuth_equivalent, matrix_to_biword, transpose,
)
from flagrpp.shapes import Ssyt

A_2X3 = ((1, 2, 1), (0, 1, 3))
B_3X3 = ((1, 3, 1), (0, 1, 1), (0, 0, 2))

matrices = st.integers(1, 3).flatmap(
    lambda m: st.integers(1, 3).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=m, max_size=m)))
words = st.lists(st.integers(1, 3), max_size=7).map(tuple)


def test_matrix_to_biword_examples():
    w = matrix_to_biword(A_2X3)
    assert (w.top, w.bottom) == ((2, 2, 2, 2, 1, 1, 1, 1), (2, 3, 3, 3, 1, 2, 2, 3))
    w = matrix_to_biword(B_3X3)
    assert (w.top, w.bottom) == ((3, 3, 2, 2, 1, 1, 1, 1, 1), (3, 3, 2, 3, 1, 2, 2, 2, 3))
    assert matrix_to_biword(((0, 0),)).top == ()


def test_biword_to_matrix_examples():
    assert biword_to_matrix(matrix_to_biword(A_2X3), 2, 3) == A_2X3
    assert biword_to_matrix(Biword((), ()), 1, 1) == ((0,),)
    assert biword_to_matrix(Biword((2, 1), (2, 1)), 2, 2) == ((1, 0), (0, 1))


def test_biword_rejects_bad_order():
    with pytest.raises(BiwordError):
        Biword((1, 2), (1, 1))
    with pytest.raises(BiwordError):
        Biword((1, 1), (2, 1))


def test_transpose():
    assert transpose(((1, 2), (0, 1))) == ((1, 0), (2, 1))
    assert transpose(A_2X3) == ((1, 0), (2, 1), (1, 3))
    sym = ((1, 2), (2, 0))
    assert transpose(sym) == sym


def test_flag_compatibility():
    top, bottom = (1, 1, 1, 1, 1, 2, 2, 3, 3), (3, 2, 2, 2, 1, 3, 2, 3, 3)
    assert is_flag_compatible(top, bottom, (1, 2, 3))
    assert not is_flag_compatible(top, bottom, (1, 1, 3))
    assert is_flag_compatible((), (), (1,))


def test_column_insert_examples():
    assert column_insert(Ssyt(()), 1) == (Ssyt(((1,),)), (1, 1))
    assert column_insert(Ssyt(((1,),)), 1) == (Ssyt(((1, 1),)), (1, 2))
    assert column_insert(Ssyt(((1,),)), 2) == (Ssyt(((1,), (2,))), (2, 1))


def test_burge_examples():
    assert burge(Biword((2,), (1,))) == (Ssyt(((1,),)), Ssyt(((2,),)))
    P, Q = burge(Biword((2, 1), (2, 1)))
    assert P == Q == Ssyt(((1,), (2,)))
    assert burge_inverse(P, Q) == Biword((2, 1), (2, 1))
    assert burge_inverse(Ssyt(((1,),)), Ssyt(((2,),))) == Biword((2,), (1,))


def test_burge_yamanouchi_array():
    w = Biword((4, 4, 3, 3, 2, 2, 2, 1), (2, 4, 2, 3, 1, 1, 2, 1))
    P, Q = burge(w)
    assert P == Ssyt(((1, 1, 1), (2, 2, 2), (3,), (4,)))
    assert Q == Ssyt(((1, 2, 2), (2, 3, 4), (3,), (4,)))
    assert burge_inverse(P, Q) == w


def test_burge_inverse_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        burge_inverse(Ssyt(((1,),)), Ssyt(((1, 1),)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_burge_roundtrip_and_symmetry(A):
    A = tuple(map(tuple, A))
    m, n = len(A), len(A[0])
    w = matrix_to_biword(A)
    P, Q = burge(w)
    assert P.shape == Q.shape
    assert biword_to_matrix(burge_inverse(P, Q), m, n) == A
    assert burge(matrix_to_biword(transpose(A))) == (Q, P)


@settings(max_examples=200, deadline=None)
@given(words)
def test_insertion_tableau_is_knuth_equivalent(w):
    P = insertion_tableau(w)
    assert P.size == len(w)
    assert P.reading_word() in knuth_class(w)


def test_insertion_tableau_examples():
    assert insertion_tableau((1,)) == Ssyt(((1,),))
    assert insertion_tableau((2, 1)) == Ssyt(((1,), (2,)))
    P = insertion_tableau((4, 1, 1, 3, 1, 2, 3))
    assert P.size == 7 and knuth_equivalent(P.reading_word(), (4, 1, 1, 3, 1, 2, 3))


def test_knuth_equivalence_examples():
    assert knuth_equivalent((2, 1, 3), (2, 1, 3))
    assert not knuth_equivalent((2, 1), (1, 2))
    assert knuth_equivalent((1, 3, 2), (3, 1, 2))


@settings(max_examples=100, deadline=None)
@given(words, words)
def test_knuth_classes_are_plactic(u, v):
    # same insertion tableau exactly when in the same class
    if len(u) == len(v):
        assert (insertion_tableau(u) == insertion_tableau(v)) == (v in knuth_class(u))


def test_biword_json_roundtrip():
    w = matrix_to_biword(B_3X3)
    assert Biword.from_json(w.to_json()) == w
    assert str(matrix_to_biword(A_2X3)) == "[22221111; 23331223]"
