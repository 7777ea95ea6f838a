import pytest

from flagrpp.crystal import TableauCrystal
from flagrpp.insertion import Biword, burge, knuth_equivalent
from flagrpp.perms import Permutation, permutations_by_length
from flagrpp.shapes import (
    Rpp, SkewShape, Ssyt, enumerate_rpps, enumerate_rpps_m, highest_weight_tableau, key_tableau,
    partitions_in_box, reading_word,
)
from flagrpp.theorem import (
    FALSIFIED, SKIPPED, VERIFIED, DeskLimits, b_word, compute_beta_hat, enumerate_W,
    find_compatible_tableaux, is_yamanouchi, left_key, omega, partition_by_Q, psi,
    recording_tableau, slice_intersection_identity, verify_main_theorem, verify_tab_special_case,
)

Q_BIG = Ssyt(((1, 2, 2), (2, 3, 4), (3,), (4,)))
BIG_SHAPE = SkewShape((4, 4, 3, 2), (2, 1))


def col(a, b, m=2):
    return Rpp(SkewShape((1, 1)), ((a,), (b,)), m)


def opposite_demazure(v, lam, n):
    """Close the lowest weight tableau under e-strings along a reduced word of v."""
    amb = TableauCrystal(n)
    S = {key_tableau(tuple(reversed(lam)))}
    for i in reversed(v.reduced_word):
        for x in list(S):
            while (x := amb.e(i, x)) is not None:
                S.add(x)
    return S


def left_key_oracle(T, n):
    lam = tuple(T.shape) + (0,) * (n - len(T.shape))
    for v in permutations_by_length(n):
        if T in opposite_demazure(v, lam, n):
            return key_tableau(v.act(tuple(reversed(lam))))


@pytest.mark.parametrize("w, expected", [((3, 2, 1, 2, 1, 1), True), ((1, 2, 1, 3), False), ((), True)])
def test_is_yamanouchi(w, expected):
    assert is_yamanouchi(w) is expected


def test_b_word():
    assert b_word((3, 1, 4, 0, 2)) == (5, 5, 3, 3, 3, 3, 2, 1, 1, 1)
    assert b_word((0, 0, 0)) == ()
    assert b_word((0, 0, 1)) == (3,)


def test_left_key_examples():
    lam = highest_weight_tableau((3, 1))
    assert left_key(lam) == lam
    column = Ssyt(((1,), (3,), (4,)))
    assert left_key(column) == column
    K = left_key(Ssyt(((1, 2), (2,))))
    assert K.is_key() and sorted(K.content(2), reverse=True) == [2, 1]


def test_left_key_matches_opposite_demazure():
    for lam in partitions_in_box(5, 3):
        lam = tuple(p for p in lam if p)
        if not lam:
            continue
        for R in enumerate_rpps_m(SkewShape(lam), 3):
            if R.is_strict():
                T = Ssyt(R.rows)
                assert left_key(T) == left_key_oracle(T, 3), T


def test_enumerate_W_examples():
    assert enumerate_W((1, 1), (2, 2)) == {(2, 1)}
    assert enumerate_W((2, 0), (1, 2)) == {(1, 1)}
    assert enumerate_W((0, 0), (1, 2)) == {()}


def highest_weight_fill(T):
    # the witness of a block has a Yamanouchi reading word
    assert is_yamanouchi(reading_word(T))
    return T


def test_recording_tableau_of_yamanouchi_rpp(yamanouchi_rpp):
    assert recording_tableau(yamanouchi_rpp) == Q_BIG


def test_compatible_tableaux_examples(yamanouchi_rpp):
    Qs = dict(find_compatible_tableaux(SkewShape((1, 1)), (2, 2)))
    assert Qs == {Ssyt(((2,),)): col(1, 1), Ssyt(((1,), (2,))): col(1, 2)}
    assert [Q for Q, _ in find_compatible_tableaux(SkewShape(()), (1,))] == [Ssyt(())]
    big = dict(find_compatible_tableaux(BIG_SHAPE, (1, 2, 3, 4)))
    assert big[Q_BIG] == highest_weight_fill(big[Q_BIG])


def test_partition_by_Q_examples(yamanouchi_rpp):
    blocks = {b.Q: set(b.members) for b in partition_by_Q(SkewShape((1, 1)), (2, 2))}
    assert blocks == {Ssyt(((2,),)): {col(1, 1), col(2, 2)}, Ssyt(((1,), (2,))): {col(1, 2)}}
    single = partition_by_Q(SkewShape((1,)), (1,))
    assert len(single) == 1 and len(single[0].members) == 1
    fig = {b.Q: b for b in partition_by_Q(BIG_SHAPE, (1, 2, 3, 4))}
    assert yamanouchi_rpp in fig[Q_BIG].members


def test_beta_hat_examples():
    blocks = {b.Q: b for b in partition_by_Q(SkewShape((1, 1)), (2, 2))}
    b = blocks[Ssyt(((2,),))]
    assert compute_beta_hat(b) == (0, 1)
    assert b.beta_hat == (0, 1) and b.sigma == Permutation((2, 1)) and b.nu == (1, 0)
    assert compute_beta_hat(blocks[Ssyt(((1,), (2,)))]) == (1, 1)
    lam = highest_weight_tableau((2, 1))
    dominant = [b for b in partition_by_Q(SkewShape((2, 1)), (1, 2)) if b.Q == lam]
    assert [str(T) for T in dominant[0].members] == ["11/2"]
    assert compute_beta_hat(dominant[0]) == (2, 1)


def test_omega_examples():
    assert omega(col(1, 2), Ssyt(((1,), (2,)))) == (2, 1)
    assert omega(col(2, 2), Ssyt(((2,),))) == (2,)
    with pytest.raises(ValueError):
        omega(col(1, 2), Ssyt(((2,),)))


def test_omega_identity_when_Q_is_key():
    for shape, flag in [(SkewShape((2, 1)), (2, 2)), (SkewShape((2, 2), (1,)), (1, 2)), (SkewShape((3, 1)), (2, 2))]:
        for b in partition_by_Q(shape, flag):
            if left_key(b.Q) == b.Q:
                for T in b.members:
                    assert omega(T, b.Q) == reading_word(T)


def test_omega_images_are_knuth_equivalent_and_in_W():
    for shape, flag in [(SkewShape((2, 1)), (1, 2)), (SkewShape((2, 2), (1,)), (2, 2)), (SkewShape((3, 2, 1), (1,)), (1, 3, 3))]:
        for b in partition_by_Q(shape, flag):
            beta = left_key(b.Q).content(len(flag))
            images = [omega(T, b.Q) for T in b.members]
            assert len(set(images)) == len(images)
            assert set(images) <= enumerate_W(beta, flag)
            for T, v in zip(b.members, images):
                assert knuth_equivalent(v, reading_word(T))


def test_psi_is_weight_preserving():
    for b in partition_by_Q(SkewShape((2, 2), (1,)), (2, 2)):
        compute_beta_hat(b)
        for T in b.members:
            P = psi(T, b.Q)
            assert P.content(2) == tuple(reading_word(T).count(k) for k in (1, 2))


def test_verify_examples():
    rep = verify_main_theorem(SkewShape((1, 1)), (2, 2))
    assert rep.verdict == VERIFIED
    assert rep.key_sum == [(0, 1), (1, 1)]
    rep = verify_main_theorem(SkewShape((1,)), (1,))
    assert rep.verdict == VERIFIED and rep.key_sum == [(1,)]
    assert verify_main_theorem(SkewShape((2, 1), (1,)), (1, 2)).verdict == VERIFIED


def test_verify_reports_omega_not_onto_for_restrictive_flag():
    # the unread top cell of the column is bounded by the row-1 flag, which W does not see
    rep = verify_main_theorem(SkewShape((1, 1)), (1, 2))
    assert rep.verdict == FALSIFIED
    assert rep.checks["key_sum"] and rep.checks["slice_union"]
    failing = {name for b in rep.blocks for name, ok in b.checks.items() if not ok}
    assert failing == {"omega_onto_W"}


def test_verify_skips_large_inputs():
    rep = verify_main_theorem(BIG_SHAPE, (1, 2, 3, 4), DeskLimits(max_n=3))
    assert rep.verdict == SKIPPED


def test_trivial_flag_always_verifies():
    for lam in [(2, 1), (2, 2), (3, 1), (2, 1, 1), (3, 2, 1)]:
        for mu in [(), (1,)]:
            n = len(lam)
            assert verify_main_theorem(SkewShape(lam, mu), (n,) * n).verdict == VERIFIED


def test_tab_special_case():
    assert verify_tab_special_case(SkewShape((1,)), (1,)).ok
    assert verify_tab_special_case(SkewShape((2, 1), (1,)), (1, 2)).ok
    # no flagged SSYT exists: the degree-2 part of g must vanish too
    assert verify_tab_special_case(SkewShape((1, 1)), (1, 2)).ok


def test_intersection_identity_is_reported():
    res = slice_intersection_identity(SkewShape((2, 1), (1,)), (1, 2))
    assert set(res) == {"standard_orientation", "mirrored_orientation"}
    assert res["standard_orientation"]["holds"]


def test_report_json_is_plain():
    import json
    rep = verify_main_theorem(SkewShape((1, 1)), (2, 2))
    data = json.loads(json.dumps(rep.to_json()))
    assert data["verdict"] == "verified" and data["key_expansion"] == [[0, 1], [1, 1]]
