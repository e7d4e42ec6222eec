from itertools import combinations, permutations

import pytest

from curated import FEASIBLE_TM, family_codes
from piperfect.construct import (
    canonical_form,
    code_from_family,
    family_build,
    family_check,
)
from piperfect.core import InfeasibleParameters, LengthMismatch, LinearCode, TwoValuedProfile, enumerate_codewords
from piperfect.metric import sphere_size
from piperfect.perfect import verify_exhaustive, verify_structural
from piperfect.weightsearch import small_dependency

EXAMPLE_COLUMNS = (1, 2, 4, 5, 6, 7)


def test_example_matrix_is_in_family(example_H):
    assert example_H.columns == EXAMPLE_COLUMNS
    assert family_check(EXAMPLE_COLUMNS, 3, 2)


def test_p2_violation():
    # columns 4 and 6 moved to the front: 5 ^ 7 = 2, a later column
    cols = (5, 7, 1, 2, 4, 6)
    v = family_check(cols, 3, 2)
    assert not v and v.violation.prop == "P2"
    assert v.violation.columns == (1, 2, 4)


def test_p1_violations():
    assert family_check((0, 2, 4, 5, 6, 7), 3, 2).violation.prop == "P1"
    assert family_check((1, 2, 4, 5, 6, 6), 3, 2).violation.columns == (5, 6)


def test_p3_violation():
    # head 1, 2, 3 in t=3: 1 ^ 2 = 3 sits in the head
    v = family_check((1, 2, 3, 4), 3, 3)
    assert not v and v.violation.prop == "P3"


def test_dimension_mismatch():
    with pytest.raises(LengthMismatch):
        family_check((1, 2, 4), 3, 2)


def test_build_reproduces_example():
    F = family_build(3, 2)
    assert F.columns == EXAMPLE_COLUMNS
    H, pi = code_from_family(F)
    assert pi.weights == (1, 1, 2, 2, 2, 2)
    assert set(enumerate_codewords(H).strings()) == {
        "000000", "001111", "101100", "100011", "011010", "010101", "111001", "110110"
    }


def test_build_with_seed():
    F = family_build(3, 2, seed=[5, 3])
    assert F.columns[:2] == (5, 3)
    assert family_check(F.columns, 3, 2)


def test_build_t4_m3():
    F = family_build(4, 3)
    assert F.n == 12
    H, pi = code_from_family(F)
    assert H.k == 8
    assert verify_exhaustive(H.enumerate(), pi, 2).perfect


def test_build_t3_m3():
    F = family_build(3, 3)
    assert F.n - F.m == 1
    H, pi = code_from_family(F)
    assert verify_exhaustive(H.enumerate(), pi, 2).perfect


def test_m0_is_hamming_with_weight_two():
    F = family_build(3, 0)
    H, pi = code_from_family(F)
    assert pi.weights == (2,) * 7
    assert H == LinearCode.from_columns(range(1, 8), 3)
    assert verify_exhaustive(H.enumerate(), pi, 2).perfect


def test_infeasible_parameters():
    with pytest.raises(InfeasibleParameters):
        family_build(3, 4)
    with pytest.raises(InfeasibleParameters):
        family_build(2, 2)
    with pytest.raises(ValueError):
        family_build(3, 2, seed=[1, 2, 3])


def test_every_build_is_in_family_and_perfect():
    for F, H, pi in family_codes():
        assert family_check(F.columns, F.t, F.m)
        assert small_dependency(F.columns[: F.m]) is None
        assert sphere_size(pi, 2).total == 2**F.t
        assert verify_exhaustive(H.enumerate(), pi, 2).perfect
        assert verify_structural(H, pi, 2).perfect


def test_leaving_the_family_breaks_perfectness():
    for F, H, pi in family_codes():
        if F.m < 2:
            continue
        a, b = F.columns[0], F.columns[1]
        cols = list(F.columns)
        cols[-1] = a ^ b
        assert not family_check(cols, F.t, F.m)
        H2 = LinearCode.from_columns(cols, F.t)
        assert not verify_exhaustive(H2.enumerate(), pi, 2).perfect


def test_family_membership_iff_perfect_t3_m2():
    # every ordering of 6 distinct nonzero columns of F_2^3
    profile = TwoValuedProfile(6, 2)
    pi = profile.weight_vector()
    seen_in, seen_perfect = 0, 0
    for cols in permutations(range(1, 8), 6):
        ok = bool(family_check(cols, 3, 2))
        perfect = verify_structural(LinearCode.from_columns(cols, 3), pi, 2).perfect
        assert ok == perfect, cols
        seen_in += ok
    assert seen_in > 0


def test_all_heads_equivalent_at_small_scale():
    for t, m in FEASIBLE_TM:
        if m == 0:
            continue
        reference = canonical_form(family_build(t, m))
        for head in permutations(range(1, 2**t), m):
            if small_dependency(head) is not None:
                continue
            F = family_build(t, m, seed=list(head))
            assert canonical_form(F) == reference, (t, m, head)


def test_json_export():
    assert family_build(3, 2).to_json() == {"t": 3, "m": 2, "n": 6, "columns": list(EXAMPLE_COLUMNS)}
