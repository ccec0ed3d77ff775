import pytest
from hypothesis import given, settings, strategies as st

from bnloci.picard_lattice import PicardLatticeParams, check_rigidity
from bnloci.regeneration import (
    RegenerationStatus,
    RegenerationWitness,
    find_witness,
    general_degree_range,
    is_valid_witness,
    nc30_holds,
    nc30_terms,
    special_grd_exists,
)
from oracles import rho_raw, witness_scan


def outcome(g, r, d, rp, dp):
    return special_grd_exists(g, r, d, rp, dp, check_rigidity(PicardLatticeParams(g, r, d)))


@pytest.mark.parametrize("q, expected", [
    ((8, 1, 4, 2, 7), (0, 1, 0, 3)),
    ((7, 2, 6, 1, 4), (0, 0, 0, 0)),
    ((11, 3, 10, 2, 8), None),
])
def test_find_witness_examples(q, expected):
    w = find_witness(*q)
    assert (w.as_tuple() if w else None) == expected == witness_scan(*q)


def test_find_witness_matches_scan_small():
    for g in range(3, 13):
        for r in range(1, 5):
            for d in range(2, g):
                for rp in range(1, 5):
                    for dp in range(2, g):
                        w = find_witness(g, r, d, rp, dp)
                        assert (w.as_tuple() if w else None) == witness_scan(g, r, d, rp, dp)


@pytest.mark.parametrize("genus", range(0, 12))
@pytest.mark.parametrize("rank", range(0, 6))
def test_general_degree_range(genus, rank):
    brute = [e for e in range(0, 60) if 0 <= rho_raw(genus, rank, e) < genus]
    assert list(general_degree_range(genus, rank)) == brute


@pytest.mark.parametrize("q, expected, lhs, rhs", [
    ((8, 1, 4, 2, 7), False, 4, 4),
    ((11, 3, 10, 2, 8), True, 2, 1),
    ((9, 2, 7, 1, 5), False, 1, 1),
])
def test_nc30_examples(q, expected, lhs, rhs):
    assert nc30_holds(*q) is expected
    assert nc30_terms(*q)[1:] == (lhs, rhs)


def _basic_tuple():
    return st.integers(3, 60).flatmap(
        lambda g: st.tuples(st.just(g), st.integers(1, 12), st.integers(2, g - 1),
                            st.integers(1, 12), st.integers(2, g - 1))
    )


@settings(max_examples=400)
@given(_basic_tuple())
def test_obstruction_soundness(q):
    if nc30_holds(*q):
        assert find_witness(*q) is None


@settings(max_examples=400)
@given(_basic_tuple())
def test_witness_validity_and_dp_monotonicity(q):
    g, r, d, rp, dp = q
    w = find_witness(*q)
    if w is None:
        return
    assert is_valid_witness(*q, w)
    if dp + 1 <= g - 1:
        assert find_witness(g, r, d, rp, dp + 1) is not None


@settings(max_examples=400)
@given(_basic_tuple())
def test_existence_monotone_in_d(q):
    g, r, d, rp, dp = q
    if d - 1 >= 2 and find_witness(*q) is not None:
        assert find_witness(g, r, d - 1, rp, dp) is not None


def test_same_quadruple_does_not_survive_lowering_d():
    # the witness for d = 3 breaks the second-component condition at d = 2
    w = find_witness(4, 2, 3, 2, 3)
    assert w == RegenerationWitness(0, 1, 0, 2)
    assert not is_valid_witness(4, 2, 2, 2, 3, w)
    assert find_witness(4, 2, 2, 2, 3) == RegenerationWitness(0, 1, 0, 3)


def test_special_grd_exists_examples():
    res = outcome(8, 1, 4, 2, 7)
    assert res.status is RegenerationStatus.EXISTS
    assert res.witness.as_tuple() == (0, 1, 0, 3)

    res = outcome(9, 2, 6, 3, 8)
    assert res.status is RegenerationStatus.PRECONDITIONS_NOT_MET
    assert any("rigidity" in reason for reason in res.reasons)

    assert rho_raw(14, 2, 11) < 0
    assert outcome(14, 3, 13, 2, 11).status is RegenerationStatus.NOT_EXISTS


def test_special_grd_exists_preconditions():
    res = special_grd_exists(9, 2, 12, 1, 5, None)
    assert res.status is RegenerationStatus.PRECONDITIONS_NOT_MET
    assert any("basiccond" in reason for reason in res.reasons)
    # g + 4r - 2d = 4 with r > 1: (10, 3, 9)
    res = outcome(10, 3, 9, 1, 5)
    assert any("g+4r-2d" in reason for reason in res.reasons)
    res = outcome(8, 1, 4, 1, 6)
    assert any("rho" in reason for reason in res.reasons)


def test_outcome_json_shape():
    d = outcome(8, 1, 4, 2, 7).to_dict()
    assert d["query"] == {"g": 8, "r": 1, "d": 4, "rp": 2, "dp": 7}
    assert d["status"] == "Exists" and d["witness"] == [0, 1, 0, 3]


def test_find_witness_rejects_rank_zero_target():
    with pytest.raises(ValueError):
        find_witness(8, 1, 4, 0, 7)
