import pytest

import chainsub


def test_g_embed_partitions():
    out = chainsub.g_embed([[0]], [[0]], p=2, n=7)
    assert out["pair"]["M0"] == [7, 6, 4, 4, 2, 2]
    assert out["pair"]["M1_partition"] == [4, 4, 2, 2]
    assert out["end_quotient"]["algebra"]["dim"] == out["commutant_dim"] == 1


def test_end_quotient_matches_commutant_over_f3():
    X, Y = [[1, 1], [0, 1]], [[0, 1], [0, 0]]
    out = chainsub.g_embed(X, Y, q=3)
    assert out["end_quotient"]["algebra"]["dim"] == chainsub.commutant_dim(3, X, Y)


def test_hom_between_simples():
    assert chainsub.hom("S1", "S2")["order"] == 2
    assert chainsub.hom("S2", "S1")["order"] == 1


def test_f_on_endpoints():
    assert chainsub.f_apply("I")["dims"] == [1, 0, 0]
    fj = chainsub.f_apply("J", ring=chainsub.truncpoly(3, 7))
    assert fj["dims"] == [1, 1, 2]
    assert fj["beta"] == [[1, 0]] and fj["gamma"] == [[0, 1]]


def test_phi_round_trip():
    pair = chainsub.phi_apply({"m": 1, "V": [[1]], "U": [[1, 1]]})
    back = chainsub.f_apply({"M0": pair["M0"], "M1": pair["M1"]}, m=1)
    assert back["dims"] == [1, 1, 1]


def test_input_errors_name_the_field():
    with pytest.raises(chainsub.CommandError) as info:
        chainsub.hom("S1", {"M0": [9]})
    assert info.value.code == 2
    assert "target.M0[0]" in str(info.value)


def test_commutant_dim_rejects_non_square():
    with pytest.raises(ValueError):
        chainsub.commutant_dim(2, [[0, 1]], [[0, 1]])
