import os

import pytest

import adinkralab as adk

DATA = os.environ.get("ADK_DATA_DIR", "data")


def load(name):
    return adk.load(os.path.join(DATA, name + ".json"))


def test_load_and_validate():
    a = load("n4_valise")
    ok, violations = adk.validate(a)
    assert ok and violations == []
    assert adk.rank_sequence(a) == [4, 4]
    assert adk.zero_modes(a) == 4
    assert adk.is_valise(a)


def test_validate_q_and_rejection():
    ok, _ = adk.validate(load("pq11"), q=True)
    assert ok
    ok, violations = adk.validate(load("pq11"))
    assert not ok and violations


def test_raising_chain():
    a = load("n4_valise")
    for v in ("b0", "b1", "b2"):
        a = adk.raise_vertex(a, v)
    assert adk.rank_sequence(a) == [1, 4, 3]
    with pytest.raises(RuntimeError):
        adk.raise_vertex(a, "f0")


def test_complex_and_laplacian():
    c = adk.complex_of(load("n7_1771"))
    assert c.d_squared_zero()
    ok, detail = adk.check_laplacian(c)
    assert ok, detail
    assert c.differential(1)[0][0] != "0"


def test_hilbert_profile_over_quotient():
    c = adk.complex_of(load("n2_valise"))
    rows = adk.hilbert_profile(c, 3, ring="RmodQ")
    assert rows[0] == [2, 2, 2, 2]
    assert rows[1] == [0, 0, 2, 2]


def test_cone_of_raise():
    cone = adk.cone_of_raise(load("n2_valise"), "b0")
    assert cone.d_squared_zero()
    assert [cone.rank_at(i) for i in range(cone.length() + 1)] == [2, 3, 1]


def test_codes():
    e7 = adk.builtin_code("e7")
    assert e7.length == 7 and e7.dimension() == 3 and e7.is_doubly_even()
    assert adk.coset_rank_sequence(e7) == [1, 7, 7, 1]
    a = adk.code_to_adinkra(adk.builtin_code("d4"))
    assert adk.validate(a)[0]
    assert adk.rank_sequence(a) == [1, 4, 3]


def test_clifford():
    mf = adk.valise_mf(load("n4_valise"))
    assert mf.verify()
    ok, detail = adk.clifford(mf)
    assert ok, detail
    assert adk.is_irreducible(mf, 4)
    assert adk.irreducible_dim(4) == (4, 2, "H")


def test_betti_and_series():
    assert adk.betti_linear(2) == [3, 4, 1]
    for d in range(6):
        assert adk.hilb_series_coeff(2, d) == adk.hilb_formula(2, d)


def test_tensor_and_koszul():
    t = adk.graph_tensor(load("n2_valise"), load("n2_valise"))
    assert adk.rank_sequence(t) == [4, 8, 4]
    k = adk.koszul_adinkra(3)
    assert adk.rank_sequence(k) == [1, 3, 3, 1]


def test_dot_and_json_round_trip():
    a = load("n2_rhopair_valise")
    assert "graph adinkra" in a.to_dot()
    b = adk.from_json(a.to_json())
    assert adk.rank_sequence(b) == adk.rank_sequence(a)
