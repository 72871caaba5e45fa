import pytest

from hopfdihedral.catalog import build, solve_f1, solve_haar, suq2_with_roots
from hopfdihedral.hopf import ModularPair
from hopfdihedral.scalars import ONE

BUILTINS = ["group:Z2", "group:Z3", "group:S3", "o_u1", "uq_sl2", "o_suq2",
            "uq_cartan:A1", "uq_cartan:A1xA1", "uq_cartan:A2"]


@pytest.mark.parametrize("name", BUILTINS)
def test_builtin_hopf_axioms(name):
    b = build(name)
    rep = b.hopf.verify_hopf_axioms(samples=40, seed=1)
    assert rep["pass"], rep["failures"]


def test_cartan_b2_is_refused():
    with pytest.raises(Exception):
        build("uq_cartan:B2")


def test_grouplikes(request):
    uq = build("uq_sl2")
    P, H = uq.pres, uq.hopf
    K2 = P.word_from_powers([("K", 2)])
    assert H.is_grouplike(K2)
    assert not H.is_grouplike((P.letter("E"),))
    assert H.inverse_grouplike(K2) == P.word_from_powers([("K", -2)])


def test_twisted_antipode_values():
    uq = build("uq_sl2")
    P, H = uq.pres, uq.hopf
    EK = P.parse_element("E*K").terms
    # S(EK) = K^-1 (-q E) = -E K^-1
    assert H.twisted_antipode(EK, "eps") == P.parse_element("-E*K^-1").terms


def test_mpi_pass_and_fail():
    uq = build("uq_sl2")
    P, H = uq.pres, uq.hopf
    good = H.verify_mpi(ModularPair("eps", P.word_from_powers([("K", 2)])))
    assert good["pass"]
    bad = H.verify_mpi(ModularPair("eps", P.word_from_powers([("K", 1)])))
    assert not bad["pass"]
    assert bad["residuals"][0][0] == "E"


def test_f1_pair_needs_right_handed_twist():
    suq2 = suq2_with_roots()
    solve_f1(suq2, solve_haar(suq2, 4))
    H = suq2.hopf
    assert H.verify_mpi(ModularPair("f1", ()), side="right")["pass"]
    assert H.verify_mpi(ModularPair("f1_inv", ()))["pass"]
    assert not H.verify_mpi(ModularPair("f1", ()))["pass"]


def test_antipode_inverse_round_trip():
    uq = build("uq_sl2")
    H = uq.hopf
    for a in H.generator_letters():
        x = {(a,): ONE}
        assert H.antipode(H.antipode(x), -1) == x


def test_coalgebra_star_is_involutive_on_circle():
    U1 = build("o_u1")
    s = {(U1.pres.letter("sigma"),): ONE}
    assert U1.hopf.coalgebra_star(s) == s
    assert U1.hopf.is_cocommutative()
    assert not build("uq_sl2").hopf.is_cocommutative()
