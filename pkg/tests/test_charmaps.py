import random
from fractions import Fraction

import pytest

from hopfdihedral.catalog import build
from hopfdihedral.charmaps import (CharMapError, HochschildCochain, MatrixOverA, chern0,
                                   chern1_unitary, chi_tau, cochain_differential, cochain_star,
                                   connes_cycle, cup, gamma, generalized_trace, grouplike_coaction,
                                   h1_coefficient, identity_coefficient, kron_scalar,
                                   matrix_star_adjoint, module_algebra_failures, pairing, theta)
from hopfdihedral.constructions import (algebra_cyclic, hopf_cm_cocyclic, hopf_homology_dihedral,
                                        inversion_action)
from hopfdihedral.cyclicmod import hochschild_b
from hopfdihedral.hopf import ModularPair
from hopfdihedral.scalars import ONE, Scalar


@pytest.fixture(scope="module")
def z3():
    return build("group:Z3")


@pytest.fixture(scope="module")
def uq():
    return build("uq_sl2")


def test_gamma_on_two_legs(z3):
    g = z3.pres.letter("g")
    coact, tr = grouplike_coaction(z3), identity_coefficient(z3.pres)
    # gamma(g0 (x) g1) = Tr(g0 g1) g1
    assert gamma(z3.pres, coact, tr, {((g,), (g, g)): ONE}) == {((g, g),): ONE}
    assert gamma(z3.pres, coact, tr, {((g,), (g,)): ONE}) == {}


def test_theta_on_one_leg(z3):
    g = z3.pres.letter("g")
    assert theta(z3, (), {((g,),): ONE}) == {((g, g), (g,)): ONE}


def test_gamma_theta_is_identity(z3):
    coact, tr = grouplike_coaction(z3), identity_coefficient(z3.pres)
    CC = hopf_homology_dihedral(z3)
    for n in range(3):
        for k in CC.basis(n):
            assert gamma(z3.pres, coact, tr, theta(z3, (), {k: ONE})) == {k: ONE}


def test_theta_rejects_bad_sigma(uq):
    K = uq.pres.word_from_powers([("K", 1)])
    with pytest.raises(CharMapError):
        theta(uq, K, {})


def test_inversion_action_is_module_algebra(z3):
    z2 = build("group:Z2")
    assert module_algebra_failures(z2, z3, inversion_action(z2, z3)) == []


def test_pairing_is_adjoint(z3):
    z2 = build("group:Z2")
    act, tau = inversion_action(z2, z3), identity_coefficient(z3.pres)
    CM = hopf_cm_cocyclic(z2, ModularPair("eps", ()))
    C = algebra_cyclic(z3)
    for n in (1, 2):
        for hk in CM.basis(n):
            x = {hk: ONE}
            for ak in C.basis(n)[:9]:
                y = {ak: ONE}
                assert pairing(z2, z3, act, tau, CM.t(n, x), y) == pairing(z2, z3, act, tau, x, C.t(n, y))
                assert pairing(z2, z3, act, tau, CM.w(n, x), y) == pairing(z2, z3, act, tau, x, C.w(n, y))


def test_chi_tau_degree_mismatch(z3):
    z2 = build("group:Z2")
    with pytest.raises(CharMapError):
        chi_tau(z2, z3, inversion_action(z2, z3), identity_coefficient(z3.pres),
                {((),): ONE}, ((),))


def _leg(x):
    return {(m,): c for m, c in x.items()}


def test_cup_example(uq):
    P = uq.pres
    K2 = P.word_from_powers([("K", 2)])
    ek = HochschildCochain(K2, 1, _leg(P.parse_element("E*K").terms))
    kf = HochschildCochain(K2, 1, _leg(P.parse_element("K*F").terms))
    prod = cup(uq, ek, kf)
    assert prod.sigma == P.word_from_powers([("K", 4)])
    assert prod.degree == 2
    (key, c), = prod.vec.items()
    assert c == Scalar(Fraction(64, 27))
    mono = lambda text: next(iter(P.parse_element(text).terms))
    assert key == (mono("E*K"), mono("F*K^3"))


def test_cup_unit(uq):
    P = uq.pres
    unit = HochschildCochain((), 0, {(): ONE})
    x = HochschildCochain(P.word_from_powers([("K", 2)]), 1, _leg(P.parse_element("E*K").terms))
    assert cup(uq, unit, x).vec == x.vec
    assert cup(uq, x, unit).vec == x.vec


def test_ek_is_a_cocycle(uq):
    P = uq.pres
    x = HochschildCochain(P.word_from_powers([("K", 2)]), 1, _leg(P.parse_element("E*K").terms))
    assert cochain_differential(uq, x).vec == {}


def test_star_reverses_cup(uq):
    from hopfdihedral.constructions import expand
    from hopfdihedral.ncalg import random_element

    P = uq.pres
    rng = random.Random(2)
    sigmas = [(), P.word_from_powers([("K", 2)])]
    for _ in range(5):
        a = HochschildCochain(rng.choice(sigmas), 1, expand([random_element(P, rng, max_len=2, terms=2)]))
        b = HochschildCochain(rng.choice(sigmas), 1, expand([random_element(P, rng, max_len=2, terms=2)]))
        lhs = cochain_star(uq, cup(uq, a, b)).vec
        rhs = cup(uq, cochain_star(uq, b), cochain_star(uq, a)).vec
        assert lhs == rhs


def test_star_adjoint_of_identity(z3):
    I2 = MatrixOverA.identity(z3.pres, 2)
    assert matrix_star_adjoint(I2).is_identity()
    with pytest.raises(CharMapError):
        matrix_star_adjoint(MatrixOverA.identity(z3.pres, 3))


def test_star_adjoint_swaps_blocks(z3):
    g = z3.pres.letter("g")
    m = MatrixOverA(z3.pres, [[{(g,): ONE}, {}], [{}, {}]], eps=-1)
    adj = matrix_star_adjoint(m)
    assert adj.entries[1][1] == {(g, g): ONE}
    assert adj.entries[0][0] == {}


def test_non_square_matrix():
    with pytest.raises(CharMapError):
        MatrixOverA(build("group:Z2").pres, [[{}, {}]])


def test_kron_scalar(z3):
    I1 = MatrixOverA.identity(z3.pres, 1)
    assert kron_scalar([[1, 0], [0, 1]], I1).is_identity()


def test_generalized_trace(z3):
    g = z3.pres.letter("g")
    m = MatrixOverA(z3.pres, [[{}, {(g,): ONE}], [{(g,): ONE}, {}]])
    assert generalized_trace([m, m]) == {((g,), (g,)): Scalar(2)}


def test_chern0_of_rank_one_projection():
    z2 = build("group:Z2")
    p = MatrixOverA(z2.pres, [[{(): ONE}, {}], [{}, {}]])
    assert chern0(p, 0) == {((),): ONE}
    x = chern0(p, 1)
    assert x == {((), (), ()): ONE}
    C = algebra_cyclic(z2)
    # y_2 = (-1)^3 w_2 acts by -1
    assert C.w(2, x) == x
    assert connes_cycle(C, 2, x)


def test_chern0_needs_idempotent():
    z2 = build("group:Z2")
    with pytest.raises(CharMapError):
        chern0(MatrixOverA.identity(z2.pres, 1).scaled(2), 0)


def test_chern1_of_identity_is_a_boundary():
    z2 = build("group:Z2")
    x = chern1_unitary(MatrixOverA.identity(z2.pres, 2))
    assert x == {((), ()): Scalar(2)}
    C = algebra_cyclic(z2)
    assert hochschild_b(C, 2, {((), (), ()): Scalar(2)}) == x


def test_chern1_checks_inverse():
    z3 = build("group:Z3")
    g = z3.pres.letter("g")
    m = MatrixOverA(z3.pres, [[{(g,): ONE}, {}], [{}, {(): ONE}]])
    with pytest.raises(CharMapError):
        chern1_unitary(m, MatrixOverA.identity(z3.pres, 2))


def test_h1_coefficient():
    U = build("o_u1")
    s, si = U.pres.letter("sigma"), U.pres.letter("sigma^-1")
    assert h1_coefficient(U, {((s, s),): ONE, ((si,),): Scalar(3)}) == Scalar(-1)
