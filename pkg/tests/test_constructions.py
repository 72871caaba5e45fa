import random

import pytest

from hopfdihedral.catalog import build
from hopfdihedral.constructions import (ConstructionError, algebra_cyclic, apply,
                                        coalgebra_hochschild, dual_module, expand,
                                        group_dihedral_submodule, group_theta, hopf_cm_cocyclic,
                                        hopf_homology_dihedral, hopf_paracyclic_with_coeff,
                                        is_finite, legwise_mul, mpi_coefficient, path_projection,
                                        path_space, scale)
from hopfdihedral.cyclicmod import check_relations
from hopfdihedral.hopf import ModularPair
from hopfdihedral.scalars import ONE, Scalar


@pytest.fixture(scope="module")
def uq():
    return build("uq_sl2")


@pytest.fixture(scope="module")
def cm(uq):
    return hopf_cm_cocyclic(uq, uq.extras["mpi"])


def _leg(x):
    return {(m,): c for m, c in x.items()}


def test_cm_operators_on_ek(uq, cm):
    P = uq.pres
    ek, kf = P.parse_element("E*K").terms, P.parse_element("K*F").terms
    assert cm.t(1, _leg(ek)) == scale(_leg(ek), -1)
    assert cm.w(1, _leg(ek)) == scale(_leg(kf), -1)
    both = expand([ek, kf])
    assert cm.w(2, both) == both


def test_cm_rejects_non_modular_pair(uq):
    with pytest.raises(ConstructionError, match="residual on E"):
        hopf_cm_cocyclic(uq, ModularPair("eps", uq.pres.word_from_powers([("K", 1)])))


def test_cm_small_degree_relations(cm):
    assert check_relations(cm, 2, samples=15, seed=3).passed


def test_paracyclic_matches_cm(uq, cm):
    V = mpi_coefficient(uq, uq.extras["mpi"])
    para = hopf_paracyclic_with_coeff(uq, V)
    rng = random.Random(5)
    tag = V.labels[0]
    for n in (1, 2, 3):
        for _ in range(5):
            x = cm.sampler(n, rng)
            xv = {k + (tag,): c for k, c in x.items()}
            assert para.t(n, xv) == {k + (tag,): c for k, c in cm.t(n, x).items()}
            assert para.w(n, xv) == {k + (tag,): c for k, c in cm.w(n, x).items()}
            y = cm.sampler(n - 1, rng)
            yv = {k + (tag,): c for k, c in y.items()}
            for i in range(n + 1):
                assert para.d(n, i, yv) == {k + (tag,): c for k, c in cm.d(n, i, y).items()}


def test_stability_witness(uq):
    V = mpi_coefficient(uq, uq.extras["mpi"])
    assert not V.stability_witness()


def test_hopf_homology_involution_on_circle():
    U = build("o_u1")
    C = hopf_homology_dihedral(U)
    s, si = U.pres.letter("sigma"), U.pres.letter("sigma^-1")
    assert C.w(1, {((s,),): ONE}) == {((si,),): ONE}


def test_finite_detection():
    assert is_finite(build("group:S3"))
    assert not is_finite(build("o_u1"))
    assert not is_finite(build("uq_sl2"))


def test_legwise_mul_and_expand(uq):
    P = uq.pres
    E, K = P.parse_element("E").terms, P.parse_element("K").terms
    x = expand([E, K])
    assert legwise_mul(P, x, expand([K, K])) == expand([P.mul(E, K), P.mul(K, K)])


def test_algebra_cyclic_maps():
    Z3 = build("group:Z3")
    C = algebra_cyclic(Z3)
    g = Z3.pres.letter("g")
    key = ((g,), (), (g, g))
    assert C.t(2, {key: ONE}) == {((g, g), (g,), ()): ONE}
    # (a0, a1, a2) -> (a0*, a2*, a1*) with g* = g^2
    assert C.w(2, {key: ONE}) == {((g, g), (g,), ()): ONE}
    assert apply(C, "face", 2, {key: ONE}, 2) == {((), ()): ONE}


def test_apply_rejects_unknown_operator():
    C = algebra_cyclic(build("group:Z2"))
    with pytest.raises(ValueError):
        apply(C, "bogus", 1, {})


def test_path_space_needs_cocommutative(uq):
    with pytest.raises(ConstructionError, match="cocommutative"):
        path_space(uq)


def test_path_projection_and_theta():
    S3 = build("group:S3")
    key = algebra_cyclic(S3).basis(1)[3]
    assert path_projection(S3, {key: ONE}) == {key[1:]: ONE}
    th = group_theta(S3, {key[1:]: ONE})
    (full, c), = th.items()
    assert c == ONE
    assert full[1:] == key[1:]
    assert S3.pres.mul({full[0]: ONE}, {full[1]: ONE}) == {(): ONE}


def test_group_submodule_basis_closes_up():
    S3 = build("group:S3")
    E = group_dihedral_submodule(S3)
    assert len(E.basis(0)) == 1
    assert len(E.basis(1)) == 6
    assert len(E.basis(2)) == 36


def test_coalgebra_hochschild_needs_matching_sigmas(uq):
    K = uq.pres.word_from_powers([("K", 1)])
    with pytest.raises(ConstructionError):
        coalgebra_hochschild(uq, K, ())


def test_dual_module_is_cochain():
    D = dual_module(algebra_cyclic(build("group:Z2")))
    assert not D.chain
    assert D.finite
    assert check_relations(D, 2).passed


def test_scale_drops_zeros():
    assert scale({"a": Scalar(2)}, 0) == {}
