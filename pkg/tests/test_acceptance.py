"""Acceptance criteria A1-A10.

Each criterion is a function returning (passed, details).  The test for it
prints exactly one line, "Ak PASS|FAIL tolerance=exact ...", then asserts.
A10 re-runs every criterion and compares the JSON byte for byte.
"""

import itertools
import json
import random
from fractions import Fraction

import pytest
import sympy

from hopfdihedral.catalog import (build, coaction_residuals, e1_basis, podles_embedding,
                                  podles_relation_residuals, skew_primitive_space, solve_f1,
                                  solve_haar, suq2_with_roots)
from hopfdihedral.charmaps import (HochschildCochain, cochain_differential, cochain_star, cup,
                                   gamma, grouplike_coaction, identity_coefficient,
                                   podles_chern, podles_unitary, theta)
from hopfdihedral.constructions import (algebra_cyclic, coalgebra_hochschild, dual_module, expand,
                                        hopf_cm_cocyclic, hopf_homology_dihedral,
                                        hopf_paracyclic_with_coeff, mpi_coefficient, path_space)
from hopfdihedral.cyclicmod import check_relations, hochschild_b, homology
from hopfdihedral.hopf import ModularPair
from hopfdihedral.ncalg import _add_into, random_element
from hopfdihedral.scalars import ONE, Scalar

SEED = 0
TOL = "exact"
FIRST_RUN: dict = {}


def _report(capsys, name, passed, details):
    FIRST_RUN.setdefault(name, json.dumps(details, sort_keys=True, default=str))
    summary = details.get("summary", "")
    with capsys.disabled():
        print(f"\n{name} {'PASS' if passed else 'FAIL'} tolerance={TOL} {summary}")


def _sub(a, b):
    out = dict(a)
    for k, c in b.items():
        _add_into(out, k, -c)
    return out


# ------------------------------------------------------------------ A1


def criterion_a1():
    Z2, Z3, S3, uq = (build("group:Z2"), build("group:Z3"), build("group:S3"), build("uq_sl2"))
    pair = uq.extras["mpi"]
    cases = [
        (algebra_cyclic(Z2), 4, None),
        (coalgebra_hochschild(Z2), 4, None),
        (hopf_cm_cocyclic(uq, pair), 4, 200),
        (hopf_paracyclic_with_coeff(uq, mpi_coefficient(uq, pair)), 4, 200),
        (hopf_cm_cocyclic(Z3, ModularPair("eps", ())), 4, None),
        (hopf_homology_dihedral(Z3), 4, None),
        (path_space(S3), 4, None),
    ]
    rows = []
    for M, deg, samples in cases:
        rep = check_relations(M, deg, samples=samples or 20, seed=SEED)
        rows.append({"module": M.name, "max_degree": deg, "samples": samples if not M.finite else "basis",
                     "checked": rep.checked, "failures": len(rep.failures)})
    passed = all(r["failures"] == 0 for r in rows)
    total = sum(r["checked"] for r in rows)
    return passed, {"rows": rows, "summary": f"{len(rows)} modules, {total} identities, "
                                              f"{sum(r['failures'] for r in rows)} failures"}


# ------------------------------------------------------------------ A2


def criterion_a2():
    uq = build("uq_sl2")
    M = hopf_cm_cocyclic(uq, uq.extras["mpi"])
    rng = random.Random(SEED)
    bad = {"w d": 0, "w b": 0, "t w": 0, "w w": 0}
    checked = 0
    for n in range(1, 5):
        for _ in range(50):
            x = M.sampler(n, rng)
            y = M.sampler(n - 1, rng)
            wy = M.w(n - 1, y)
            for i in range(n + 1):
                # cofaces: w_n d_i = d_{n-i} w_{n-1}
                if M.w(n, M.d(n, i, y)) != M.d(n, n - i, wy):
                    bad["w d"] += 1
            lhs = M.w(n, hochschild_b(M, n - 1, y))
            rhs = {k: (-1) ** n * c for k, c in hochschild_b(M, n - 1, wy).items()}
            if lhs != rhs:
                bad["w b"] += 1
            if M.t(n, M.w(n, x)) != M.w(n, M.t(n, x, -1)):
                bad["t w"] += 1
            if M.w(n, M.w(n, x)) != x:
                bad["w w"] += 1
            checked += 1
    passed = not any(bad.values())
    return passed, {"failures": bad, "samples": checked,
                    "summary": f"{checked} samples in degrees 1..4, failures {bad}"}


# ------------------------------------------------------------------ A3


def _a3_parts():
    uq = build("uq_sl2")
    P = uq.pres
    k2 = uq.hopf.verify_mpi(ModularPair("eps", P.word_from_powers([("K", 2)])), samples=40, seed=SEED)
    wrong = uq.hopf.verify_mpi(ModularPair("eps", P.word_from_powers([("K", 1)])), samples=40, seed=SEED)
    suq2 = suq2_with_roots(Fraction(3, 4))
    solve_f1(suq2, solve_haar(suq2, 4))
    f1 = suq2.hopf.verify_mpi(ModularPair("f1", ()), side="right", samples=40, seed=SEED)
    a2 = build("uq_cartan:A2")
    A = a2.pres
    cartan2 = a2.hopf.verify_mpi(ModularPair("eps", A.word_from_powers([("K1", 2), ("K2", 2)])))
    cartan4 = a2.hopf.verify_mpi(ModularPair("eps", A.word_from_powers([("K1", 4), ("K2", 4)])))
    return {
        "uq K^2": k2["pass"],
        "uq K fails": (not wrong["pass"]) and wrong["residuals"][0][0] == "E",
        "uq K residual": wrong["residuals"][0] if wrong["residuals"] else None,
        "suq2 f1 (right twist)": f1["pass"],
        "A2 K1^2 K2^2": cartan2["pass"],
        "A2 K1^2 K2^2 residual": cartan2["residuals"][:2],
        "A2 K1^4 K2^4": cartan4["pass"],
    }


def criterion_a3():
    parts = _a3_parts()
    keys = ["uq K^2", "uq K fails", "suq2 f1 (right twist)", "A2 K1^2 K2^2"]
    passed = all(parts[k] for k in keys)
    bad = [k for k in keys if not parts[k]]
    summary = "all four pairs behave as stated" if passed else (
        f"failing: {bad}; A2 residual {parts['A2 K1^2 K2^2 residual'][:1]}; "
        f"K1^4 K2^4 passes: {parts['A2 K1^4 K2^4']}")
    return passed, {"parts": parts, "summary": summary}


# ------------------------------------------------------------------ A4 oracle


def _z2_basis(n):
    return list(itertools.product((0, 1), repeat=n + 1))


def _z2_b(n):
    """Hochschild boundary C_n -> C_{n-1} of k[Z/2], exponents mod 2."""
    rows, cols = _z2_basis(n - 1), _z2_basis(n)
    idx = {k: i for i, k in enumerate(rows)}
    m = sympy.zeros(len(rows), len(cols))
    for j, a in enumerate(cols):
        for i in range(n):
            m[idx[a[:i] + ((a[i] + a[i + 1]) % 2,) + a[i + 2:]], j] += (-1) ** i
        m[idx[((a[n] + a[0]) % 2,) + a[1:n]], j] += (-1) ** n
    return m


def _z2_perm(n, image, sign):
    basis = _z2_basis(n)
    idx = {k: i for i, k in enumerate(basis)}
    m = sympy.zeros(len(basis), len(basis))
    for j, a in enumerate(basis):
        m[idx[image(a)], j] += sign
    return m


def _z2_y(n):
    # g* = g^-1 = g, reversal of the tail, sign (-1)^(n(n+1)/2)
    return _z2_perm(n, lambda a: (a[0],) + tuple(reversed(a[1:])), (-1) ** (n * (n + 1) // 2))


def _z2_t(n):
    return _z2_perm(n, lambda a: (a[n],) + a[:n], (-1) ** n)


def _cochain_dims(projectors, top):
    """dim H^n of the cochain complex (transposed boundaries) restricted to im P_n."""
    dims = []
    for n in range(top + 1):
        P = projectors(n)
        B_n = _z2_b(n + 1).T * P
        rank_prev = (_z2_b(n).T * projectors(n - 1)).rank() if n else 0
        dims.append(P.rank() - B_n.rank() - rank_prev)
    return dims


def oracle_z2_dual(kind):
    def proj(n):
        size = 2 ** (n + 1)
        I = sympy.eye(size)
        if kind == "hochschild":
            return I
        sign = 1 if kind.endswith("+") else -1
        P = (I + sign * _z2_y(n).T) / 2
        if kind.startswith("dihedral"):
            N = sympy.zeros(size, size)
            t = _z2_t(n).T
            tk = I
            for _ in range(n + 1):
                N += tk
                tk = tk * t
            P = P * N / (n + 1)
        return P

    return _cochain_dims(proj, 4)


def criterion_a4():
    D = dual_module(algebra_cyclic(build("group:Z2")))
    rows = {}
    ok = True
    for kind in ["hochschild", "hochschild+", "hochschild-", "dihedral+", "dihedral-"]:
        ours = homology(D, kind, range(5)).dims()
        oracle = oracle_z2_dual(kind)
        rows[kind] = {"package": ours, "oracle": oracle}
        ok = ok and ours == oracle
    hh = rows["hochschild"]["package"]
    ok = ok and hh[0] == 2 and hh[1:4] == [0, 0, 0]
    return ok, {"rows": rows, "summary": "; ".join(f"{k} {v['package']} (oracle {v['oracle']})"
                                                  for k, v in rows.items())}


# ------------------------------------------------------------------ A5


def criterion_a5():
    rows = {}
    ok = True
    for g in ["group:Z2", "group:Z3"]:
        M = hopf_homology_dihedral(build(g))
        plus = homology(M, "dihedral+", range(5)).dims()
        minus = homology(M, "dihedral-", range(5)).dims()
        rows[g] = {"+": plus, "-": minus}
        ok = ok and plus == [1, 0, 0, 0, 1] and minus == [0, 0, 1, 0, 0]
    return ok, {"rows": rows, "summary": "; ".join(f"{g} HC+ {r['+']} HC- {r['-']}"
                                                  for g, r in rows.items())}


# ------------------------------------------------------------------ A6


def criterion_a6():
    Z3 = build("group:Z3")
    C, CC = algebra_cyclic(Z3), hopf_homology_dihedral(Z3)
    tr, co = identity_coefficient(Z3.pres), grouplike_coaction(Z3)
    trace_sigma = tr({(): ONE})

    def g(v):
        return gamma(Z3.pres, co, tr, v)

    def th(v):
        return theta(Z3, (), v)

    bad = {"gamma theta": 0, "d": 0, "s": 0, "t": 0, "w": 0, "b": 0}
    checked = 0
    for n in range(4):
        for k in CC.basis(n):
            x = {k: ONE}
            if g(th(x)) != {kk: trace_sigma * c for kk, c in x.items()}:
                bad["gamma theta"] += 1
            for i in range(n + 1):
                if n and th(CC.d(n, i, x)) != C.d(n, i, th(x)):
                    bad["d"] += 1
                if th(CC.s(n, i, x)) != C.s(n, i, th(x)):
                    bad["s"] += 1
            if th(CC.t(n, x)) != C.t(n, th(x)):
                bad["t"] += 1
            if th(CC.w(n, x)) != C.w(n, th(x)):
                bad["w"] += 1
            if th(hochschild_b(CC, n, x)) != hochschild_b(C, n, th(x)):
                bad["b"] += 1
            checked += 1
        for k in C.basis(n):
            x = {k: ONE}
            for i in range(n + 1):
                if n and g(C.d(n, i, x)) != CC.d(n, i, g(x)):
                    bad["d"] += 1
                if g(C.s(n, i, x)) != CC.s(n, i, g(x)):
                    bad["s"] += 1
            if g(C.t(n, x)) != CC.t(n, g(x)):
                bad["t"] += 1
            if g(C.w(n, x)) != CC.w(n, g(x)):
                bad["w"] += 1
            if g(hochschild_b(C, n, x)) != hochschild_b(CC, n, g(x)):
                bad["b"] += 1
            checked += 1
    ok = not any(bad.values())
    return ok, {"failures": bad, "checked": checked,
                "summary": f"{checked} basis elements of CC_n and C_n, n <= 3, failures {bad}"}


# ------------------------------------------------------------------ A7


def criterion_a7():
    uq = build("uq_sl2")
    P = uq.pres
    K2 = P.word_from_powers([("K", 2)])
    M = hopf_cm_cocyclic(uq, uq.extras["mpi"])
    ek, kf = P.parse_element("E*K").terms, P.parse_element("K*F").terms
    x, y = expand([ek]), expand([kf])
    b_ek = hochschild_b(M, 1, x)
    dims = {N: skew_primitive_space(uq, K2, N)["dimension"] for N in (3, 4, 5)}
    basis_ok = all(
        [set(v) for v in skew_primitive_space(uq, K2, N)["basis"]] == [set(ek), set(kf)]
        for N in (3, 4, 5))
    w_ek = M.w(1, x) == {k: -c for k, c in y.items()}
    minus, plus = _sub(x, y), {**x, **y}
    eig = M.w(1, minus) == minus and M.w(1, plus) == {k: -c for k, c in plus.items()}
    e1 = {"e1(1,2)": len(e1_basis(1, 2)), "e1(1,3)": len(e1_basis(1, 3)),
          "e1(2,5)": len(e1_basis(2, 5))}
    ok = (not b_ek and all(d == 2 for d in dims.values()) and basis_ok and w_ek and eig
          and e1 == {"e1(1,2)": 2, "e1(1,3)": 0, "e1(2,5)": 0})
    return ok, {"b(EK)": len(b_ek), "dims": dims, "basis": basis_ok, "w(EK) = -KF": w_ek,
                "eigenvectors": eig, "e1": e1,
                "summary": f"b(EK)=0: {not b_ek}; skew-primitive dims {dims}; w1(EK)=-KF: {w_ek}; "
                           f"EK-KF fixed, EK+KF negated: {eig}; {e1}"}


# ------------------------------------------------------------------ A8


def criterion_a8():
    uq = build("uq_sl2")
    P = uq.pres
    rng = random.Random(SEED)
    sigmas = [(), P.word_from_powers([("K", 1)]), P.word_from_powers([("K", 2)])]

    def rand_cochain(p):
        legs = [random_element(P, rng, max_len=2, terms=2) for _ in range(p)]
        return HochschildCochain(rng.choice(sigmas), p, expand(legs) if p else {(): ONE})

    leibniz = star = 0
    for _ in range(100):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        psi, phi = rand_cochain(p), rand_cochain(q)
        lhs = cochain_differential(uq, cup(uq, psi, phi)).vec
        rhs = dict(cup(uq, cochain_differential(uq, psi), phi).vec)
        for k, c in cup(uq, psi, cochain_differential(uq, phi)).vec.items():
            _add_into(rhs, k, (-1) ** p * c)
        if lhs != rhs:
            leibniz += 1
        if cochain_star(uq, cup(uq, psi, phi)).vec != cup(uq, cochain_star(uq, phi),
                                                            cochain_star(uq, psi)).vec:
            star += 1
    ok = leibniz == 0 and star == 0
    return ok, {"leibniz_failures": leibniz, "star_failures": star,
                "summary": f"100 pairs, bidegrees <= (2,2): Leibniz failures {leibniz}, "
                           f"star failures {star}"}


# ------------------------------------------------------------------ A9


def criterion_a9():
    q = Fraction(3, 4)
    suq2 = suq2_with_roots(q)
    rel_ok = coact_ok = True
    for s in (Fraction(0), Fraction(1, 2)):
        z = podles_embedding(suq2, s)
        rel_ok = rel_ok and all(not r for r in podles_relation_residuals(suq2.pres, z, q, s, 1 + s * s))
        coact_ok = coact_ok and all(not r for r in coaction_residuals(suq2, z))
    u = podles_unitary(suq2, podles_embedding(suq2, 0))
    unitary = (u.dagger() @ u).is_identity() and (u @ u.dagger()).is_identity()
    res = podles_chern(q, ladder=(2, 3, 4), haar_bound=6)
    hp = Fraction(res["h_values"]["h(z1* z1)"])
    hm = Fraction(res["h_values"]["h(z-1* z-1)"])
    coef, closed = Fraction(res["coefficient"]), Fraction(res["closed_form"])
    ok = (rel_ok and coact_ok and unitary and res["unitary_u"] and hp > 0 and hm > 0
          and coef != 0 and closed != 0 and res["nontrivial"])
    return ok, {"relations": rel_ok, "coaction": coact_ok, "unitary": unitary, "chern": res,
                "summary": f"relations {rel_ok}, coaction {coact_ok}, unitary {unitary}, "
                           f"h(z1*z1)={hp}, h(z-1*z-1)={hm}, gamma coefficient {coef}, "
                           f"closed form {closed} (ratio {res['ratio']}), "
                           f"ladder {[(r['bound'], r['boundary']) for r in res['ladder']]}"}


CRITERIA = {
    "A1": criterion_a1, "A2": criterion_a2, "A3": criterion_a3, "A4": criterion_a4,
    "A5": criterion_a5, "A6": criterion_a6, "A7": criterion_a7, "A8": criterion_a8,
    "A9": criterion_a9,
}


# ------------------------------------------------------------------ tests


@pytest.mark.parametrize("name", ["A1", "A2", "A4", "A5", "A6", "A7", "A8", "A9"])
def test_criterion(name, capsys):
    passed, details = CRITERIA[name]()
    _report(capsys, name, passed, details)
    assert passed, details


def test_a3_modular_pairs(capsys):
    passed, details = criterion_a3()
    _report(capsys, "A3", passed, details)
    parts = details["parts"]
    # everything except the A2 Cartan sub-claim, which is tracked separately
    assert parts["uq K^2"] and parts["uq K fails"] and parts["suq2 f1 (right twist)"]
    assert parts["A2 K1^4 K2^4"]
    assert parts["A2 K1^2 K2^2 residual"][0] == ("E1", "(-63/256)*E1")


@pytest.mark.xfail(strict=True, reason="on A2, K1^2 K2^2 conjugates E1 by q but S^2 scales it by q^2")
def test_a3_cartan_a2_k2_pair():
    assert _a3_parts()["A2 K1^2 K2^2"]


def test_a10_determinism(capsys):
    same, differ = [], []
    for name, fn in CRITERIA.items():
        first = FIRST_RUN.get(name)
        if first is None:
            first = json.dumps(fn()[1], sort_keys=True, default=str)
        again = json.dumps(fn()[1], sort_keys=True, default=str)
        (same if again == first else differ).append(name)
    passed = not differ
    with capsys.disabled():
        print(f"\nA10 {'PASS' if passed else 'FAIL'} tolerance=byte-identical JSON "
              f"re-ran {', '.join(CRITERIA)}; differing: {differ or 'none'}")
    assert passed, differ
