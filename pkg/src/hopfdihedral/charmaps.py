"""Characteristic maps, the cup product, matrices over *-algebras and Chern characters."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .catalog import (Builtin, build, podles_embedding, rho_coaction, solve_haar,
                      suq2_with_roots)
from .constructions import expand, hopf_hochschild, hopf_homology_dihedral
from .cyclicmod import Bicomplex, hochschild_b, is_nontrivial_class
from .hopf import HopfStructure
from .ncalg import Presentation, _add_into
from .scalars import ONE, ZERO, Scalar


class CharMapError(ValueError):
    pass


def _sum(pres: Presentation, parts) -> dict:
    out = {}
    for x in parts:
        for m, c in x.items():
            _add_into(out, m, c)
    return out


def _product(pres: Presentation, monos) -> dict:
    out = {(): ONE}
    for m in monos:
        out = pres.mul(out, m if isinstance(m, dict) else {m: ONE})
        if not out:
            break
    return out


# ------------------------------------------------------------- module algebras and chi_tau


def act_element(act, h: dict, a: dict) -> dict:
    out = {}
    for hm, c in h.items():
        for am, c2 in a.items():
            for m, c3 in act(hm, am).items():
                _add_into(out, m, c * c2 * c3)
    return out


def module_algebra_failures(H: Builtin, A: Builtin, act) -> list:
    """Pairs (h, a, b) of generators/basis monomials where h.(ab) != (h1.a)(h2.b)."""
    from .tensorspace import monomials_up_to

    mons_h = [(a,) for a in H.hopf.generator_letters()] + [()]
    mons_a = monomials_up_to(A.pres, 0 if all(f == 0 for f in A.pres.filt) else 1)
    bad = []
    for h in mons_h:
        if act(h, ()) != ({(): H.hopf.counit({h: ONE})} if H.hopf.counit({h: ONE}) else {}):
            bad.append((h, (), "unit"))
        for a, b in product(mons_a, repeat=2):
            lhs = act_element(act, {h: ONE}, A.pres.mul_mono(a, b))
            rhs = {}
            for (h1, h2), c in H.hopf.coproduct_mono(h).items():
                part = A.pres.mul(act(h1, a), act(h2, b))
                for m, c2 in part.items():
                    _add_into(rhs, m, c * c2)
            if lhs != rhs:
                bad.append((h, a, b))
    return bad


@dataclass
class InvariantTrace:
    """A functional tau on A (x) V given on monomials and coefficient labels."""

    pres: Presentation
    value: object  # (mono, label) -> Scalar

    def __call__(self, x: dict, label="v") -> Scalar:
        tot = ZERO
        for m, c in x.items():
            tot = tot + c * self.value(m, label)
        return tot


def identity_coefficient(pres: Presentation) -> InvariantTrace:
    """Coefficient of the unit monomial: the canonical trace on a group algebra."""
    return InvariantTrace(pres, lambda m, label: ONE if m == () else ZERO)


def chi_tau(H: Builtin, A: Builtin, act, tau: InvariantTrace, h_vec: dict, a_key: tuple) -> Scalar:
    """chi_tau(h^1 (x) ... (x) h^n)(a_0, ..., a_n) = tau(a_0 (h^1.a_1) ... (h^n.a_n)).

    h_vec keys may carry a trailing coefficient label (strings are labels).
    """
    tot = ZERO
    for key, c in h_vec.items():
        label = "v"
        if key and isinstance(key[-1], str):
            key, label = key[:-1], key[-1]
        if len(key) + 1 != len(a_key):
            raise CharMapError("degree mismatch between the Hopf and algebra tuples")
        parts = [{a_key[0]: ONE}] + [act(h, a) for h, a in zip(key, a_key[1:])]
        tot = tot + c * tau(_product(A.pres, parts), label)
    return tot


def chi_tau_cochain(H: Builtin, A: Builtin, act, tau: InvariantTrace, h_vec: dict,
                    basis) -> dict:
    """chi_tau(h) as a vector over the given basis of A^(n+1)."""
    out = {}
    for key in basis:
        v = chi_tau(H, A, act, tau, h_vec, key)
        if v:
            out[key] = v
    return out


def pairing(H: Builtin, A: Builtin, act, tau: InvariantTrace, x: dict, y: dict) -> Scalar:
    """<h^1 (x) ... (x) h^n (x) v | a_0 (x) ... (x) a_n>, extended bilinearly."""
    tot = ZERO
    for a_key, c in y.items():
        tot = tot + c * chi_tau(H, A, act, tau, x, a_key)
    return tot


# ------------------------------------------------------------- cup product


@dataclass(frozen=True)
class HochschildCochain:
    """An element of CH^degree(H, ^sigma k), keys are n-tuples of monomials."""

    sigma: tuple
    degree: int
    vec: dict


def _grouplikes_commute(H: HopfStructure, a: tuple, b: tuple) -> bool:
    return H.pres.mul_mono(a, b) == H.pres.mul_mono(b, a)


def cup(H: Builtin, psi: HochschildCochain, phi: HochschildCochain) -> HochschildCochain:
    """psi (x) (sigma_1 . phi) with the diagonal left action on the legs of phi."""
    pres = H.pres
    ((sig, c0),) = pres.mul_mono(psi.sigma, phi.sigma).items()
    if c0 != 1:
        raise CharMapError("product of group-likes is not a monomial")
    out = {}
    s1 = {psi.sigma: ONE}
    for k2, c2 in phi.vec.items():
        moved = expand([pres.mul(s1, {m: ONE}) for m in k2])
        for k1, c1 in psi.vec.items():
            for k3, c3 in moved.items():
                _add_into(out, k1 + k3, c1 * c2 * c3)
    return HochschildCochain(sig, psi.degree + phi.degree, out)


def cochain_differential(H: Builtin, x: HochschildCochain) -> HochschildCochain:
    M = hopf_hochschild(H, x.sigma)
    return HochschildCochain(x.sigma, x.degree + 1, hochschild_b(M, x.degree, x.vec))


def cochain_star(H: Builtin, x: HochschildCochain) -> HochschildCochain:
    """The involution sigma S^-1(h^n*) (x) ... (x) sigma S^-1(h^1*); needs commuting group-likes."""
    M = hopf_hochschild(H, x.sigma)
    return HochschildCochain(x.sigma, x.degree, M.w(x.degree, x.vec))


def check_star_compatible(H: Builtin, sigmas) -> None:
    for a in sigmas:
        for b in sigmas:
            if not _grouplikes_commute(H.hopf, a, b):
                raise CharMapError("the group-likes do not commute; the *-structure on the "
                                   "cup product is not available")


# ------------------------------------------------------------- gamma and theta


def gamma(A: Presentation, coact, trace, x: dict) -> dict:
    """gamma(a_0 (x) ... (x) a_n) = Tr(a_0 a_1<0> ... a_n<0>) a_1<1> (x) ... (x) a_n<1>.

    coact(mono) returns {(a_mono, h_mono): coef}; trace takes an element of A.
    """
    out = {}
    for key, c in x.items():
        splits = [list(coact(m).items()) for m in key[1:]]
        for combo in product(*splits):
            coef = c
            for _, c2 in combo:
                coef = coef * c2
            inner = _product(A, [key[0]] + [am for (am, _), _c in combo])
            v = trace(inner)
            if v:
                _add_into(out, tuple(hm for (_, hm), _c in combo), coef * v)
    return out


def grouplike_coaction(H: Builtin):
    """The coproduct as a right coaction of H on itself."""
    return lambda m: H.hopf.coproduct_mono(m)


def theta(H: Builtin, sigma: tuple, x: dict) -> dict:
    """S_sigma(h^1_(1) ... h^n_(1)) (x) h^1_(2) (x) ... (x) h^n_(2), with S_sigma = sigma S."""
    hopf, pres = H.hopf, H.pres
    for a in hopf.generator_letters():
        once = pres.mul({sigma: ONE}, hopf.antipode({(a,): ONE}))
        twice = pres.mul({sigma: ONE}, hopf.antipode(once))
        if twice != {(a,): ONE}:
            raise CharMapError(f"S_sigma^2 is not the identity on {pres.letter_name(a)}")
    out = {}
    for key, c in x.items():
        for combo in product(*[list(hopf.coproduct_mono(m).items()) for m in key]):
            coef = c
            for _, c2 in combo:
                coef = coef * c2
            head = pres.mul({sigma: ONE}, hopf.antipode(_product(pres, [m1 for (m1, _), _c in combo])))
            tail = tuple(m2 for (_, m2), _c in combo)
            for m, c3 in head.items():
                _add_into(out, (m,) + tail, coef * c3)
    return out


# ------------------------------------------------------------- matrices


class MatrixOverA:
    """A square matrix with entries in a *-algebra, and the sign of its form."""

    def __init__(self, pres: Presentation, entries, eps: int = 1):
        self.pres = pres
        self.entries = [[dict(e) for e in row] for row in entries]
        self.eps = eps
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise CharMapError("matrix is not square")

    @property
    def size(self) -> int:
        return len(self.entries)

    @staticmethod
    def identity(pres: Presentation, size: int, eps: int = 1) -> "MatrixOverA":
        return MatrixOverA(pres, [[{(): ONE} if i == j else {} for j in range(size)]
                                  for i in range(size)], eps)

    def __matmul__(self, other: "MatrixOverA") -> "MatrixOverA":
        n, p = self.size, self.pres
        rows = [[_sum(p, [p.mul(self.entries[i][k], other.entries[k][j]) for k in range(n)])
                 for j in range(n)] for i in range(n)]
        return MatrixOverA(p, rows, self.eps)

    def dagger(self) -> "MatrixOverA":
        n = self.size
        return MatrixOverA(self.pres, [[self.pres.star(self.entries[j][i]) for j in range(n)]
                                       for i in range(n)], self.eps)

    def is_identity(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == ({(): ONE} if i == j else {})
                   for i in range(n) for j in range(n))

    def scaled(self, s) -> "MatrixOverA":
        s = Scalar.coerce(s)
        return MatrixOverA(self.pres, [[{m: s * c for m, c in e.items()} for e in row]
                                       for row in self.entries], self.eps)


def kron_scalar(block, m: MatrixOverA) -> MatrixOverA:
    """block (a matrix of rationals) tensored with m."""
    k, n = len(block), m.size
    rows = [[{} for _ in range(k * n)] for _ in range(k * n)]
    for a, b in product(range(k), repeat=2):
        c = Scalar.coerce(block[a][b])
        if not c:
            continue
        for i, j in product(range(n), repeat=2):
            rows[a * n + i][b * n + j] = {mm: c * cc for mm, cc in m.entries[i][j].items()}
    return MatrixOverA(m.pres, rows, m.eps)


def matrix_star_adjoint(m: MatrixOverA) -> MatrixOverA:
    """[[A, B], [C, D]] -> [[D^dag, eps B^dag], [eps C^dag, A^dag]]."""
    if m.size % 2:
        raise CharMapError("the adjoint for the form eps J needs an even size")
    h = m.size // 2
    d = m.dagger().entries  # d[i][j] = entries[j][i]*
    eps = Scalar(m.eps)
    out = [[{} for _ in range(m.size)] for _ in range(m.size)]
    for i, j in product(range(h), repeat=2):
        out[i][j] = d[h + i][h + j]                                    # D^dag
        out[i][h + j] = {k: eps * c for k, c in d[h + i][j].items()}   # eps B^dag
        out[h + i][j] = {k: eps * c for k, c in d[i][h + j].items()}   # eps C^dag
        out[h + i][h + j] = d[i][j]                                    # A^dag
    return MatrixOverA(m.pres, out, m.eps)


def generalized_trace(mats) -> dict:
    """Sum over indices of (m_0)_{i0 i1} (x) (m_1)_{i1 i2} (x) ... (x) (m_k)_{ik i0}."""
    n = mats[0].size
    k = len(mats)
    out = {}
    for idx in product(range(n), repeat=k):
        legs = [mats[r].entries[idx[r]][idx[(r + 1) % k]] for r in range(k)]
        if any(not leg for leg in legs):
            continue
        for key, c in expand(legs).items():
            _add_into(out, key, c)
    return out


def chern0(p: MatrixOverA, ell: int) -> dict:
    """Tr(p (x) ... (x) p) with 2 ell + 1 factors, an element of C_{2 ell}(A)."""
    if not (p @ p).entries == p.entries:
        raise CharMapError("chern0 needs an idempotent matrix")
    return generalized_trace([p] * (2 * ell + 1))


def chern1_unitary(m: MatrixOverA, inverse: MatrixOverA | None = None) -> dict:
    """Tr(M^-1 (x) M) in C_1(A); the inverse defaults to the eps J-adjoint."""
    inv = inverse if inverse is not None else matrix_star_adjoint(m)
    if not (inv @ m).is_identity():
        raise CharMapError("the supplied inverse does not satisfy M^-1 M = I")
    return generalized_trace([inv, m])


def connes_cycle(M, n: int, x: dict) -> bool:
    """b(x) = 0 modulo the image of 1 - t (Connes' cyclic complex), in degree n >= 1."""
    from .cyclicmod import signed_t
    from .tensorspace import RowReducer

    bx = hochschild_b(M, n, x)
    if not bx:
        return True
    keys, frontier = set(bx), list(bx)
    while frontier:
        k = frontier.pop()
        for k2 in M.cyclic(n - 1, k):
            if k2 not in keys:
                keys.add(k2)
                frontier.append(k2)
    red = RowReducer()
    for k in sorted(keys, key=repr):
        v = {k: ONE}
        img = dict(v)
        for k2, c in signed_t(M, n - 1, v).items():
            _add_into(img, k2, -c)
        red.insert(img)
    return red.contains(bx)


# ------------------------------------------------------------- Podles sphere


def h1_coefficient(circle: Builtin, x: dict) -> Scalar:
    """The functional sigma^a -> a on CC_1(O(U(1))); it vanishes on boundaries."""
    s, si = circle.pres.letter("sigma"), circle.pres.letter("sigma^-1")
    tot = ZERO
    for key, c in x.items():
        (m,) = key
        tot = tot + c * (sum(1 for a in m if a == s) - sum(1 for a in m if a == si))
    return tot


def podles_unitary(suq2: Builtin, z: dict) -> MatrixOverA:
    qp = suq2.extras["qparam"]
    q, r, ri = Scalar(qp.q), Scalar(qp.root), Scalar(qp.root_inv)

    def sc(c, x):
        return {m: c * v for m, v in x.items()}

    return MatrixOverA(suq2.pres, [[sc(q.inverse(), z[0]), sc(ri, z[1])],
                                   [sc(r, z[-1]), sc(q, z[0])]])


def podles_chern(q=Fraction(3, 4), n: int = 1, eps: int = 1, ladder=(2, 3, 4),
                 haar_bound: int = 6, identity: bool = False) -> dict:
    """The odd Chern class of M = [[0, eps I_n (x) u], [eps I_n (x) u, 0]] on the standard sphere.

    Returns h-values, the sigma-coefficient of gamma(Tr(M^-1 (x) M)), the
    closed form in terms of h(z_1* z_1), h(z_-1* z_-1), and the ladder.
    """
    suq2 = suq2_with_roots(q)
    pres = suq2.pres
    circle = build("o_u1")
    z = podles_embedding(suq2, 0)
    haar = solve_haar(suq2, haar_bound)
    u = podles_unitary(suq2, z)
    unitary = (u.dagger() @ u).is_identity() and (u @ u.dagger()).is_identity()
    if identity:
        m = MatrixOverA.identity(pres, 4 * n, eps)
        inv = m
    else:
        block = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            block[i][n + i] = eps
            block[n + i][i] = eps
        m = kron_scalar(block, u)
        m.eps = eps
        inv = matrix_star_adjoint(m)
    chain = chern1_unitary(m, inv)

    def coact(mono):
        return rho_coaction(suq2, circle, {mono: ONE})

    image = gamma(pres, coact, haar, chain)
    coefficient = h1_coefficient(circle, image)
    h_plus = haar(pres.mul(pres.star(z[1]), z[1]))
    h_minus = haar(pres.mul(pres.star(z[-1]), z[-1]))
    qs = Scalar(qp_q(suq2))
    closed = 2 * n * ((1 + qs ** -2) * h_plus - (1 + qs * qs) * h_minus)

    C = hopf_homology_dihedral(circle)
    cycle = {(0, k): c for k, c in image.items()}
    B = Bicomplex(C, "dihedral+", 2)
    cycle = {k: c for k, c in B.project(1, cycle).items()}
    if cycle:
        verdict = is_nontrivial_class(C, "dihedral+", 1, cycle, list(ladder))
    else:
        verdict = {"nontrivial": False, "ladder": [{"bound": N, "boundary": True} for N in ladder],
                   "stable": True}
    return {
        "q": str(Fraction(qs.re)), "n": n, "eps": eps, "identity": identity,
        "unitary_u": unitary,
        "h_values": {"h(1)": str(haar({(): ONE})), "h(z1* z1)": str(h_plus),
                     "h(z-1* z-1)": str(h_minus)},
        "gamma_chain": {circle.pres.format_word(k[0]): str(c)
                        for k, c in sorted(image.items(), key=lambda kv: circle.pres.order_key(kv[0][0]))},
        "coefficient": str(coefficient),
        "closed_form": str(closed),
        "ratio": str(coefficient / closed) if closed and coefficient else None,
        "nontrivial": verdict["nontrivial"],
        "ladder": verdict["ladder"],
    }


def qp_q(b: Builtin) -> Fraction:
    return b.extras["qparam"].q
