"""Concrete (co)cyclic and (co)dihedral modules built from algebras and Hopf algebras.

Keys are tuples of normal-form monomials (one per tensor leg).  Modules
over finite group algebras enumerate their full bases; the others are
explored through seeded random samples or truncated bases.
"""

from __future__ import annotations

from dataclasses import replace
from itertools import product

from .catalog import Builtin
from .cyclicmod import DihedralModuleSpec, lin
from .hopf import HopfStructure, ModularPair
from .ncalg import Presentation, _add_into, random_element
from .scalars import ONE, Scalar
from .tensorspace import monomials_up_to, truncated_basis


class ConstructionError(ValueError):
    pass


# ------------------------------------------------------------- tensor helpers


def expand(legs) -> dict:
    """Tensor dict from a list of per-leg elements."""
    out = {(): ONE}
    for leg in legs:
        nxt = {}
        for k, c in out.items():
            for m, c2 in leg.items():
                _add_into(nxt, k + (m,), c * c2)
        out = nxt
    return out


def legwise_mul(pres: Presentation, x: dict, y: dict) -> dict:
    """Product in the tensor power algebra (same number of legs)."""
    out = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            part = expand([pres.mul_mono(a, b) for a, b in zip(k1, k2)])
            for k, c in part.items():
                _add_into(out, k, c1 * c2 * c)
    return out


def scale(x: dict, s) -> dict:
    s = Scalar.coerce(s)
    return {k: s * c for k, c in x.items() if s * c}


def _basis_fn(pres: Presentation, extra_legs: int, finite: bool):
    def basis(n, policy=None):
        legs = n + extra_legs
        if finite:
            mons = monomials_up_to(pres, 0)
            return list(product(mons, repeat=legs))
        if policy is None:
            raise ConstructionError("an infinite module needs a truncation policy")
        return truncated_basis(pres, legs, policy)

    return basis


def _sampler_fn(pres: Presentation, extra_legs: int, max_len: int = 2):
    def sampler(n, rng):
        legs = [random_element(pres, rng, max_len=max_len, terms=2) for _ in range(n + extra_legs)]
        return expand([leg.terms if hasattr(leg, "terms") else leg for leg in legs])

    return sampler


def is_finite(b: Builtin) -> bool:
    return all(f == 0 for f in b.pres.filt) if b.pres.filt else False


# ------------------------------------------------------------- algebra cyclic module


def algebra_cyclic(b: Builtin, star: bool = True) -> DihedralModuleSpec:
    """C_n(A) = A^(n+1) with the cyclic structure; omega from the *-structure."""
    pres = b.pres
    mul = pres.mul_mono

    def face(n, i, key):
        if i < n:
            prod_ = mul(key[i], key[i + 1])
            return {key[:i] + (m,) + key[i + 2:]: c for m, c in prod_.items()}
        prod_ = mul(key[n], key[0])
        return {(m,) + key[1:n]: c for m, c in prod_.items()}

    def degeneracy(n, j, key):
        return {key[: j + 1] + ((),) + key[j + 1:]: ONE}

    def cyclic(n, key):
        return {(key[n],) + key[:n]: ONE}

    def involution(n, key):
        legs = [pres.star_mono(key[0])] + [pres.star_mono(m) for m in reversed(key[1:])]
        return expand(legs)

    finite = is_finite(b)
    if star and not pres.star_map:
        raise ConstructionError(f"{pres.name} has no *-structure; the dihedral module needs one")
    return DihedralModuleSpec(
        name=f"C({b.name})", variance="module", face=face, degeneracy=degeneracy,
        cyclic=cyclic, involution=involution if star else None,
        basis=_basis_fn(pres, 1, finite), sampler=None if finite else _sampler_fn(pres, 1),
        finite=finite, meta={"legs": "n+1", "omega": "a0* (x) an* (x) ... (x) a1*"})


def dual_module(M: DihedralModuleSpec, name: str | None = None) -> DihedralModuleSpec:
    """The cochain module Hom(M_n, k) of a finite chain module, by transposition."""
    if not (M.chain and M.finite):
        raise ConstructionError("transposition needs a finite chain module")
    cache: dict = {}

    def transpose(tag, src_degree, op):
        # op acts on basis keys of degree src_degree; returns dual map on target keys
        key = (tag, src_degree)
        if key not in cache:
            table: dict = {}
            for t in M.basis(src_degree):
                for s, c in op(t).items():
                    table.setdefault(s, {})[t] = c
            cache[key] = table
        return cache[key]

    def face(n, i, key):
        return dict(transpose(("d", i), n, lambda t: M.face(n, i, t)).get(key, {}))

    def degeneracy(n, j, key):
        return dict(transpose(("s", j), n, lambda t: M.degeneracy(n, j, t)).get(key, {}))

    def cyclic(n, key):
        return dict(transpose("t", n, lambda t: M.cyclic(n, t)).get(key, {}))

    def involution(n, key):
        return dict(transpose("w", n, lambda t: M.involution(n, t)).get(key, {}))

    return DihedralModuleSpec(
        name=name or f"dual {M.name}", variance="comodule", face=face, degeneracy=degeneracy,
        cyclic=cyclic if M.cyclic else None, involution=involution if M.involution else None,
        basis=M.basis, finite=True, meta={"dual_of": M.name})


# ------------------------------------------------------------- coalgebra Hochschild


def coalgebra_hochschild(b: Builtin, sigma_left: tuple = (), sigma_right: tuple = ()) -> DihedralModuleSpec:
    """C^n(C, V) = V (x) C^n for a one-dimensional bicomodule V.

    V has left coaction v -> sigma_left (x) v and right coaction
    v -> v (x) sigma_right.  The coalgebra involution is S composed with *.
    """
    pres, H = b.pres, b.hopf
    for g in (sigma_left, sigma_right):
        if not H.is_grouplike(g):
            raise ConstructionError(f"{pres.format_word(g)} is not group-like")
    if H.coalgebra_star({sigma_left: ONE}) != {sigma_right: ONE}:
        raise ConstructionError("V is not a *-bicomodule: the right coaction must be the "
                                "involution of the left one")

    def face(n, i, key):
        if i == 0:
            return {(sigma_right,) + key: ONE}
        if i == n:
            return {key + (sigma_left,): ONE}
        out = {}
        for (m1, m2), c in H.coproduct_mono(key[i - 1]).items():
            _add_into(out, key[: i - 1] + (m1, m2) + key[i:], c)
        return out

    def degeneracy(n, j, key):
        e = H.counit({key[j]: ONE})
        return {key[:j] + key[j + 1:]: e} if e else {}

    def involution(n, key):
        return expand([H.coalgebra_star({m: ONE}) for m in reversed(key)])

    finite = is_finite(b)
    return DihedralModuleSpec(
        name=f"CH({b.name})", variance="comodule", face=face, degeneracy=degeneracy,
        involution=involution, basis=_basis_fn(pres, 0, finite),
        sampler=None if finite else _sampler_fn(pres, 0), finite=finite,
        meta={"sigma_left": pres.format_word(sigma_left), "sigma_right": pres.format_word(sigma_right)})


# ------------------------------------------------------------- Connes-Moscovici


def _check_mpi(H: HopfStructure, pair: ModularPair, samples=20, seed=0):
    rep = H.verify_mpi(pair, samples=samples, seed=seed)
    if not rep["pass"]:
        first = rep["residuals"][0]
        raise ConstructionError(f"({pair.delta}, {H.pres.format_word(pair.sigma)}) is not a "
                                f"modular pair in involution: residual on {first[0]}: {first[1]}")


def hopf_cm_cocyclic(b: Builtin, pair: ModularPair, check: bool = True) -> DihedralModuleSpec:
    """The cocyclic module on H^n with its dihedral involution."""
    pres, H = b.pres, b.hopf
    sigma, delta = pair.sigma, pair.delta
    if check:
        _check_mpi(H, pair)
    if pres.star_mono(sigma) != {sigma: ONE}:
        raise ConstructionError("the involution needs sigma* = sigma")

    def face(n, i, key):
        if i == 0:
            return {((),) + key: ONE}
        if i == n:
            return {key + (sigma,): ONE}
        out = {}
        for (m1, m2), c in H.coproduct_mono(key[i - 1]).items():
            _add_into(out, key[: i - 1] + (m1, m2) + key[i:], c)
        return out

    def degeneracy(n, j, key):
        e = H.counit({key[j]: ONE})
        return {key[:j] + key[j + 1:]: e} if e else {}

    def cyclic(n, key):
        if n == 0:
            return {key: ONE}
        sd = H.twisted_antipode({key[0]: ONE}, delta)
        spread = H.coproduct(sd, n) if n > 1 else {(m,): c for m, c in sd.items()}
        return legwise_mul(pres, spread, {key[1:] + (sigma,): ONE})

    def involution(n, key):
        legs = []
        for m in reversed(key):
            x = H.antipode(pres.star_mono(m), -1)
            legs.append(pres.mul({sigma: ONE}, x))
        return expand(legs)

    finite = is_finite(b)
    return DihedralModuleSpec(
        name=f"CM({b.name}; {pres.format_word(sigma)}, {delta})", variance="comodule",
        face=face, degeneracy=degeneracy, cyclic=cyclic, involution=involution,
        basis=_basis_fn(pres, 0, finite), sampler=None if finite else _sampler_fn(pres, 0),
        finite=finite, meta={"sigma": pres.format_word(sigma), "delta": delta})


def hopf_hochschild(b: Builtin, sigma: tuple) -> DihedralModuleSpec:
    """CH(H, ^sigma k): the cofaces and involution of the module above, no cyclic operator."""
    M = hopf_cm_cocyclic(b, ModularPair("eps", sigma), check=False)
    return replace(M, name=f"CH({b.name}; {b.pres.format_word(sigma)})", cyclic=None,
                   meta={"sigma": b.pres.format_word(sigma)})


# ------------------------------------------------------------- coefficients


class Coefficient:
    """A finite-dimensional left module/comodule V with a real involution.

    coaction(label) -> {(mono, label'): coef}, action(mono, label) -> {label': coef}.
    """

    def __init__(self, H: HopfStructure, labels, coaction, action, star=None, name="V"):
        self.H = H
        self.labels = list(labels)
        self.coaction = coaction
        self.action = action
        self.star = star or (lambda label: {label: ONE})
        self.name = name

    def act(self, x: dict, label) -> dict:
        out = {}
        for m, c in x.items():
            for l2, c2 in self.action(m, label).items():
                _add_into(out, l2, c * c2)
        return out

    def stability_witness(self):
        """A label violating v(-1) . v(0) = v, or None."""
        for label in self.labels:
            out = {}
            for (m, l2), c in self.coaction(label).items():
                for l3, c3 in self.action(m, l2).items():
                    _add_into(out, l3, c * c3)
            if out != {label: ONE}:
                return label
        return None


def mpi_coefficient(b: Builtin, pair: ModularPair) -> Coefficient:
    """One-dimensional V: coaction v -> sigma (x) v, action through delta composed with S^-1.

    With this action the coefficient module reproduces the Connes-Moscovici
    module of the pair exactly.
    """
    H = b.hopf

    def coaction(label):
        return {(pair.sigma, label): ONE}

    def action(m, label):
        v = H.char(pair.delta, H.antipode({m: ONE}, -1))
        return {label: v} if v else {}

    return Coefficient(H, ["v"], coaction, action, name=f"k({b.pres.format_word(pair.sigma)}, {pair.delta})")


def _iterated_coaction(V: Coefficient, label, times: int) -> dict:
    """v -> v(-times) (x) ... (x) v(-1) (x) v(0), keys (monos..., label)."""
    out = {(label,): ONE}
    for _ in range(times):
        nxt = {}
        for key, c in out.items():
            for (m, l2), c2 in V.coaction(key[-1]).items():
                _add_into(nxt, key[:-1] + (m, l2), c * c2)
        # coassociativity: coacting again on v(0) splits off the next leg
        out = nxt
    return out


def hopf_paracyclic_with_coeff(b: Builtin, V: Coefficient, star: bool = True) -> DihedralModuleSpec:
    """The cocyclic module on H^n (x) V paired with CC^H(A, V); keys legs + (label,)."""
    pres, H = b.pres, b.hopf
    witness = V.stability_witness()
    if witness is not None:
        raise ConstructionError(f"coefficient {V.name} is not stable at {witness}")

    def face(n, i, key):
        legs, label = key[:-1], key[-1]
        if i == 0:
            return {((),) + legs + (label,): ONE}
        if i == n:
            return {legs + (m, l2): c for (m, l2), c in V.coaction(label).items()}
        out = {}
        for (m1, m2), c in H.coproduct_mono(legs[i - 1]).items():
            _add_into(out, legs[: i - 1] + (m1, m2) + legs[i:] + (label,), c)
        return out

    def degeneracy(n, j, key):
        e = H.counit({key[j]: ONE})
        return {key[:j] + key[j + 1:]: e} if e else {}

    def cyclic(n, key):
        legs, label = key[:-1], key[-1]
        if n == 0:
            return {key: ONE}
        # S(h1_(n+1)) h2 (x) ... (x) S(h1_(3)) hn (x) S(h1_(2)) v(-1) (x) S(h1_(1)) . v(0)
        out = {}
        for split, c in H.coproduct({legs[0]: ONE}, n + 1).items():
            first, rest = split[0], split[1:]
            for (vm, vl), cv in V.coaction(label).items():
                tail = legs[1:] + (vm,)
                parts = []
                for piece, target in zip(reversed(rest), tail):
                    parts.append(pres.mul(H.antipode({piece: ONE}), {target: ONE}))
                acted = V.act(H.antipode({first: ONE}), vl)
                for k, ck in expand(parts).items():
                    for l3, c3 in acted.items():
                        _add_into(out, k + (l3,), c * cv * ck * c3)
        return out

    def involution(n, key):
        legs, label = key[:-1], key[-1]
        out = {}
        for lab_star, cs in V.star(label).items():
            for co, cc in _iterated_coaction(V, lab_star, n).items():
                vs, v0 = co[:-1], co[-1]
                # vs = (v(-n), ..., v(-1)); pair v(-k) with h^k, reversed
                parts = []
                for k in range(n, 0, -1):
                    x = H.antipode(pres.star_mono(legs[k - 1]), -1)
                    parts.append(pres.mul({vs[n - k]: ONE}, x))
                for t, ct in expand(parts).items():
                    _add_into(out, t + (v0,), cs * cc * ct)
        return out

    finite = is_finite(b)
    basis0 = _basis_fn(pres, 0, finite)

    def basis(n, policy=None):
        return [k + (lab,) for k in basis0(n, policy) for lab in V.labels]

    def sampler(n, rng):
        x = _sampler_fn(pres, 0)(n, rng)
        return {k + (V.labels[0],): c for k, c in x.items()}

    return DihedralModuleSpec(
        name=f"CC_H({b.name}, {V.name})", variance="comodule", face=face, degeneracy=degeneracy,
        cyclic=cyclic, involution=involution if star else None, basis=basis,
        sampler=None if finite else sampler, finite=finite, meta={"coefficient": V.name})


def module_algebra_paracyclic(A: Builtin, H: HopfStructure, act, V: Coefficient) -> DihedralModuleSpec:
    """The para-cyclic chain module A^(n+1) (x) V; act(h_mono, a_mono) -> element of A."""
    pres = A.pres

    def act_el(x: dict, a: tuple) -> dict:
        out = {}
        for m, c in x.items():
            for a2, c2 in act(m, a).items():
                _add_into(out, a2, c * c2)
        return out

    def face(n, i, key):
        legs, label = key[:-1], key[-1]
        if i < n:
            return {legs[:i] + (m,) + legs[i + 2:] + (label,): c
                    for m, c in pres.mul_mono(legs[i], legs[i + 1]).items()}
        out = {}
        for (hm, l2), c in V.coaction(label).items():
            moved = pres.mul(act_el({hm: ONE}, legs[n]), {legs[0]: ONE})
            for m, c2 in moved.items():
                _add_into(out, (m,) + legs[1:n] + (l2,), c * c2)
        return out

    def degeneracy(n, j, key):
        return {key[: j + 1] + ((),) + key[j + 1:]: ONE}

    def cyclic(n, key):
        legs, label = key[:-1], key[-1]
        out = {}
        for (hm, l2), c in V.coaction(label).items():
            for m, c2 in act_el({hm: ONE}, legs[n]).items():
                _add_into(out, (m,) + legs[:n] + (l2,), c * c2)
        return out

    finite = is_finite(A)
    basis0 = _basis_fn(pres, 1, finite)

    def basis(n, policy=None):
        return [k + (lab,) for k in basis0(n, policy) for lab in V.labels]

    return DihedralModuleSpec(
        name=f"CC^H({A.name}, {V.name})", variance="module", face=face, degeneracy=degeneracy,
        cyclic=cyclic, basis=basis, finite=finite, paracyclic=True)


# ------------------------------------------------------------- dual Hopf-dihedral


def hopf_homology_dihedral(b: Builtin, pair: ModularPair | None = None) -> DihedralModuleSpec:
    """CC_n(H; sigma, delta) = H^n with faces, tau and omega of the dual theory."""
    pres, H = b.pres, b.hopf
    pair = pair or ModularPair("eps", ())
    sigma, delta = pair.sigma, pair.delta
    sig_inv = H.inverse_grouplike(sigma)
    if pres.star_mono(sigma) != {sig_inv: ONE}:
        raise ConstructionError("the dual involution needs sigma* = sigma^-1")
    for a in H.generator_letters():
        if H.char(delta, pres.star_mono((a,))) != H.char_mono(delta, (a,)).conj():
            raise ConstructionError(f"delta is not real on {pres.letter_name(a)}")

    def cstar(m):
        return H.coalgebra_star({m: ONE})

    def face(n, i, key):
        if i == 0:
            e = H.counit({key[0]: ONE})
            return {key[1:]: e} if e else {}
        if i == n:
            e = H.char_mono(delta, key[-1])
            return {key[:-1]: e} if e else {}
        return {key[: i - 1] + (m,) + key[i + 1:]: c for m, c in pres.mul_mono(key[i - 1], key[i]).items()}

    def degeneracy(n, j, key):
        return {key[:j] + ((),) + key[j:]: ONE}

    def cyclic(n, key):
        if n == 0:
            return {key: ONE}
        out = {}
        splits = [H.coproduct_mono(m) for m in key]
        for combo in product(*[list(s.items()) for s in splits]):
            coef = ONE
            firsts, seconds = [], []
            for (m1, m2), c in combo:
                coef = coef * c
                firsts.append(m1)
                seconds.append(m2)
            coef = coef * H.char_mono(delta, seconds[-1])
            if not coef:
                continue
            prod_ = {(): ONE}
            for m in firsts:
                prod_ = pres.mul(prod_, {m: ONE})
            head = pres.mul({sigma: ONE}, H.antipode(prod_))
            for m, c in head.items():
                _add_into(out, (m,) + tuple(seconds[:-1]), coef * c)
        return out

    def involution(n, key):
        if n == 0:
            return {key: ONE}
        out = {}
        splits = [H.coproduct_mono(m) for m in key]
        for combo in product(*[list(s.items()) for s in splits]):
            coef = ONE
            for _, c in combo:
                coef = coef * c
            firsts = {(): ONE}
            for (m1, _), _c in combo:
                firsts = pres.mul(firsts, cstar(m1))
            coef = coef * H.char(delta, firsts)
            if not coef:
                continue
            legs = [H.antipode(cstar(m2), -1) for (_, m2), _c in reversed(combo)]
            for k, c in expand(legs).items():
                _add_into(out, k, coef * c)
        return out

    finite = is_finite(b)
    return DihedralModuleSpec(
        name=f"CC({b.name}; {pres.format_word(sigma)}, {delta})", variance="module",
        face=face, degeneracy=degeneracy, cyclic=cyclic, involution=involution,
        basis=_basis_fn(pres, 0, finite), sampler=None if finite else _sampler_fn(pres, 0),
        finite=finite, meta={"sigma": pres.format_word(sigma), "delta": delta,
                             "coalgebra_star": "S composed with *"})


# ------------------------------------------------------------- path space


def path_space(b: Builtin) -> DihedralModuleSpec:
    """E H_n = H^(n+1) for cocommutative H, with tau and omega."""
    pres, H = b.pres, b.hopf
    if not H.is_cocommutative():
        raise ConstructionError(f"{b.name} is not cocommutative; the path space needs it")

    def face(n, i, key):
        if i < n:
            return {key[:i] + (m,) + key[i + 2:]: c for m, c in pres.mul_mono(key[i], key[i + 1]).items()}
        e = H.counit({key[n]: ONE})
        return {key[:n]: e} if e else {}

    def degeneracy(n, j, key):
        return {key[: j + 1] + ((),) + key[j + 1:]: ONE}

    def cyclic(n, key):
        if n == 0:
            return {key: ONE}
        out = {}
        splits = [H.coproduct({m: ONE}, 3) for m in key[1:n]] + [H.coproduct_mono(key[n])]
        for combo in product(*[list(s.items()) for s in splits]):
            coef = ONE
            for _, c in combo:
                coef = coef * c
            head = {key[0]: ONE}
            mid = {(): ONE}
            for legs, _c in combo:
                head = pres.mul(head, {legs[0]: ONE})
                mid = pres.mul(mid, {legs[1]: ONE})
            tail = [{legs[2]: ONE} for legs, _c in combo[:-1]]
            for k, c in expand([head, H.antipode(mid)] + tail).items():
                _add_into(out, k, coef * c)
        return out

    def involution(n, key):
        if n == 0:
            return {key: ONE}
        out = {}
        splits = [H.coproduct_mono(m) for m in key[1:]]
        for combo in product(*[list(s.items()) for s in splits]):
            coef = ONE
            head = {key[0]: ONE}
            for (m1, _), c in combo:
                coef = coef * c
                head = pres.mul(head, {m1: ONE})
            legs = [head] + [H.antipode({m2: ONE}, -1) for (_, m2), _c in reversed(combo)]
            for k, c in expand(legs).items():
                _add_into(out, k, coef * c)
        return out

    finite = is_finite(b)
    return DihedralModuleSpec(
        name=f"E({b.name})", variance="module", face=face, degeneracy=degeneracy,
        cyclic=cyclic, involution=involution, basis=_basis_fn(pres, 1, finite),
        sampler=None if finite else _sampler_fn(pres, 1), finite=finite)


def path_projection(b: Builtin, x: dict) -> dict:
    """pi(h0 (x) ... (x) hn) = eps(h0) h1 (x) ... (x) hn."""
    out = {}
    for key, c in x.items():
        e = b.hopf.counit({key[0]: ONE})
        if e:
            _add_into(out, key[1:], c * e)
    return out


# ------------------------------------------------------------- group submodule


def _group_product(pres: Presentation, keys) -> tuple:
    out = {(): ONE}
    for m in keys:
        out = pres.mul(out, {m: ONE})
    (m, c), = out.items()
    if c != 1:
        raise ConstructionError("not a group algebra basis element")
    return m


def group_dihedral_submodule(b: Builtin) -> DihedralModuleSpec:
    """Span of g0 (x) ... (x) gn with g0...gn = 1 inside C(kG)."""
    full = algebra_cyclic(b)
    if not full.finite:
        raise ConstructionError("the group submodule needs a finite group")
    pres = b.pres

    def basis(n, policy=None):
        return [k for k in full.basis(n) if _group_product(pres, k) == ()]

    return DihedralModuleSpec(
        name=f"E({b.name})^+-", variance="module", face=full.face, degeneracy=full.degeneracy,
        cyclic=full.cyclic, involution=full.involution, basis=basis, finite=True)


def group_inverse(pres: Presentation, g: tuple) -> tuple:
    """g^-1 for a group element, read off from g* = g^-1."""
    ((m, c),) = pres.star_mono(g).items()
    if c != 1:
        raise ConstructionError("the star is not inversion on this basis element")
    return m


def group_theta(b: Builtin, x: dict) -> dict:
    """theta(g1 (x) ... (x) gn) = (g1...gn)^-1 (x) g1 (x) ... (x) gn."""
    out = {}
    for key, c in x.items():
        g = _group_product(b.pres, key)
        _add_into(out, (group_inverse(b.pres, g),) + key, c)
    return out


# ------------------------------------------------------------- a module algebra


def inversion_action(H: Builtin, A: Builtin):
    """k[Z/2] acting on a group algebra by g -> g^-1 (an algebra map for abelian groups)."""
    g = H.pres.letter("g")

    def act(h_mono, a_mono):
        flips = sum(1 for a in h_mono if a == g)
        return {group_inverse(A.pres, a_mono) if flips % 2 else a_mono: ONE}

    return act


def trivial_coefficient(b: Builtin) -> Coefficient:
    return mpi_coefficient(b, ModularPair("eps", ()))


def apply(M: DihedralModuleSpec, op: str, n: int, x: dict, i: int | None = None) -> dict:
    """Convenience dispatcher used by the command line and the tests."""
    if op == "face":
        return M.d(n, i, x)
    if op == "degeneracy":
        return M.s(n, i, x)
    if op == "cyclic":
        return M.t(n, x)
    if op == "involution":
        return M.w(n, x)
    raise ValueError(f"unknown operator {op}")


__all__ = [
    "ConstructionError", "algebra_cyclic", "dual_module", "coalgebra_hochschild",
    "hopf_cm_cocyclic", "hopf_hochschild", "Coefficient", "mpi_coefficient", "hopf_paracyclic_with_coeff",
    "module_algebra_paracyclic", "hopf_homology_dihedral", "path_space", "path_projection",
    "group_dihedral_submodule", "group_theta", "group_inverse", "inversion_action", "trivial_coefficient",
    "expand", "legwise_mul", "lin",
]
