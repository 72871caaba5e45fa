"""Para-cyclic, cyclic and dihedral (co)modules: identity checks, bicomplexes, homology.

A module is described by callables acting on basis keys and returning
sparse vectors (dicts key -> Scalar).  Chain modules ("module" variance)
have faces X_n -> X_{n-1}; cochain modules ("comodule" variance) have
cofaces X^{n-1} -> X^n.  All signs of the cyclic bicomplex live here, the
modules themselves are sign-free.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .ncalg import _add_into
from .scalars import ONE, Scalar
from .tensorspace import RowReducer, TruncationError, TruncationPolicy

Vec = dict


def lin(op: Callable, x: Vec) -> Vec:
    """Extend op (key -> Vec) linearly to x."""
    out: Vec = {}
    for k, c in x.items():
        for k2, c2 in op(k).items():
            _add_into(out, k2, c * c2)
    return out


def add(*terms) -> Vec:
    """Sum of (scalar, vector) pairs."""
    out: Vec = {}
    for s, v in terms:
        s = Scalar.coerce(s)
        for k, c in v.items():
            _add_into(out, k, s * c)
    return out


@dataclass(frozen=True)
class DihedralModuleSpec:
    """Structure maps of a (co)simplicial module with optional cyclic and dihedral data.

    face(n, i, key): chain: X_n -> X_{n-1}; cochain: coface X^{n-1} -> X^n (key in degree n-1)
    degeneracy(n, j, key): chain: X_n -> X_{n+1}; cochain: X^{n+1} -> X^n (key in degree n+1)
    cyclic(n, key), involution(n, key): X_n -> X_n
    basis(n, policy): full basis (finite modules) or truncated basis
    sampler(n, rng): a random element of degree n, for modules without a usable basis
    """

    name: str
    variance: str
    face: Callable
    degeneracy: Callable
    cyclic: Callable | None = None
    involution: Callable | None = None
    basis: Callable | None = None
    sampler: Callable | None = None
    finite: bool = False
    paracyclic: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def chain(self) -> bool:
        return self.variance == "module"

    @property
    def has_involution(self) -> bool:
        return self.involution is not None

    # linear operators on vectors
    def d(self, n: int, i: int, x: Vec) -> Vec:
        return lin(lambda k: self.face(n, i, k), x)

    def s(self, n: int, j: int, x: Vec) -> Vec:
        return lin(lambda k: self.degeneracy(n, j, k), x)

    def t(self, n: int, x: Vec, power: int = 1) -> Vec:
        """tau^power; negative powers use tau^(n+1) = id."""
        if power < 0:
            power %= n + 1
        for _ in range(power):
            x = lin(lambda k: self.cyclic(n, k), x)
        return x

    def w(self, n: int, x: Vec) -> Vec:
        return lin(lambda k: self.involution(n, k), x)


# ------------------------------------------------------------- identities


@dataclass
class RelationReport:
    module: str
    max_degree: int
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_json(self) -> dict:
        return {"module": self.module, "max_degree": self.max_degree, "checked": self.checked,
                "pass": self.passed, "failures": self.failures[:50],
                "failure_count": len(self.failures), "notes": self.notes}


def spanning_set(M: DihedralModuleSpec, n: int, samples: int, rng, policy=None) -> list:
    if M.finite and M.basis is not None:
        return [{k: ONE} for k in M.basis(n, policy)]
    if M.sampler is not None:
        return [M.sampler(n, rng) for _ in range(samples)]
    if M.basis is not None:
        return [{k: ONE} for k in M.basis(n, policy)]
    raise ValueError(f"module {M.name} has neither a basis nor a sampler")


def _compare(rep, label, n, x, lhs, rhs):
    rep.checked += 1
    if lhs != rhs:
        diff = add((1, lhs), (-1, rhs))
        rep.failures.append({"identity": label, "degree": n, "input": _show(x),
                             "residual": _show(diff)})


def _show(x: Vec) -> str:
    items = sorted(x.items(), key=lambda kv: repr(kv[0]))[:6]
    return " + ".join(f"({c}){k}" for k, c in items) + (" + ..." if len(x) > 6 else "")


def check_relations(M: DihedralModuleSpec, max_degree: int, samples: int = 20,
                    seed: int = 0, policy=None) -> RelationReport:
    """Evaluate every simplicial, cyclic and dihedral identity up to max_degree."""
    rng = random.Random(seed)
    rep = RelationReport(M.name, max_degree)
    if M.chain:
        _check_chain(M, max_degree, samples, rng, rep, policy)
    else:
        _check_cochain(M, max_degree, samples, rng, rep, policy)
    if M.cyclic is None:
        rep.notes.append("no cyclic operator: simplicial identities only")
    if M.paracyclic:
        rep.notes.append("para-cyclic module: tau^(n+1) = id is reported, not required")
    return rep


def _check_chain(M, N, samples, rng, rep, policy):
    for n in range(N + 1):
        xs = spanning_set(M, n, samples, rng, policy)
        for x in xs:
            d = lambda m, i, v: M.d(m, i, v)
            s = lambda m, j, v: M.s(m, j, v)
            # faces and degeneracies
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        _compare(rep, f"d{i} d{j} = d{j-1} d{i}", n, x,
                                 d(n - 1, i, d(n, j, x)), d(n - 1, j - 1, d(n, i, x)))
            for j in range(n + 1):
                for i in range(j + 1):
                    _compare(rep, f"s{i} s{j} = s{j+1} s{i}", n, x,
                             s(n + 1, i, s(n, j, x)), s(n + 1, j + 1, s(n, i, x)))
            for j in range(n + 1):
                sx = s(n, j, x)
                for i in range(n + 2):
                    lhs = d(n + 1, i, sx)
                    if i < j:
                        rhs = s(n - 1, j - 1, d(n, i, x))
                    elif i in (j, j + 1):
                        rhs = x
                    else:
                        rhs = s(n - 1, j, d(n, i - 1, x))
                    _compare(rep, f"d{i} s{j}", n, x, lhs, rhs)
            if M.cyclic is None:
                continue
            t = lambda m, v, p=1: M.t(m, v, p)
            tx = t(n, x)
            if n >= 1:
                for i in range(1, n + 1):
                    _compare(rep, f"d{i} t = t d{i-1}", n, x, d(n, i, tx), t(n - 1, d(n, i - 1, x)))
                _compare(rep, "d0 t = dn", n, x, d(n, 0, tx), d(n, n, x))
            for i in range(1, n + 1):
                _compare(rep, f"s{i} t = t s{i-1}", n, x, s(n, i, tx), t(n + 1, s(n, i - 1, x)))
            _compare(rep, "s0 t = t^2 sn", n, x, s(n, 0, tx), t(n + 1, s(n, n, x), 2))
            if not M.paracyclic:
                _compare(rep, "t^(n+1) = id", n, x, t(n, x, n + 1) if n else tx, x)
            if M.involution is None:
                continue
            w = lambda m, v: M.w(m, v)
            wx = w(n, x)
            _compare(rep, "w^2 = id", n, x, w(n, wx), x)
            _compare(rep, "w t w t = id", n, x, w(n, t(n, w(n, tx))), x)
            if n >= 1:
                for i in range(n + 1):
                    _compare(rep, f"d{i} w = w d{n-i}", n, x, d(n, i, wx), w(n - 1, d(n, n - i, x)))
            for i in range(n + 1):
                _compare(rep, f"s{i} w = w s{n-i}", n, x, s(n, i, wx), w(n + 1, s(n, n - i, x)))


def _check_cochain(M, N, samples, rng, rep, policy):
    for n in range(N + 1):
        xs = spanning_set(M, n, samples, rng, policy)
        for x in xs:
            # cofaces d_i: X^n -> X^{n+1}, 0 <= i <= n+1
            d = lambda m, i, v: M.d(m, i, v)  # m = target degree
            s = lambda m, j, v: M.s(m, j, v)  # m = target degree, source m+1
            for j in range(n + 2):
                for i in range(j):
                    _compare(rep, f"d{j} d{i} = d{i} d{j-1}", n, x,
                             d(n + 2, j, d(n + 1, i, x)), d(n + 2, i, d(n + 1, j - 1, x)))
            if n >= 2:
                for j in range(n - 1):
                    for i in range(j + 1):
                        _compare(rep, f"s{j} s{i} = s{i} s{j+1}", n, x,
                                 s(n - 2, j, s(n - 1, i, x)), s(n - 2, i, s(n - 1, j + 1, x)))
            if n >= 1:
                # s_j d_i on X^n, d_i: X^n -> X^{n+1}, s_j: X^{n+1} -> X^n, 0 <= j <= n
                for i in range(n + 2):
                    dx = d(n + 1, i, x)
                    for j in range(n + 1):
                        lhs = s(n, j, dx)
                        if i < j:
                            rhs = d(n, i, s(n - 1, j - 1, x))
                        elif i in (j, j + 1):
                            rhs = x
                        else:
                            rhs = d(n, i - 1, s(n - 1, j, x))
                        _compare(rep, f"s{j} d{i}", n, x, lhs, rhs)
            else:
                for i in range(2):
                    _compare(rep, f"s0 d{i}", n, x, s(0, 0, d(1, i, x)), x)
            if M.cyclic is None:
                if M.involution is not None:
                    _check_cochain_involution(M, n, x, rep, d, s, cyclic=False)
                continue
            t = lambda m, v, p=1: M.t(m, v, p)
            for i in range(1, n + 2):
                _compare(rep, f"t d{i} = d{i-1} t", n, x, t(n + 1, d(n + 1, i, x)), d(n + 1, i - 1, t(n, x)))
            _compare(rep, "t d0 = dn", n, x, t(n + 1, d(n + 1, 0, x)), d(n + 1, n + 1, x))
            if n >= 1:
                for i in range(1, n):
                    _compare(rep, f"t s{i} = s{i-1} t", n, x, t(n - 1, s(n - 1, i, x)), s(n - 1, i - 1, t(n, x)))
                _compare(rep, "t s0 = s(n) t^2", n, x, t(n - 1, s(n - 1, 0, x)), s(n - 1, n - 1, t(n, x, 2)))
            if not M.paracyclic:
                _compare(rep, "t^(n+1) = id", n, x, t(n, x, n + 1) if n else t(0, x), x)
            if M.involution is not None:
                _check_cochain_involution(M, n, x, rep, d, s, cyclic=True)


def _check_cochain_involution(M, n, x, rep, d, s, cyclic):
    w = lambda m, v: M.w(m, v)
    wx = w(n, x)
    _compare(rep, "w^2 = id", n, x, w(n, wx), x)
    if cyclic:
        t = lambda m, v, p=1: M.t(m, v, p)
        _compare(rep, "w t w t = id", n, x, w(n, t(n, w(n, t(n, x)))), x)
    for i in range(n + 2):
        _compare(rep, f"w d{i} = d{n+1-i} w", n, x, w(n + 1, d(n + 1, i, x)), d(n + 1, n + 1 - i, wx))
    if n >= 1:
        for i in range(n):
            _compare(rep, f"w s{i} = s{n-1-i} w", n, x, w(n - 1, s(n - 1, i, x)), s(n - 1, n - 1 - i, wx))


# ------------------------------------------------------------- eigen split


def eigen_split(x: Vec, M: DihedralModuleSpec, n: int):
    """(x+, x-) with w(x+) = x+ and w(x-) = -x- using (1 +- w)/2."""
    if not M.has_involution:
        raise ValueError(f"module {M.name} has no involution")
    wx = M.w(n, x)
    half = Scalar(1) / 2
    return add((half, x), (half, wx)), add((half, x), (-half, wx))


# ------------------------------------------------------------- Hochschild maps


def hochschild_b(M: DihedralModuleSpec, n: int, x: Vec, prime: bool = False) -> Vec:
    """b (or b') on a degree-n element; chain lowers, cochain raises the degree."""
    out: Vec = {}
    if M.chain:
        if n == 0:
            return out
        top = n - 1 if prime else n
        for i in range(top + 1):
            add_into_scaled(out, M.d(n, i, x), (-1) ** i)
    else:
        top = n if prime else n + 1
        for i in range(top + 1):
            add_into_scaled(out, M.d(n + 1, i, x), (-1) ** i)
    return out


def add_into_scaled(acc: Vec, x: Vec, s) -> Vec:
    s = Scalar.coerce(s)
    for k, c in x.items():
        _add_into(acc, k, s * c)
    return acc


def signed_t(M, n, x, power=1):
    """t = (-1)^n tau on degree n."""
    y = M.t(n, x, power)
    if (n * power) % 2:
        return {k: -c for k, c in y.items()}
    return y


def norm_op(M, n, x):
    out: Vec = {}
    y = x
    for _ in range(n + 1):
        add_into_scaled(out, y, 1)
        y = signed_t(M, n, y)
    return out


def signed_w(M, n, x):
    """y_n = (-1)^(n(n+1)/2) w_n, the involution commuting with b."""
    sgn = -1 if (n * (n + 1) // 2) % 2 else 1
    return {k: c * sgn for k, c in M.w(n, x).items()}


# ------------------------------------------------------------- bicomplex


KINDS = ("hochschild", "hochschild+", "hochschild-", "cyclic", "dihedral+", "dihedral-")


class Bicomplex:
    """Total complex of the cyclic bicomplex, with keys (column, key).

    Chain variance: d lowers the total degree; columns alternate b and -b'
    with horizontal maps 1-t and N.  Cochain variance: d raises the total
    degree with the transposed pattern.  For the dihedral kinds the total
    complex is cut down to an eigenspace of the column-wise involution.
    """

    def __init__(self, M: DihedralModuleSpec, kind: str, max_degree: int,
                 policy: TruncationPolicy | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown complex kind {kind!r}; choose from {', '.join(KINDS)}")
        if kind[-1] in "+-" and not M.has_involution:
            raise ValueError(f"module {M.name} has no involution; signed kinds need one")
        if not kind.startswith("hochschild") and M.cyclic is None:
            raise ValueError(f"module {M.name} has no cyclic operator")
        self.M = M
        self.kind = kind
        self.max_degree = max_degree
        self.policy = policy or TruncationPolicy(0)
        self.sign = {"+": 1, "-": -1}.get(kind[-1])
        self._basis: dict = {}

    @property
    def columns(self) -> bool:
        return not self.kind.startswith("hochschild")

    def cells(self, m: int):
        if m < 0:
            return []
        if not self.columns:
            return [(0, m)]
        return [(p, m - p) for p in range(m + 1)]

    def module_basis(self, q: int) -> list:
        if q not in self._basis:
            self._basis[q] = list(self.M.basis(q, self.policy))
        return self._basis[q]

    def raw_basis(self, m: int) -> list:
        return [(p, k) for p, q in self.cells(m) for k in self.module_basis(q)]

    # ---- differential
    def d(self, m: int, x: Vec) -> Vec:
        """Total differential on an element of total degree m."""
        M = self.M
        out: Vec = {}
        parts: dict = {}
        for (p, k), c in x.items():
            parts.setdefault(p, {})[k] = c
        for p, v in sorted(parts.items()):
            q = m - p if self.columns else m
            odd = p % 2 == 1
            vert = hochschild_b(M, q, v, prime=odd)
            for k, c in vert.items():
                _add_into(out, (p, k), -c if odd else c)
            if not self.columns:
                continue
            if M.chain:
                if p == 0:
                    continue
                if odd:
                    h = add((1, v), (-1, signed_t(M, q, v)))
                else:
                    h = norm_op(M, q, v)
                for k, c in h.items():
                    _add_into(out, (p - 1, k), c)
            else:
                if odd:
                    h = norm_op(M, q, v)
                else:
                    h = add((1, v), (-1, signed_t(M, q, v)))
                for k, c in h.items():
                    _add_into(out, (p + 1, k), c)
        return out

    # ---- involution
    def alpha(self, m: int, x: Vec) -> Vec:
        """Column-wise involution commuting with d (Loday's signs)."""
        M = self.M
        out: Vec = {}
        parts: dict = {}
        for (p, k), c in x.items():
            parts.setdefault(p, {})[k] = c
        for p, v in parts.items():
            q = m - p if self.columns else m
            y = signed_w(M, q, v)
            r = p % 4
            if r in (1, 3):
                y = signed_t(M, q, y, -1 if M.chain else 1)
            if r in (1, 2):
                y = {k: -c for k, c in y.items()}
            for k, c in y.items():
                _add_into(out, (p, k), c)
        return out

    def project(self, m: int, x: Vec) -> Vec:
        if self.sign is None:
            return dict(x)
        half = Scalar(1) / 2
        return add((half, x), (half * self.sign, self.alpha(m, x)))

    # ---- spaces
    def space(self, m: int) -> list:
        """A basis of the (eigen)space in total degree m, as vectors."""
        raw = self.raw_basis(m)
        if self.sign is None:
            return [{k: ONE} for k in raw]
        red = RowReducer()
        out = []
        for k in raw:
            v = self.project(m, {k: ONE})
            if v and red.insert(v):
                out.append(v)
        return out

    def check_closed(self, m: int, vectors: list) -> None:
        if self.M.finite:
            return
        target = set(self.raw_basis(m - 1 if self.M.chain else m + 1))
        for v in vectors:
            for k in self.d(m, v):
                if k not in target:
                    raise TruncationError(
                        f"differential leaves the truncated window at bound {self.policy.bound}")

    def verify(self, m: int) -> None:
        """d^2 = 0 and alpha d = d alpha on the degree-m basis (hard errors)."""
        step = -1 if self.M.chain else 1
        for k in self.raw_basis(m):
            x = {k: ONE}
            dx = self.d(m, x)
            if m + step >= 0 and self.d(m + step, dx):
                raise ArithmeticError(f"d^2 != 0 on {k} in total degree {m}")
            if self.M.has_involution:
                if self.alpha(m + step, dx) != self.d(m, self.alpha(m, x)):
                    raise ArithmeticError(f"involution does not commute with d on {k}")

    def matrix(self, m: int):
        """SparseMatrix of d restricted to the degree-m space (columns = space vectors)."""
        from .tensorspace import SparseMatrix

        vecs = self.space(m)
        return SparseMatrix(list(range(len(vecs))), [self.d(m, v) for v in vecs])


def assemble_bicomplex(M: DihedralModuleSpec, kind: str, max_degree: int,
                       policy: TruncationPolicy | None = None, verify: bool = True) -> Bicomplex:
    B = Bicomplex(M, kind, max_degree, policy)
    if verify:
        for m in range(max_degree + 1):
            B.verify(m)
    return B


# ------------------------------------------------------------- homology


@dataclass
class HomologyReport:
    module: str
    kind: str
    entries: list = field(default_factory=list)
    truncation: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def dims(self) -> list:
        return [e["dim"] for e in self.entries]

    def as_json(self) -> dict:
        return {"module": self.module, "kind": self.kind, "truncation": self.truncation,
                "meta": self.meta, "entries": self.entries}


def _homology_at(B: Bicomplex, m: int):
    """(dim, representatives) of H in total degree m."""
    step = -1 if B.M.chain else 1
    space = B.space(m)
    B.check_closed(m, space)
    kern = RowReducer(track=True)
    for v in space:
        kern.insert(B.d(m, v))
    cycles = []
    for rel in kern.relations:
        z: Vec = {}
        for i, c in rel.items():
            add_into_scaled(z, space[i], c)
        if z:
            cycles.append(z)
    prev = m - step
    image = RowReducer()
    if prev >= 0 and prev <= B.max_degree + 1:
        pspace = B.space(prev)
        B.check_closed(prev, pspace)
        for v in pspace:
            image.insert(B.d(prev, v))
    reps = []
    for z in cycles:
        r, _ = image.reduce(z)
        if r and image.insert(r):
            reps.append(z)
    return len(reps), reps


def homology(M: DihedralModuleSpec, kind: str, degrees, policy: TruncationPolicy | None = None,
             stabilize: bool = False, verify: bool = True) -> HomologyReport:
    """Dimensions and representatives of H_m (or H^m) for m in degrees."""
    degrees = list(degrees)
    top = max(degrees) + 1
    B = assemble_bicomplex(M, kind, top, policy, verify=verify)
    rep = HomologyReport(M.name, kind, truncation={
        "scheme": (policy.scheme if policy else "finite") if not M.finite else "finite",
        "bound": policy.bound if policy and not M.finite else None})
    if kind[-1] in "+-":
        rep.meta["sign_convention"] = (
            "eigenspaces of the column involution built from (-1)^(n(n+1)/2) w_n")
    nxt = None
    if stabilize and not M.finite:
        nxt = Bicomplex(M, kind, top, TruncationPolicy(policy.bound + 1, policy.scheme))
    for m in degrees:
        dim, reps = _homology_at(B, m)
        entry = {"degree": m, "sign": kind[-1] if kind[-1] in "+-" else None,
                 "dim": dim, "stable": True,
                 "representatives": [_show_keys(z) for z in reps[:8]]}
        if not M.finite:
            entry["stable"] = bool(nxt is not None and _homology_at(nxt, m)[0] == dim)
        rep.entries.append(entry)
    return rep


def _show_keys(z: Vec) -> str:
    items = sorted(z.items(), key=lambda kv: repr(kv[0]))
    return " + ".join(f"({c}){k}" for k, c in items)


# ------------------------------------------------------------- periodicity and classes


def shift_S(B: Bicomplex, m: int, x: Vec) -> Vec:
    """Two-column shift of a cycle: cochains move up two columns (degree m+2),
    chains move down two columns, dropping columns 0 and 1 (degree m-2)."""
    if not B.columns:
        raise ValueError("the periodicity shift needs the cyclic bicomplex")
    if B.d(m, x):
        raise ValueError("shift_S expects a cycle")
    out: Vec = {}
    for (p, k), c in x.items():
        if B.M.chain:
            if p >= 2:
                out[(p - 2, k)] = c
        else:
            out[(p + 2, k)] = c
    return out


def is_boundary(B: Bicomplex, m: int, x: Vec) -> bool:
    step = -1 if B.M.chain else 1
    prev = m - step
    if prev < 0:
        return not x
    red = RowReducer()
    for v in B.space(prev):
        red.insert(B.d(prev, v))
    return red.contains(x)


def is_nontrivial_class(M: DihedralModuleSpec, kind: str, m: int, x: Vec, ladder) -> dict:
    """Check a cycle against the boundaries of truncated complexes for each bound.

    x has keys (column, key).  Boundaries come from the degree m+1 (chain)
    space truncated at N; their images may use any keys.
    """
    results = []
    for N in ladder:
        B = Bicomplex(M, kind, m + 1, TruncationPolicy(N))
        if B.sign is not None and B.project(m, x) != x:
            raise ValueError("the element does not lie in the requested eigenspace")
        if B.d(m, x):
            raise ValueError("the element is not a cycle")
        results.append({"bound": N, "boundary": is_boundary(B, m, x)})
    nontrivial = bool(x) and not any(r["boundary"] for r in results)
    return {"nontrivial": nontrivial, "ladder": results,
            "stable": len({r["boundary"] for r in results}) <= 1}
