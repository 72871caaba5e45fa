"""Built-in algebras and the solvers that derive data from them.

Every built-in is produced from presentation source text, so the same
parser path that serves user files is exercised by the library itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .hopf import HopfStructure, ModularPair, hopf_from_presentation
from .ncalg import Presentation, PresentationError, _add_into, parse_presentation
from .scalars import ONE, ZERO, QParam, Scalar, make_qparam, rational_sqrt


@dataclass
class Builtin:
    """A presentation with its Hopf data and any construction-specific extras."""

    name: str
    pres: Presentation
    hopf: HopfStructure | None = None
    extras: dict = field(default_factory=dict)


# ---------------------------------------------------------------- sources


def cyclic_group_source(n: int) -> str:
    if n < 1:
        raise ValueError("group order must be positive")
    inv = "1" if n == 1 else "g" if n == 2 else f"g^{n - 1}"
    rel = "rel g = 1;" if n == 1 else f"rel g^{n} = 1;"
    return f"""
gen g; {rel}
star g = {inv};
filt g = 0;
delta g = g@g; eps g = 1; S g = {inv}; Sinv g = {inv};
"""


S3_SOURCE = """
gen s t;
rel s^2 = 1; rel t^2 = 1; rel t*s*t = s*t*s;
star s = s; star t = t;
filt s = 0; filt t = 0;
delta s = s@s; delta t = t@t;
eps s = 1; eps t = 1;
S s = s; S t = t; Sinv s = s; Sinv t = t;
"""

O_U1_SOURCE = """
gen sigma; inv sigma;
star sigma = sigma^-1;
delta sigma = sigma@sigma; eps sigma = 1;
S sigma = sigma^-1; Sinv sigma = sigma^-1;
"""

UQ_SL2_SOURCE = """
# normal form E^u F^v K^w
gen E F K; inv K;
weight E = 3; weight F = 3;
rel K*E = q*E*K;        rel K^-1*E = q^-1*E*K^-1;
rel K*F = q^-1*F*K;     rel K^-1*F = q*F*K^-1;
rel F*E = E*F - (K^2 - K^-2)/(q - q^-1);
star E = F; star F = E; star K = K;
grade E = 1; grade F = -1; grade K = 0;
delta K = K@K;
delta E = E@K + K^-1@E;
delta F = F@K + K^-1@F;
eps E = 0; eps F = 0; eps K = 1;
S K = K^-1; S E = -q*E; S F = -q^-1*F;
Sinv K = K^-1; Sinv E = -q^-1*E; Sinv F = -q*F;
"""

# matrix entries x u / v y; normal forms u^b v^c x^a and u^b v^c y^d.
# Standard orientation of the q-commutation (x u = q u x); with this
# orientation the sphere embedding below satisfies the sphere relations.
O_SUQ2_SOURCE = """
gen u v x y;
rel x*u = q*u*x;      rel x*v = q*v*x;
rel y*u = q^-1*u*y;   rel y*v = q^-1*v*y;
rel v*u = u*v;
rel x*y = 1 + q*u*v;
rel y*x = 1 + q^-1*u*v;
star x = y; star y = x; star u = -q*v; star v = -q^-1*u;
delta x = x@x + u@v;
delta u = x@u + u@y;
delta v = v@x + y@v;
delta y = v@u + y@y;
eps x = 1; eps y = 1; eps u = 0; eps v = 0;
S x = y; S y = x; S u = -q^-1*u; S v = -q*v;
Sinv x = y; Sinv y = x; Sinv u = -q*u; Sinv v = -q^-1*v;
"""

# generators z0 < zm < z1, zm standing for the index -1 generator
PODLES_SOURCE = """
gen z0 zm z1;
rel zm*z0 = q^2*z0*zm + (1 - q^2)*c*zm;
rel z1*z0 = q^-2*z0*z1 - q^-2*(1 - q^2)*c*z1;
rel z1*zm = q*(z0^2 - d - (1 - q^2)*(c*z0 - z0^2)/q^2)/(1 + q^2);
rel zm*z1 = q*(z0^2 - d - (1 - q^2)*(c*z0 - z0^2)/q^2)/(1 + q^2)
            + (1 - q^2)*(c*z0 - z0^2)/q;
star z0 = z0; star z1 = -q*zm; star zm = -q^-1*z1;
grade zm = 2; grade z0 = 0; grade z1 = -2;
"""


def _cartan(label: str):
    table = {
        "A1": [[2]],
        "A1xA1": [[2, 0], [0, 2]],
        "A2": [[2, -1], [-1, 2]],
        "B2": [[2, -2], [-1, 2]],
    }
    if label in table:
        return table[label]
    try:
        rows = [[int(v) for v in row.split(",")] for row in label.split(";")]
    except ValueError:
        raise PresentationError(f"invalid Cartan matrix {label!r}") from None
    n = len(rows)
    if n == 0 or n > 2 or any(len(r) != n for r in rows):
        raise PresentationError("only Cartan matrices of rank 1 or 2 are supported")
    for i in range(n):
        if rows[i][i] != 2 or any(rows[i][j] > 0 for j in range(n) if j != i):
            raise PresentationError(f"invalid Cartan matrix {label!r}")
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise PresentationError(f"invalid Cartan matrix {label!r}")
    return rows


def _symmetrizer(a):
    n = len(a)
    if n == 1 or a[0][1] == 0:
        return [1] * n
    # d_i a_ij = d_j a_ji
    d0, d1 = -a[1][0], -a[0][1]
    from math import gcd

    g = gcd(d0, d1)
    return [d0 // g, d1 // g]


def _qbinom(n: int, r: int, qi: str) -> str:
    """Gaussian binomial as expression text in the symbol qi."""

    def qint(k):
        return f"(({qi})^{k} - ({qi})^-{k})/(({qi}) - ({qi})^-1)" if k else "1"

    def fact(k):
        return "*".join(qint(j) for j in range(1, k + 1)) or "1"

    return f"({fact(n)})/(({fact(r)})*({fact(n - r)}))"


def uq_cartan_source(label: str) -> tuple[str, list]:
    """Source text for the complexified QUE algebra of a rank <= 2 Cartan matrix.

    The half powers q^(d_i a_ij / 2) are written through the symbol r = q^(1/2).
    """
    a = _cartan(label)
    n = len(a)
    d = _symmetrizer(a)
    E = [f"E{i + 1}" for i in range(n)]
    F = [f"F{i + 1}" for i in range(n)]
    K = [f"K{i + 1}" for i in range(n)]
    lines = [f"gen {' '.join(E + F + K)}; inv {' '.join(K)};"]
    for g in E + F:
        lines.append(f"weight {g} = 3;")

    def rp(e2):  # r^(e2) = q^(e2/2)
        return f"r^{e2}" if e2 >= 0 else f"r^-{-e2}"

    for i in range(n):
        for j in range(n):
            e2 = d[i] * a[i][j]
            lines.append(f"rel {K[i]}*{E[j]} = {rp(e2)}*{E[j]}*{K[i]};")
            lines.append(f"rel {K[i]}^-1*{E[j]} = {rp(-e2)}*{E[j]}*{K[i]}^-1;")
            lines.append(f"rel {K[i]}*{F[j]} = {rp(-e2)}*{F[j]}*{K[i]};")
            lines.append(f"rel {K[i]}^-1*{F[j]} = {rp(e2)}*{F[j]}*{K[i]}^-1;")
    for i in range(n):
        for j in range(i):
            lines.append(f"rel {K[i]}*{K[j]} = {K[j]}*{K[i]};")
            lines.append(f"rel {K[i]}^-1*{K[j]} = {K[j]}*{K[i]}^-1;")
            lines.append(f"rel {K[i]}*{K[j]}^-1 = {K[j]}^-1*{K[i]};")
            lines.append(f"rel {K[i]}^-1*{K[j]}^-1 = {K[j]}^-1*{K[i]}^-1;")
    for i in range(n):
        for j in range(n):
            if i == j:
                qi = rp(2 * d[i])
                lines.append(
                    f"rel {F[i]}*{E[i]} = {E[i]}*{F[i]} - ({K[i]}^2 - {K[i]}^-2)/({qi} - ({qi})^-1);"
                )
            else:
                lines.append(f"rel {F[j]}*{E[i]} = {E[i]}*{F[j]};")
    # Serre relations, oriented so that the largest word is eliminated
    for X in (E, F):
        for i in range(n):
            for j in range(n):
                if i == j or (a[i][j] == 0 and i < j):
                    continue
                m = 1 - a[i][j]
                qi = rp(2 * d[i])
                terms = []
                for s in range(m + 1):
                    word = "*".join([X[i]] * (m - s) + [X[j]] + [X[i]] * s)
                    terms.append((s, f"(-1)^{s}*{_qbinom(m, s, qi)}", word))
                # words X_i^(m-s) X_j X_i^s: the lexicographically largest is
                # X_j X_i^m when j > i and X_i^m X_j when i > j
                lead = m if j > i else 0
                coef_lead = terms[lead][1]
                rhs = " + ".join(
                    f"(-({c})/({coef_lead}))*{w}" for s, c, w in terms if s != lead
                )
                lines.append(f"rel {terms[lead][2]} = {rhs};")
    for i in range(n):
        qi = rp(2 * d[i])
        lines.append(f"star {E[i]} = {F[i]}; star {F[i]} = {E[i]}; star {K[i]} = {K[i]};")
        lines.append(f"delta {K[i]} = {K[i]}@{K[i]};")
        lines.append(f"delta {E[i]} = {E[i]}@{K[i]} + {K[i]}^-1@{E[i]};")
        lines.append(f"delta {F[i]} = {F[i]}@{K[i]} + {K[i]}^-1@{F[i]};")
        lines.append(f"eps {E[i]} = 0; eps {F[i]} = 0; eps {K[i]} = 1;")
        lines.append(f"S {K[i]} = {K[i]}^-1; S {E[i]} = -{qi}*{E[i]}; S {F[i]} = -({qi})^-1*{F[i]};")
        lines.append(
            f"Sinv {K[i]} = {K[i]}^-1; Sinv {E[i]} = -({qi})^-1*{E[i]}; Sinv {F[i]} = -{qi}*{F[i]};"
        )
    return "\n".join(lines), d


# ---------------------------------------------------------------- build


def _default_q(q):
    return make_qparam(q if q is not None else Fraction(3, 4))


def build(name: str, q=None, s=None, check: bool = True) -> Builtin:
    """Resolve a built-in name to its presentation and Hopf data."""
    if name.startswith("builtin:"):
        name = name[len("builtin:"):]
    if name.startswith("group:"):
        g = name[len("group:"):]
        if g == "S3":
            pres = parse_presentation(S3_SOURCE, name=name, check=check)
        else:
            if not g.startswith("Z") or not g[1:].isdigit():
                raise PresentationError(f"unknown group {g!r}; use Zn or S3")
            pres = parse_presentation(cyclic_group_source(int(g[1:])), name=name, check=check)
        b = Builtin(name, pres, hopf_from_presentation(pres))
        b.extras["grouplike_basis"] = True
        return b
    if name == "o_u1":
        pres = parse_presentation(O_U1_SOURCE, name=name, check=check)
        b = Builtin(name, pres, hopf_from_presentation(pres))
        b.extras["grouplike_basis"] = True
        return b
    if name == "uq_sl2":
        qp = _default_q(q)
        pres = parse_presentation(UQ_SL2_SOURCE, {"q": qp.q}, name=name, check=check)
        b = Builtin(name, pres, hopf_from_presentation(pres), {"qparam": qp})
        b.extras["mpi"] = ModularPair("eps", pres.word_from_powers([("K", 2)]))
        return b
    if name.startswith("uq_cartan:"):
        label = name[len("uq_cartan:"):]
        qv = Fraction(9, 16) if q is None else Fraction(q)
        root = rational_sqrt(qv) if qv > 0 else None
        if root is None:
            raise PresentationError(
                f"uq_cartan needs q to be the square of a rational (got {qv}); try q = 9/16"
            )
        qp = make_qparam(qv)
        text, d = uq_cartan_source(label)
        pres = parse_presentation(text, {"q": qp.q, "r": root}, name=name, check=check)
        b = Builtin(name, pres, hopf_from_presentation(pres), {"qparam": qp, "symmetrizer": d})
        return b
    if name == "o_suq2":
        qp = _default_q(q)
        pres = parse_presentation(O_SUQ2_SOURCE, {"q": qp.q}, name=name, check=check)
        return Builtin(name, pres, hopf_from_presentation(pres), {"qparam": qp})
    if name.startswith("podles"):
        qp = _default_q(q)
        if name.startswith("podles_s:"):
            sv = Fraction(name.split(":", 1)[1])
            c, dd = sv, 1 + sv * sv
        elif name.startswith("podles:"):
            body = name.split(":", 1)[1].strip("()")
            cs, ds = body.split(",")
            c, dd = Fraction(cs.strip()), Fraction(ds.strip())
        elif name == "podles":
            sv = Fraction(s) if s is not None else Fraction(0)
            c, dd = sv, 1 + sv * sv
        else:
            raise PresentationError(f"unknown builtin {name!r}")
        pres = parse_presentation(PODLES_SOURCE, {"q": qp.q, "c": c, "d": dd}, name=name, check=check)
        return Builtin(name, pres, None, {"qparam": qp, "c": c, "d": dd})
    raise PresentationError(f"unknown builtin {name!r}")


# ---------------------------------------------------------------- Podles data


def suq2_with_roots(q=None) -> Builtin:
    """O(SU_q(2)) together with the square roots needed by the sphere embedding."""
    qp = make_qparam(q if q is not None else Fraction(3, 4), need_root=True)
    b = build("o_suq2", qp.q)
    b.extras["qparam"] = qp
    b.pres.params.update({"r": Scalar(qp.root), "ri": Scalar(qp.root_inv)})
    return b


def podles_embedding(suq2: Builtin, s) -> dict:
    """Images of z_{-1}, z_0, z_1 (keys -1, 0, 1) inside O(SU_q(2))."""
    pres = suq2.pres
    pres.params["s"] = Scalar(Fraction(s))
    e = pres.parse_element
    return {
        -1: e("x^2/r + s*ri*x*v - q*v^2/r").terms,
        0: e("u*x + s*(1 + (q + q^-1)*u*v) - v*y").terms,
        1: e("u^2/r + s*ri*u*y - q*y^2/r").terms,
    }


def w1_matrix(suq2: Builtin) -> dict:
    """Coaction matrix entries w_{j,i}, keyed by (j, i)."""
    e = suq2.pres.parse_element
    text = {
        (-1, -1): "x^2", (-1, 0): "r*u*x", (-1, 1): "u^2",
        (0, -1): "r*v*x", (0, 0): "1 + (q + q^-1)*u*v", (0, 1): "r*y*u",
        (1, -1): "v^2", (1, 0): "r*y*v", (1, 1): "y^2",
    }
    return {k: e(v).terms for k, v in text.items()}


def podles_relation_residuals(pres: Presentation, z: dict, q: Fraction, c, d) -> list:
    """The four sphere relations evaluated on images z[-1], z[0], z[1]."""
    mul = pres.mul
    qs = Scalar(q)

    def lin(*pairs):
        out = {}
        for coef, x in pairs:
            for m, cc in x.items():
                _add_into(out, m, Scalar.coerce(coef) * cc)
        return out

    zm, z0, z1 = z[-1], z[0], z[1]
    one = {(): ONE}
    c, d = Scalar(Fraction(c)), Scalar(Fraction(d))
    k = 1 - qs * qs
    return [
        lin((1, mul(z0, z0)), (-qs, mul(z1, zm)), (-qs.inverse(), mul(zm, z1)), (-d, one)),
        lin((k, mul(z0, z0)), (qs, mul(zm, z1)), (-qs, mul(z1, zm)), (-k * c, z0)),
        lin((1, mul(zm, z0)), (-qs * qs, mul(z0, zm)), (-k * c, zm)),
        lin((1, mul(z0, z1)), (-qs * qs, mul(z1, z0)), (-k * c, z1)),
    ]


def coaction_residuals(suq2: Builtin, z: dict) -> list:
    """Delta(z_i) - sum_j z_j (x) w_{j,i} for i = -1, 0, 1."""
    W = w1_matrix(suq2)
    H = suq2.hopf
    out = []
    for i in (-1, 0, 1):
        diff = dict(H.coproduct(z[i]))
        for j in (-1, 0, 1):
            for m1, c1 in z[j].items():
                for m2, c2 in W[(j, i)].items():
                    _add_into(diff, (m1, m2), -c1 * c2)
        out.append(diff)
    return out


def pi_circle(suq2: Builtin, circle: Builtin):
    """Algebra map O(SU_q(2)) -> O(U(1)): x -> sigma, y -> sigma^-1, u, v -> 0."""
    P, C = suq2.pres, circle.pres
    images = {
        P.letter("x"): {(C.letter("sigma"),): ONE},
        P.letter("y"): {(C.letter("sigma^-1"),): ONE},
        P.letter("u"): {},
        P.letter("v"): {},
    }

    def on_mono(m):
        out = {(): ONE}
        for a in m:
            out = C.mul(out, images[a])
            if not out:
                break
        return out

    return on_mono


def rho_coaction(suq2: Builtin, circle: Builtin, a: dict) -> dict:
    """(id (x) pi) Delta restricted to sphere elements: a -> a_<0> (x) a_<1>."""
    pi = pi_circle(suq2, circle)
    out = {}
    for (m1, m2), c in suq2.hopf.coproduct(a).items():
        for m3, c3 in pi(m2).items():
            _add_into(out, (m1, m3), c * c3)
    return out


# ---------------------------------------------------------------- Haar state


@dataclass
class HaarState:
    """Values of the invariant state on all monomials of filtration <= bound."""

    values: dict
    bound: int
    pres: Presentation

    def __call__(self, x: dict) -> Scalar:
        tot = ZERO
        for m, c in x.items():
            if m not in self.values:
                raise KeyError(f"monomial {self.pres.format_word(m)} is beyond the solved bound {self.bound}")
            tot = tot + c * self.values[m]
        return tot

    def as_json(self) -> dict:
        return {self.pres.format_word(m): str(v) for m, v in sorted(
            self.values.items(), key=lambda kv: self.pres.order_key(kv[0])) if v}


def solve_haar(suq2: Builtin, bound: int = 6) -> HaarState:
    """Unique functional with h(1) = 1 and left/right invariance up to the bound."""
    from .tensorspace import RowReducer, monomials_up_to

    if bound < 2:
        raise ValueError("the Haar solver needs a bound of at least 2")
    pres, H = suq2.pres, suq2.hopf
    basis = monomials_up_to(pres, bound)
    index = {m: i + 1 for i, m in enumerate(basis)}  # key 0 holds the constant
    red = RowReducer()
    red.insert({index[()]: ONE, 0: -ONE})
    for m in basis:
        cop = H.coproduct_mono(m)
        for side in (0, 1):
            eqs: dict = {}
            for (m1, m2), c in cop.items():
                unknown, rest = (m1, m2) if side == 0 else (m2, m1)
                _add_into(eqs.setdefault(rest, {}), index[unknown], c)
            _add_into(eqs.setdefault((), {}), index[m], -ONE)
            for row in eqs.values():
                if row:
                    red.insert(row)
    if 0 in red.rows:
        raise ArithmeticError("the invariance equations are inconsistent")
    if red.rank != len(basis):
        raise ArithmeticError(
            f"the invariance equations leave {len(basis) - red.rank} degrees of freedom"
        )
    values = {}
    for p in sorted(red.rows):
        row = red.rows[p]
        val = ZERO
        for k, c in row.items():
            if k == p:
                continue
            val = val - c * (ONE if k == 0 else values[k])
        values[p] = val
    haar = HaarState({m: values[index[m]] for m in basis}, bound, pres)
    return haar


def invariance_residuals(suq2: Builtin, haar: HaarState) -> int:
    """Number of monomials (within the bound) where invariance fails."""
    bad = 0
    H = suq2.hopf
    for m in haar.values:
        cop = H.coproduct_mono(m)
        left, right = {}, {}
        for (m1, m2), c in cop.items():
            _add_into(left, m2, c * haar.values[m1])
            _add_into(right, m1, c * haar.values[m2])
        target = {(): haar.values[m]} if haar.values[m] else {}
        if left != target or right != target:
            bad += 1
    return bad


def solve_f1(suq2: Builtin, haar: HaarState) -> dict:
    """The modular character: vanishes on u, v; f(x) f(y) = 1; f(x)^2 fixed by h.

    Returns the character table and installs it on the Hopf structure as
    "f1", along with its convolution inverse as "f1_inv".
    """
    P, H = suq2.pres, suq2.hopf
    x, y = {(P.letter("x"),): ONE}, {(P.letter("y"),): ONE}
    hxy, hyx = haar(P.mul(x, y)), haar(P.mul(y, x))
    if not hyx:
        raise ArithmeticError("h(yx) vanishes; no modular character")
    lam2 = hxy / hyx
    lam = rational_sqrt(lam2.re) if lam2.is_real() else None
    if lam is None:
        raise ArithmeticError(f"f1(x)^2 = {lam2} has no rational square root")
    table = {P.letter("x"): Scalar(lam), P.letter("y"): Scalar(1 / lam),
             P.letter("u"): ZERO, P.letter("v"): ZERO}
    H.characters["f1"] = table
    # f1 composed with S, the convolution inverse
    H.characters["f1_inv"] = {P.letter("x"): Scalar(1 / lam), P.letter("y"): Scalar(lam),
                              P.letter("u"): ZERO, P.letter("v"): ZERO}
    return table


def modular_residuals(suq2: Builtin, haar: HaarState, max_len: int = 2) -> int:
    """Count pairs (a, b) of monomials where h(ab) != h(b (f1.a.f1))."""
    from .tensorspace import monomials_up_to

    P, H = suq2.pres, suq2.hopf
    mons = monomials_up_to(P, max_len)
    bad = 0
    for a in mons:
        twisted = {}
        for (m1, m2, m3), c in H.coproduct({a: ONE}, 3).items():
            f = H.char_mono("f1", m1) * H.char_mono("f1", m3)
            if f:
                _add_into(twisted, m2, c * f)
        for b in mons:
            if haar(P.mul({a: ONE}, {b: ONE})) != haar(P.mul({b: ONE}, twisted)):
                bad += 1
    return bad


def podles_grading(pres: Presentation, a: dict) -> dict:
    """Split a sphere element into rho-weight components (weight -> element)."""
    out: dict = {}
    for m, c in a.items():
        w = pres.grade(m)
        _add_into(out.setdefault(w[0] if w else 0, {}), m, c)
    return {k: v for k, v in sorted(out.items()) if v}


# ---------------------------------------------------------------- QUE data


def e1_basis(r: int, m: int, bound: int | None = None) -> list:
    """Exponent data (u, v, w) solving the E1 recursion with w_{r+1} = m.

    w_i = (u_i + v_i) + 2 * sum_{j<i} (u_j + v_j), so a solution exists iff
    m is even and sum (u_j + v_j) = m / 2.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    if m % 2 or m < 0:
        return []
    half = m // 2
    out = []

    def compositions(total, parts):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for uv in compositions(half, 2 * r):
        u, v = uv[:r], uv[r:]
        w, acc = [], 0
        for i in range(r):
            s = u[i] + v[i]
            w.append(s + 2 * acc)
            acc += s
        out.append({"u": list(u), "v": list(v), "w": w})
        if bound is not None and len(out) > bound:
            raise ValueError(f"more than {bound} solutions")
    return out


def skew_primitive_space(uq: Builtin, sigma: tuple, bound: int) -> dict:
    """Solutions of Delta(h) = 1 (x) h + h (x) sigma with filtration <= bound,
    modulo the coboundaries spanned by 1 - sigma."""
    from .tensorspace import RowReducer, monomials_up_to

    P, H = uq.pres, uq.hopf
    basis = monomials_up_to(P, bound)
    # kernel of h -> Delta(h) - 1(x)h - h(x)sigma via tracked elimination
    red = RowReducer(track=True)
    for m in basis:
        img = dict(H.coproduct_mono(m))
        _add_into(img, ((), m), -ONE)
        _add_into(img, (m, sigma), -ONE)
        red.insert(img)
    cycles = [{basis[i]: c for i, c in rel.items()} for rel in red.relations]
    coboundary = {}
    _add_into(coboundary, (), ONE)
    _add_into(coboundary, sigma, -ONE)
    quot = RowReducer()
    if coboundary:
        quot.insert(coboundary)
    reps = []
    for z in cycles:
        r, _ = quot.reduce(z)
        if r and quot.insert(r):
            reps.append(r)
    # canonical echelon representatives
    final = RowReducer()
    for z in reps:
        final.insert(z)
    basis_out = []
    for p in sorted(final.rows, key=lambda m: P.order_key(m)):
        basis_out.append(final.rows[p])
    return {"dimension": len(basis_out), "basis": basis_out,
            "cycle_dimension": len(cycles)}
