"""Tensors of normal-form monomials, truncated bases, and exact sparse elimination.

Vectors are plain dicts from hashable, mutually comparable keys to
Scalars.  Elimination uses the largest key of a row as its pivot, which
makes every reduction strictly decreasing in the key order and the whole
computation deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .ncalg import Presentation, _add_into
from .scalars import ONE, Scalar

BASIS_CAP = 200_000


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class TruncationPolicy:
    """bound: filtration bound N; scheme: "filtration" or "finite"."""

    bound: int = 0
    scheme: str = "filtration"


class TensorElement:
    """A linear combination of n-tuples of normal-form monomials."""

    __slots__ = ("pres", "arity", "terms")

    def __init__(self, pres: Presentation, arity: int, terms: dict):
        self.pres = pres
        self.arity = arity
        self.terms = {k: Scalar.coerce(c) for k, c in terms.items() if c}
        for k in self.terms:
            if len(k) != arity:
                raise ValueError(f"tuple {k} does not have {arity} legs")

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return TensorElement(self.pres, self.arity, out)

    def __neg__(self):
        return TensorElement(self.pres, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, s):
        s = Scalar.coerce(s)
        return TensorElement(self.pres, self.arity, {k: s * c for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return format_tensor(self.pres, self.terms)


def format_tensor(pres: Presentation, t: dict) -> str:
    if not t:
        return "0"
    parts = []
    for key in sorted(t, key=lambda k: tuple(pres.order_key(m) for m in k)):
        c = t[key]
        legs = " @ ".join(pres.format_word(m) for m in key) if key else "1"
        parts.append(legs if c == 1 else f"({c}) {legs}")
    return " + ".join(parts)


def tensor_product(pres: Presentation, *factors: dict) -> dict:
    """Outer product of elements (dicts monomial -> Scalar) into one tensor."""
    out = {(): ONE}
    for f in factors:
        nxt = {}
        for k, c in out.items():
            for m, c2 in f.items():
                _add_into(nxt, k + (m,), c * c2)
        out = nxt
    return out


def expand_legs(key_terms) -> dict:
    """Expand a list of per-leg elements into a tensor dict."""
    out = {}
    for combo in product(*[list(l.items()) for l in key_terms]):
        coef = ONE
        for _, c in combo:
            coef = coef * c
        _add_into(out, tuple(m for m, _ in combo), coef)
    return out


def add_scaled(acc: dict, x: dict, s) -> dict:
    for k, c in x.items():
        _add_into(acc, k, s * c)
    return acc


def linear_map(f, x: dict) -> dict:
    """Extend a function on basis keys (returning dicts) linearly."""
    out = {}
    for k, c in x.items():
        for k2, c2 in f(k).items():
            _add_into(out, k2, c * c2)
    return out


def conj_linear_map(f, x: dict) -> dict:
    out = {}
    for k, c in x.items():
        cc = c.conj()
        for k2, c2 in f(k).items():
            _add_into(out, k2, cc * c2)
    return out


# ------------------------------------------------------------- bases


def monomials_up_to(pres: Presentation, bound: int, cap: int = BASIS_CAP) -> list:
    """All normal-form monomials of filtration degree at most bound."""
    cache = pres._memo.get(("basis", bound))
    if cache is not None:
        return cache
    letters = []
    for g in range(len(pres.names)):
        letters.append(2 * g)
        if g in pres.invertible:
            letters.append(2 * g + 1)
    seen = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for m in frontier:
            base = pres.filtration_degree(m)
            for a in letters:
                if base + pres.filt[a // 2] > bound:
                    continue
                w = m + (a,)
                if w in seen:
                    continue
                if any(w[-L:] in pres.rules for L in pres.rule_lengths if L <= len(w)):
                    continue
                seen.add(w)
                nxt.append(w)
                if len(seen) > cap:
                    raise TruncationError(
                        f"more than {cap} monomials below filtration {bound}; use a smaller bound"
                    )
        frontier = nxt
    out = sorted(seen, key=lambda m: (pres.filtration_degree(m), pres.order_key(m)))
    pres._memo[("basis", bound)] = out
    return out


def truncated_basis(pres: Presentation, legs: int, policy: TruncationPolicy,
                    cap: int = BASIS_CAP) -> list:
    """Deterministic list of leg tuples whose filtration degrees sum to at most N."""
    N = policy.bound
    mons = monomials_up_to(pres, N, cap)
    by_deg: dict[int, list] = {}
    for m in mons:
        by_deg.setdefault(pres.filtration_degree(m), []).append(m)
    out = []

    def rec(prefix, remaining, k):
        if k == 0:
            out.append(tuple(prefix))
            if len(out) > cap:
                raise TruncationError(f"truncated basis exceeds {cap} tuples; use a smaller bound")
            return
        for d in sorted(by_deg):
            if d > remaining:
                break
            for m in by_deg[d]:
                prefix.append(m)
                rec(prefix, remaining - d, k - 1)
                prefix.pop()

    rec([], N, legs)
    return out


# ------------------------------------------------------ elimination


class RowReducer:
    """Incremental echelon form with the maximal key of each row as pivot.

    Each stored row remembers which inserted vectors it combines, so
    vectors that reduce to zero yield kernel relations.
    """

    def __init__(self, track: bool = False):
        self.rows: dict = {}
        self.track = track
        self.history: dict = {}
        self.count = 0
        self.relations: list = []

    def reduce(self, v: dict, hist: dict | None = None):
        v = dict(v)
        hist = dict(hist) if hist is not None else None
        rows = self.rows
        while True:
            cands = [k for k in v if k in rows]
            if not cands:
                return v, hist
            k = max(cands)
            c = v[k]
            for k2, c2 in rows[k].items():
                _add_into(v, k2, -c * c2)
            if hist is not None:
                for j, c2 in self.history[k].items():
                    _add_into(hist, j, -c * c2)

    def insert(self, v: dict) -> bool:
        """Add a vector; returns True iff it increased the rank."""
        idx = self.count
        self.count += 1
        hist = {idx: ONE} if self.track else None
        r, hist = self.reduce(v, hist)
        if not r:
            if self.track:
                self.relations.append(hist)
            return False
        p = max(r)
        inv = r[p].inverse()
        self.rows[p] = {k: c * inv for k, c in r.items()}
        if self.track:
            self.history[p] = {j: c * inv for j, c in hist.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, v: dict) -> bool:
        r, _ = self.reduce(v)
        return not r


@dataclass
class SparseMatrix:
    """Columns are images of the domain basis vectors, as sparse dicts."""

    domain: list
    cols: list = field(default_factory=list)

    @staticmethod
    def from_function(domain: list, f) -> "SparseMatrix":
        return SparseMatrix(list(domain), [f(k) for k in domain])

    @property
    def shape(self):
        keys = set()
        for c in self.cols:
            keys.update(c)
        return (len(keys), len(self.domain))

    def apply(self, x: dict) -> dict:
        index = {k: i for i, k in enumerate(self.domain)}
        out = {}
        for k, c in x.items():
            for k2, c2 in self.cols[index[k]].items():
                _add_into(out, k2, c * c2)
        return out

    def triplets(self) -> str:
        """Debug export: "row col value" lines."""
        lines = []
        for j, col in enumerate(self.cols):
            for k in sorted(col):
                lines.append(f"{k} {self.domain[j]} {col[k]}")
        return "\n".join(lines)


def rank_kernel(M: SparseMatrix):
    """Exact rank and a kernel basis (as dicts over the domain keys)."""
    red = RowReducer(track=True)
    for col in M.cols:
        red.insert(col)
    kernel = [{M.domain[i]: c for i, c in rel.items()} for rel in red.relations]
    return red.rank, kernel


def rank_of(vectors) -> int:
    red = RowReducer()
    for v in vectors:
        red.insert(v)
    return red.rank


def solve_linear(cols: list, target: dict):
    """Coefficients x (index -> Scalar) with sum x_i cols_i = target, or None."""
    red = RowReducer(track=True)
    for c in cols:
        red.insert(c)
    r, hist = red.reduce(target, {})
    if r:
        return None
    return {i: -c for i, c in hist.items()}


def homology_dims(d_in: SparseMatrix, d_out: SparseMatrix) -> int:
    """dim ker(d_out) - rank(d_in) on the common middle space."""
    if d_in.cols and d_out.domain:
        dom = set(d_out.domain)
        for col in d_in.cols:
            for k in col:
                if k not in dom:
                    raise TruncationError(f"image key {k} is outside the domain of the next map")
    for col in d_in.cols:
        if d_out.apply(col):
            raise ArithmeticError("composite of consecutive differentials is not zero")
    r_in = rank_of(d_in.cols)
    r_out = rank_of(d_out.cols)
    return len(d_out.domain) - r_out - r_in
