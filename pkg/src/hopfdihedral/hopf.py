"""Hopf *-algebra structure on a presented algebra.

Coproducts, antipodes and characters are given on generators and
extended (anti-)multiplicatively over normal-form monomials, with
per-monomial memoization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .ncalg import Presentation, PresentationError, _add_into, random_element
from .scalars import ONE, ZERO, Scalar


@dataclass(frozen=True)
class ModularPair:
    """A character name and a group-like monomial."""

    delta: str
    sigma: tuple


def _tensor_mul(pres: Presentation, x: dict, y: dict) -> dict:
    """Legwise product of two tensors of the same arity."""
    out = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            legs = [pres.mul_mono(a, b) for a, b in zip(k1, k2)]
            c = c1 * c2
            for combo in product(*[list(l.items()) for l in legs]):
                coef = c
                for _, cc in combo:
                    coef = coef * cc
                _add_into(out, tuple(m for m, _ in combo), coef)
    return out


class HopfStructure:
    """Coproduct, counit, antipode and named characters on a presentation."""

    def __init__(self, pres: Presentation, delta: dict, eps: dict, antipode: dict,
                 antipode_inv: dict | None = None, characters: dict | None = None):
        self.pres = pres
        self.delta_map = dict(delta)
        self.eps_map = {a: Scalar.coerce(v) for a, v in eps.items()}
        self.antipode_map = dict(antipode)
        self.antipode_inv_map = dict(antipode_inv or {})
        self.characters = {"eps": self.eps_map}
        for nm, vals in (characters or {}).items():
            self.characters[nm] = {a: Scalar.coerce(v) for a, v in vals.items()}
        self._memo: dict = {}
        self._fill_inverse_letters()

    # inverse letters of invertible generators follow from the generator data
    def _fill_inverse_letters(self):
        pres = self.pres
        for g in pres.invertible:
            a, ai = 2 * g, 2 * g + 1
            if ai not in self.delta_map and a in self.delta_map:
                d = self.delta_map[a]
                if len(d) != 1:
                    raise PresentationError(f"cannot invert coproduct of {pres.names[g]}")
                ((m1, m2), c), = d.items()
                self.delta_map[ai] = {(_inv_word(pres, m1), _inv_word(pres, m2)): c.inverse()}
            for table in self.characters.values():
                if ai not in table and a in table:
                    table[ai] = table[a].inverse()
            if ai not in self.antipode_map and a in self.antipode_map:
                self.antipode_map[ai] = _inv_elem(pres, self.antipode_map[a])
            if ai not in self.antipode_inv_map and a in self.antipode_inv_map:
                self.antipode_inv_map[ai] = _inv_elem(pres, self.antipode_inv_map[a])

    @property
    def eps(self):
        return self.eps_map

    # coproduct
    def coproduct_mono(self, mono: tuple) -> dict:
        key = ("d", mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not mono:
            out = {((), ()): ONE}
        elif len(mono) == 1:
            out = {k: v for k, v in self.delta_map[mono[0]].items()}
            out = _normalize_tensor(self.pres, out)
        else:
            out = _tensor_mul(self.pres, self.coproduct_mono(mono[:-1]), self.coproduct_mono(mono[-1:]))
        self._memo[key] = out
        return out

    def coproduct(self, x: dict, legs: int = 2) -> dict:
        """Iterated coproduct into the given number of legs."""
        if legs < 1:
            raise ValueError("legs must be at least 1")
        cur = {(m,): c for m, c in x.items()}
        for _ in range(legs - 1):
            nxt = {}
            for key, c in cur.items():
                for (m1, m2), c2 in self.coproduct_mono(key[-1]).items():
                    _add_into(nxt, key[:-1] + (m1, m2), c * c2)
            cur = nxt
        return cur

    # characters
    def char_mono(self, name: str, mono: tuple) -> Scalar:
        table = self.characters[name]
        out = ONE
        for a in mono:
            v = table.get(a)
            if v is None:
                raise PresentationError(f"character {name} undefined on {self.pres.letter_name(a)}")
            out = out * v
            if not out:
                return ZERO
        return out

    def char(self, name: str, x: dict) -> Scalar:
        tot = ZERO
        for m, c in x.items():
            tot = tot + c * self.char_mono(name, m)
        return tot

    def counit(self, x: dict) -> Scalar:
        return self.char("eps", x)

    # antipode
    def _anti_mono(self, table: dict, tag: str, mono: tuple) -> dict:
        key = (tag, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = {(): ONE}
        for a in mono:
            img = table.get(a)
            if img is None:
                raise PresentationError(f"antipode undefined on {self.pres.letter_name(a)}")
            out = self.pres.mul(img, out)
        self._memo[key] = out
        return out

    def antipode(self, x: dict, power: int = 1) -> dict:
        """S^power for power in {..., -2, -1, 1, 2, ...}."""
        if power == 0:
            return dict(x)
        if power < 0:
            self._ensure_inverse()
            table, tag = self.antipode_inv_map, "Si"
        else:
            table, tag = self.antipode_map, "S"
        cur = x
        for _ in range(abs(power)):
            out = {}
            for m, c in cur.items():
                for m2, c2 in self._anti_mono(table, tag, m).items():
                    _add_into(out, m2, c * c2)
            cur = out
        return cur

    def _ensure_inverse(self):
        pres = self.pres
        for g in range(len(pres.names)):
            for a in ([2 * g, 2 * g + 1] if g in pres.invertible else [2 * g]):
                if a not in self.antipode_inv_map:
                    self.antipode_inv_map[a] = self._solve_inverse({(a,): ONE})

    def _solve_inverse(self, target: dict) -> dict:
        """Find y with S(y) = target inside a filtration window."""
        from .tensorspace import monomials_up_to, solve_linear

        pres = self.pres
        deg = max(pres.filtration_degree(m) for m in target)
        for bound in range(deg, deg + 3):
            basis = monomials_up_to(pres, bound)
            cols = [self.antipode({m: ONE}) for m in basis]
            sol = solve_linear(cols, target)
            if sol is not None:
                return {basis[i]: c for i, c in sol.items()}
        raise PresentationError("could not invert the antipode on a generator")

    # derived maps
    def twisted_antipode(self, x: dict, delta: str, side: str = "left") -> dict:
        """S_delta(h) = delta(h_(1)) S(h_(2)); side="right" gives S(h_(1)) delta(h_(2))."""
        out = {}
        for (m1, m2), c in self.coproduct(x).items():
            if side == "right":
                m1, m2 = m2, m1
            d = self.char_mono(delta, m1)
            if d:
                for m, c2 in self.antipode({m2: ONE}).items():
                    _add_into(out, m, c * d * c2)
        return out

    def left_hit(self, f: str, x: dict) -> dict:
        """f.a = a_(1) f(a_(2))."""
        out = {}
        for (m1, m2), c in self.coproduct(x).items():
            v = self.char_mono(f, m2)
            if v:
                _add_into(out, m1, c * v)
        return out

    def right_hit(self, x: dict, f: str) -> dict:
        """a.f = f(a_(1)) a_(2)."""
        out = {}
        for (m1, m2), c in self.coproduct(x).items():
            v = self.char_mono(f, m1)
            if v:
                _add_into(out, m2, c * v)
        return out

    def inverse_grouplike(self, sigma: tuple) -> tuple:
        return _inv_word(self.pres, sigma)

    def ad(self, sigma: tuple, x: dict) -> dict:
        p = self.pres
        return p.mul(p.mul({sigma: ONE}, x), {self.inverse_grouplike(sigma): ONE})

    def is_grouplike(self, mono: tuple) -> bool:
        return self.coproduct_mono(mono) == {(mono, mono): ONE}

    def coalgebra_star(self, x: dict) -> dict:
        """S composed with *; an anti-coalgebra involution used on the homology side."""
        return self.antipode(self.pres.star(x))

    def is_cocommutative(self) -> bool:
        for a in self.delta_map:
            d = self.coproduct_mono((a,))
            if d != {(m2, m1): c for (m1, m2), c in d.items()}:
                return False
        return True

    # verification
    def generator_letters(self):
        pres = self.pres
        out = []
        for g in range(len(pres.names)):
            out.append(2 * g)
            if g in pres.invertible:
                out.append(2 * g + 1)
        return out

    def samples(self, count: int, seed: int = 0, max_len: int = 3):
        rng = random.Random(seed)
        return [random_element(self.pres, rng, max_len=max_len) for _ in range(count)]

    def verify_mpi(self, pair: ModularPair, samples: int = 20, seed: int = 0,
                   side: str = "left") -> dict:
        """Residuals of S_delta^2 - Ad_sigma and of delta(sigma) - 1."""
        residuals = []
        dsig = self.char_mono(pair.delta, pair.sigma)
        if dsig != 1:
            residuals.append(("delta(sigma)", str(dsig - ONE)))
        items = [{(a,): ONE} for a in self.generator_letters()] + self.samples(samples, seed)
        for x in items:
            once = self.twisted_antipode(x, pair.delta, side)
            lhs = self.twisted_antipode(once, pair.delta, side)
            rhs = self.ad(pair.sigma, x)
            diff = dict(lhs)
            for m, c in rhs.items():
                _add_into(diff, m, -c)
            if diff:
                residuals.append((self.pres.format(x), self.pres.format(diff)))
        return {"pass": not residuals, "residuals": residuals,
                "pair": {"delta": pair.delta, "sigma": self.pres.format_word(pair.sigma)}}

    def verify_hopf_axioms(self, samples: int = 100, seed: int = 0, star: bool = True) -> dict:
        """Evaluate every Hopf (and Hopf-*) identity; failures are listed, not raised."""
        pres = self.pres
        fails = []

        def check(label, x, lhs, rhs):
            if lhs != rhs:
                fails.append((label, pres.format(x)))

        gens = [{(a,): ONE} for a in self.generator_letters()]
        # relations are respected by delta, eps and S
        for lhs, rhs in pres.rules.items():
            x = {lhs: ONE}
            left_d = self._free_coproduct(lhs)
            right_d = {}
            for w, c in rhs:
                for k, c2 in self._free_coproduct(w).items():
                    _add_into(right_d, k, c * c2)
            check("coproduct respects relation", x, left_d, right_d)
            check("counit respects relation", x, self.char_mono("eps", lhs),
                  sum((c * self.char_mono("eps", w) for w, c in rhs), ZERO))
            check("antipode respects relation", x, self._free_antipode(lhs),
                  _lin(pres, [(c, self._free_antipode(w)) for w, c in rhs]))
            for nm in self.characters:
                if nm == "eps":
                    continue
                try:
                    lv = self.char_mono(nm, lhs)
                    rv = sum((c * self.char_mono(nm, w) for w, c in rhs), ZERO)
                except PresentationError:
                    continue
                check(f"character {nm} respects relation", x, lv, rv)
        for x in gens + self.samples(samples, seed):
            d2 = self.coproduct(x, 2)
            d3 = self.coproduct(x, 3)
            left = {}
            for (m1, m2), c in d2.items():
                for (a, b), c2 in self.coproduct_mono(m1).items():
                    _add_into(left, (a, b, m2), c * c2)
            check("coassociativity", x, left, d3)
            lc, rc = {}, {}
            ms, sm = {}, {}
            for (m1, m2), c in d2.items():
                _add_into(lc, m2, c * self.char_mono("eps", m1))
                _add_into(rc, m1, c * self.char_mono("eps", m2))
                for m, c2 in pres.mul(self.antipode({m1: ONE}), {m2: ONE}).items():
                    _add_into(ms, m, c * c2)
                for m, c2 in pres.mul({m1: ONE}, self.antipode({m2: ONE})).items():
                    _add_into(sm, m, c * c2)
            check("left counit", x, lc, x)
            check("right counit", x, rc, x)
            e = self.counit(x)
            unit = {(): e} if e else {}
            check("antipode m(S@id)", x, ms, unit)
            check("antipode m(id@S)", x, sm, unit)
            check("S inverse", x, self.antipode(self.antipode(x, 1), -1), x)
            if star and pres.star_map:
                xs = pres.star(x)
                check("star involution", x, pres.star(xs), x)
                ds = self.coproduct(xs)
                dstar = {}
                for (m1, m2), c in d2.items():
                    s1, s2 = pres.star_mono(m1), pres.star_mono(m2)
                    for a, ca in s1.items():
                        for b, cb in s2.items():
                            _add_into(dstar, (a, b), c.conj() * ca * cb)
                check("coproduct of star", x, ds, dstar)
                check("counit of star", x, self.counit(xs), e.conj())
                check("antipode of star", x, self.antipode(xs), pres.star(self.antipode(x, -1)))
                cs = self.coalgebra_star(x)
                check("(S*)^2", x, self.coalgebra_star(cs), x)
        # multiplicativity on products of samples
        rng = random.Random(seed + 1)
        smp = self.samples(max(4, samples // 10), seed + 2, max_len=2)
        for _ in range(max(4, samples // 10)):
            x, y = rng.choice(smp), rng.choice(smp)
            xy = pres.mul(x, y)
            check("coproduct multiplicative", xy, self.coproduct(xy),
                  _tensor_mul(pres, self.coproduct(x), self.coproduct(y)))
            check("antipode anti-multiplicative", xy, self.antipode(xy),
                  pres.mul(self.antipode(y), self.antipode(x)))
        return {"pass": not fails, "failures": fails[:20], "failure_count": len(fails)}

    def _free_coproduct(self, word: tuple) -> dict:
        out = {((), ()): ONE}
        for a in word:
            out = _tensor_mul(self.pres, out, _normalize_tensor(self.pres, self.delta_map[a]))
        return out

    def _free_antipode(self, word: tuple) -> dict:
        out = {(): ONE}
        for a in word:
            out = self.pres.mul(self.antipode_map[a], out)
        return out


def _lin(pres, pairs):
    out = {}
    for c, x in pairs:
        for m, c2 in x.items():
            _add_into(out, m, c * c2)
    return out


def _inv_word(pres: Presentation, word: tuple) -> tuple:
    return tuple(pres.inverse_letter(a) for a in reversed(word))


def _inv_elem(pres: Presentation, x: dict) -> dict:
    if len(x) != 1:
        raise PresentationError("can only invert a scalar multiple of a monomial")
    (w, c), = x.items()
    inv = pres.normalize_word(_inv_word(pres, w))
    return {m: c2 * c.inverse() for m, c2 in inv.items()}


def _normalize_tensor(pres: Presentation, t: dict) -> dict:
    out = {}
    for key, c in t.items():
        legs = [pres.normalize_word(m) for m in key]
        for combo in product(*[list(l.items()) for l in legs]):
            coef = c
            for _, cc in combo:
                coef = coef * cc
            _add_into(out, tuple(m for m, _ in combo), coef)
    return out


def _eval_tensor(pres: Presentation, node) -> dict:
    kind = node[0]
    if kind == "tensor":
        out = {tuple(() for _ in node[1]): ONE}
        for i, leg in enumerate(node[1]):
            val = pres.eval_node(leg)
            nxt = {}
            for key, c in out.items():
                for m, c2 in val.items():
                    _add_into(nxt, key[:i] + (m,) + key[i + 1:], c * c2)
            out = nxt
        return out
    if kind in ("add", "sub"):
        a = dict(_eval_tensor(pres, node[1]))
        for k, c in _eval_tensor(pres, node[2]).items():
            _add_into(a, k, c if kind == "add" else -c)
        return a
    if kind == "neg":
        return {k: -c for k, c in _eval_tensor(pres, node[1]).items()}
    if kind in ("mul", "div"):
        # scalar factor times tensor
        left, right = node[1], node[2]
        if kind == "div":
            t = _eval_tensor(pres, left)
            s = pres.eval_node(right)
            if list(s) != [()]:
                raise PresentationError("division is only allowed by a scalar")
            inv = s[()].inverse()
            return {k: c * inv for k, c in t.items()}
        s = pres.eval_node(left)
        if list(s) != [()]:
            raise PresentationError("only scalars may multiply a tensor")
        return {k: s[()] * c for k, c in _eval_tensor(pres, right).items()}
    raise PresentationError("expected a tensor expression built with '@'")


def hopf_from_presentation(pres: Presentation) -> HopfStructure:
    """Interpret the delta/eps/S/Sinv/char statements attached to a presentation."""
    delta, eps, anti, anti_inv, chars = {}, {}, {}, {}, {}
    for kind, payload, line in pres.hopf_statements:
        try:
            if kind == "delta":
                target, node = payload
                delta[pres.letter(target)] = _eval_tensor(pres, node)
            elif kind in ("eps", "char"):
                if kind == "eps":
                    name, (target, node) = "eps", payload
                else:
                    name, target, node = payload
                val = pres.eval_node(node)
                if val and list(val) != [()]:
                    raise PresentationError("character values must be scalars")
                table = eps if kind == "eps" else chars.setdefault(name, {})
                table[pres.letter(target)] = val.get((), ZERO)
            elif kind in ("S", "Sinv"):
                target, node = payload
                (anti if kind == "S" else anti_inv)[pres.letter(target)] = pres.eval_node(node)
        except (PresentationError, KeyError) as exc:
            raise PresentationError(f"line {line}: {exc}") from None
    for g, nm in enumerate(pres.names):
        a = 2 * g
        if a not in delta or a not in eps or a not in anti:
            raise PresentationError(f"hopf data incomplete for generator {nm}")
    return HopfStructure(pres, delta, eps, anti, anti_inv, chars)
