"""Presented noncommutative *-algebras with rewriting to normal form.

A monomial is a tuple of letters.  Generator number g contributes the
letter 2*g, and if g is declared invertible its inverse is the letter
2*g+1.  Rewrite rules replace a word by a linear combination of words;
multiplication appends one letter at a time and reduces the suffix, which
is enough because the prefix of an irreducible word is irreducible.

Presentation source grammar (statements end with ";", "#" starts a comment)::

    gen E F K;          inv K;
    rel K*E = q*E*K;    star E = F;
    grade E = 1, 0;     weight E = 3;    filt g = 0;

The "hopf" statements (delta, eps, S, Sinv, char) are kept unevaluated on
the presentation and interpreted by :mod:`hopfdihedral.hopf`.
"""

from __future__ import annotations

import random
import re
import sys
from fractions import Fraction

from .scalars import ONE, ZERO, Scalar

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class PresentationError(ValueError):
    """Raised for syntax errors and ill-formed presentations."""


# ---------------------------------------------------------------- lexing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[+\-*/^()=;@,]))"
)


def _tokenize(text: str):
    toks = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(line, pos)
            if not m or m.end() == pos:
                raise PresentationError(f"line {lineno}, column {pos + 1}: unexpected character {line[pos]!r}")
            kind = m.lastgroup
            toks.append((kind, m.group(kind), lineno, m.start(kind) + 1))
            pos = m.end()
    toks.append(("eof", "", len(text.splitlines()) + 1, 1))
    return toks


# ------------------------------------------------------------------ AST
# nodes: ("num", Fraction) ("sym", name, line, col) ("add", a, b) ("sub", a, b)
# ("mul", a, b) ("div", a, b) ("neg", a) ("pow", a, int) ("tensor", [a, b, ...])


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None, kind=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            self.fail(f"expected {value!r}")
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind}")
        self.i += 1
        return tok

    def fail(self, msg):
        kind, val, line, col = self.peek()
        found = "end of input" if kind == "eof" else repr(val)
        raise PresentationError(f"line {line}, column {col}: {msg}, found {found}")

    def at(self, value):
        return self.peek()[1] == value and self.peek()[0] != "eof"

    # expressions
    def texpr(self):
        node = self.tterm()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            rhs = self.tterm()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def tterm(self):
        if self.at("-"):
            self.take()
            return ("neg", self.tterm())
        legs = [self.term()]
        while self.at("@"):
            self.take()
            legs.append(self.term())
        return legs[0] if len(legs) == 1 else ("tensor", legs)

    def expr(self):
        node = self.term_signed()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term_signed(self):
        if self.at("-"):
            self.take()
            return ("neg", self.term_signed())
        return self.term()

    def term(self):
        node = self.power()
        while self.at("*") or self.at("/"):
            op = self.take()[1]
            rhs = self.power()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.take()
            neg = False
            if self.at("-"):
                self.take()
                neg = True
            e = int(self.take(kind="num")[1])
            base = ("pow", base, -e if neg else e)
        return base

    def atom(self):
        kind, val, line, col = self.peek()
        if kind == "num":
            self.take()
            return ("num", Fraction(int(val)))
        if kind == "id":
            self.take()
            return ("sym", val, line, col)
        if val == "(":
            self.take()
            node = self.texpr()
            self.take(")")
            return node
        if val == "-":
            self.take()
            return ("neg", self.atom())
        self.fail("expected a number, symbol or '('")

    def intvector(self):
        out = []
        while True:
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            out.append(sign * int(self.take(kind="num")[1]))
            if not self.at(","):
                return tuple(out)
            self.take()

    def statements(self):
        out = []
        while self.peek()[0] != "eof":
            kind, val, line, col = self.take(kind="id")
            if val in ("gen", "inv"):
                names = []
                while not self.at(";"):
                    if self.at(","):
                        self.take()
                        continue
                    names.append(self.take(kind="id")[1])
                if not names:
                    self.fail("expected generator names")
                out.append((val, names, line))
            elif val == "rel":
                lhs = self.expr()
                self.take("=")
                if self.at(";"):
                    self.fail("expected an expression")
                rhs = self.expr()
                out.append(("rel", (lhs, rhs), line))
            elif val in ("star", "eps", "S", "Sinv"):
                target = self._target()
                self.take("=")
                out.append((val, (target, self.expr()), line))
            elif val == "delta":
                target = self._target()
                self.take("=")
                out.append((val, (target, self.texpr()), line))
            elif val == "char":
                name = self.take(kind="id")[1]
                target = self._target()
                self.take("=")
                out.append((val, (name, target, self.expr()), line))
            elif val in ("grade", "weight", "filt"):
                target = self.take(kind="id")[1]
                self.take("=")
                out.append((val, (target, self.intvector()), line))
            else:
                raise PresentationError(f"line {line}, column {col}: unknown section {val!r}")
            self.take(";")
        return out

    def _target(self):
        name = self.take(kind="id")[1]
        if self.at("^"):
            self.take()
            self.take("-")
            if self.take(kind="num")[1] != "1":
                self.fail("only ^-1 is allowed on a target generator")
            return name + "^-1"
        return name


# ----------------------------------------------------------- presentation


def _add_into(acc: dict, key, coef):
    v = acc.get(key)
    v = coef if v is None else v + coef
    if v:
        acc[key] = v
    elif key in acc:
        del acc[key]


class Presentation:
    """Generators, oriented rewrite rules, star map, grading and filtration.

    Built by :func:`parse_presentation`; treat as immutable afterwards.
    The memo tables only ever grow, and their entries are pure functions
    of the presentation.
    """

    def __init__(self, names, invertible=(), name="algebra"):
        self.name = name
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.invertible = frozenset(self.index[n] for n in invertible)
        self.rules: dict[tuple, tuple] = {}
        self.rule_lengths: list[int] = []
        self.weights = [1] * len(self.names)
        self.filt = [1] * len(self.names)
        self.grading: dict[int, tuple] = {}
        self.star_map: dict[int, dict] = {}
        self.hopf_statements: list = []
        self.params: dict[str, Scalar] = {}
        self.confluence_report: list = []
        self._memo: dict = {}
        for g in self.invertible:
            self._add_rule((2 * g, 2 * g + 1), {(): ONE})
            self._add_rule((2 * g + 1, 2 * g), {(): ONE})

    # letters and words
    def letter(self, name: str) -> int:
        if name.endswith("^-1"):
            g = self.index[name[:-3]]
            if g not in self.invertible:
                raise PresentationError(f"generator {name[:-3]} is not invertible")
            return 2 * g + 1
        return 2 * self.index[name]

    def inverse_letter(self, a: int) -> int:
        if a // 2 not in self.invertible:
            raise PresentationError(f"letter {self.letter_name(a)} is not invertible")
        return a ^ 1

    def letter_name(self, a: int) -> str:
        n = self.names[a // 2]
        return n + "^-1" if a & 1 else n

    def word_from_powers(self, pairs) -> tuple:
        """Word from (generator name, exponent) pairs."""
        out = []
        for nm, e in pairs:
            g = self.index[nm]
            if e < 0:
                if g not in self.invertible:
                    raise PresentationError(f"negative power of non-invertible {nm}")
                out.extend([2 * g + 1] * (-e))
            else:
                out.extend([2 * g] * e)
        return tuple(out)

    def _add_rule(self, lhs: tuple, rhs: dict):
        if lhs in self.rules:
            raise PresentationError(f"duplicate rule for {self.format_word(lhs)}")
        self.rules[lhs] = tuple(rhs.items())
        self.rule_lengths = sorted({len(w) for w in self.rules})
        self._memo.clear()

    # ordering used for termination: weighted degree, then lexicographic
    def order_key(self, word: tuple):
        return (sum(self.weights[a // 2] for a in word), len(word), word)

    def check_termination(self):
        for lhs, rhs in self.rules.items():
            k = self.order_key(lhs)
            for w, _ in rhs:
                if not self.order_key(w) < k:
                    raise PresentationError(
                        f"rule {self.format_word(lhs)} -> ... contains {self.format_word(w)} "
                        "which is not smaller in the weighted degree-lexicographic order"
                    )

    # normal forms
    def mul_letter(self, mono: tuple, a: int) -> dict:
        key = (mono, a)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        w = mono + (a,)
        out = None
        for L in self.rule_lengths:
            if L > len(w):
                break
            rhs = self.rules.get(w[-L:])
            if rhs is None:
                continue
            prefix = w[:-L]
            out = {}
            for word, coef in rhs:
                for m, c in self.mul_word(prefix, word).items():
                    _add_into(out, m, coef * c)
            break
        if out is None:
            out = {w: ONE}
        self._memo[key] = out
        return out

    def mul_word(self, mono: tuple, word: tuple) -> dict:
        cur = {mono: ONE}
        for a in word:
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in self.mul_letter(m, a).items():
                    _add_into(nxt, m2, c * c2)
            cur = nxt
            if not cur:
                break
        return cur

    def mul_mono(self, m1: tuple, m2: tuple) -> dict:
        if not m2:
            return {m1: ONE}
        if not m1:
            return {m2: ONE} if self.is_normal(m2) else self.mul_word((), m2)
        key = ("mm", m1, m2)
        hit = self._memo.get(key)
        if hit is None:
            hit = self.mul_word(m1, m2)
            self._memo[key] = hit
        return hit

    def is_normal(self, word: tuple) -> bool:
        for L in self.rule_lengths:
            for s in range(len(word) - L + 1):
                if word[s:s + L] in self.rules:
                    return False
        return True

    def normalize_word(self, word: tuple) -> dict:
        return self.mul_word((), word)

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                c = c1 * c2
                for m, c3 in self.mul_mono(m1, m2).items():
                    _add_into(out, m, c * c3)
        return out

    # star
    def star_letter(self, a: int) -> dict:
        img = self.star_map.get(a)
        if img is not None:
            return img
        if a & 1 and (a ^ 1) in self.star_map:
            base = self.star_map[a ^ 1]
            if len(base) == 1:
                (w, c), = base.items()
                inv = tuple(self.inverse_letter(b) for b in reversed(w))
                img = {inv: c.inverse()}
                self.star_map[a] = img
                return img
        raise PresentationError(f"no star image for {self.letter_name(a)}")

    def star_mono(self, mono: tuple) -> dict:
        key = ("star", mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = {(): ONE}
        for a in reversed(mono):
            out = self.mul(out, self.star_letter(a))
        self._memo[key] = out
        return out

    def star(self, x: dict) -> dict:
        out = {}
        for m, c in x.items():
            cc = c.conj()
            for m2, c2 in self.star_mono(m).items():
                _add_into(out, m2, cc * c2)
        return out

    # degrees
    def filtration_degree(self, mono: tuple) -> int:
        return sum(self.filt[a // 2] for a in mono)

    def grade(self, mono: tuple):
        if not self.grading:
            return ()
        dim = len(next(iter(self.grading.values())))
        tot = [0] * dim
        for a in mono:
            v = self.grading.get(a // 2, (0,) * dim)
            sgn = -1 if a & 1 else 1
            for i in range(dim):
                tot[i] += sgn * v[i]
        return tuple(tot)

    # formatting
    def format_word(self, word: tuple) -> str:
        if not word:
            return "1"
        parts, i = [], 0
        while i < len(word):
            a = word[i]
            j = i
            while j < len(word) and word[j] == a:
                j += 1
            e = j - i
            nm = self.names[a // 2]
            if a & 1:
                parts.append(f"{nm}^-{e}")
            else:
                parts.append(nm if e == 1 else f"{nm}^{e}")
            i = j
        return "*".join(parts)

    def format(self, x: dict) -> str:
        if not x:
            return "0"
        out = []
        for m in sorted(x, key=self.order_key):
            c = x[m]
            w = self.format_word(m)
            if w == "1":
                out.append(f"({c})")
            elif c == 1:
                out.append(w)
            else:
                out.append(f"({c})*{w}")
        return " + ".join(out)

    # confluence
    def critical_pairs(self):
        lhss = list(self.rules)
        for l1 in lhss:
            for l2 in lhss:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        yield l1 + l2[k:], l1, len(l1) - k, l2
                if l1 != l2 and len(l2) < len(l1):
                    for s in range(1, len(l1) - len(l2)):
                        if l1[s:s + len(l2)] == l2:
                            yield l1, l1, s, l2

    def _reduce_at(self, word: tuple, lhs: tuple, pos: int) -> dict:
        head, tail = word[:pos], word[pos + len(lhs):]
        out = {}
        for w, c in self.rules[lhs]:
            for m, c2 in self.normalize_word(head + w + tail).items():
                _add_into(out, m, c * c2)
        return out

    def check_confluence(self, max_len: int = 6) -> list:
        """Resolve every critical pair; returns the list of failures."""
        failures = []
        for word, l1, pos2, l2 in self.critical_pairs():
            if len(word) > max_len:
                continue
            a = self._reduce_at(word, l1, 0)
            b = self._reduce_at(word, l2, pos2)
            if a != b:
                failures.append((self.format_word(word), self.format(a), self.format(b)))
        self.confluence_report = failures
        return failures

    def reduce_randomly(self, word: tuple, rng: random.Random) -> dict:
        """Independent reducer: rewrite randomly chosen redexes until irreducible."""
        todo = {word: ONE}
        done = {}
        while todo:
            w, c = todo.popitem()
            redexes = [
                (s, w[s:s + L])
                for L in self.rule_lengths
                for s in range(len(w) - L + 1)
                if w[s:s + L] in self.rules
            ]
            if not redexes:
                _add_into(done, w, c)
                continue
            s, lhs = rng.choice(redexes)
            for rw, rc in self.rules[lhs]:
                _add_into(todo, w[:s] + rw + w[s + len(lhs):], c * rc)
        return done

    # elements
    def element(self, terms) -> "AlgElement":
        return AlgElement(self, terms)

    def one(self) -> "AlgElement":
        return AlgElement(self, {(): ONE})

    def gen(self, name: str) -> "AlgElement":
        return AlgElement(self, {(self.letter(name),): ONE})

    def parse_element(self, text: str) -> "AlgElement":
        p = _Parser(text)
        node = p.expr()
        if p.peek()[0] != "eof":
            p.fail("trailing input")
        return AlgElement(self, self.eval_node(node))

    def eval_node(self, node, free: bool = False) -> dict:
        """Evaluate an expression AST to a dict of monomials.

        With free=True products are concatenated without rewriting.
        """
        kind = node[0]
        if kind == "num":
            return {(): Scalar(node[1])}
        if kind == "sym":
            name = node[1]
            if name in self.params:
                return {(): self.params[name]}
            if name == "i":
                return {(): Scalar(0, 1)}
            if name in self.index:
                return {(2 * self.index[name],): ONE}
            raise PresentationError(f"line {node[2]}, column {node[3]}: unknown symbol {name!r}")
        if kind == "neg":
            return {m: -c for m, c in self.eval_node(node[1], free).items()}
        if kind in ("add", "sub"):
            a = dict(self.eval_node(node[1], free))
            for m, c in self.eval_node(node[2], free).items():
                _add_into(a, m, c if kind == "add" else -c)
            return a
        if kind == "mul":
            a, b = self.eval_node(node[1], free), self.eval_node(node[2], free)
            if free:
                out = {}
                for m1, c1 in a.items():
                    for m2, c2 in b.items():
                        _add_into(out, m1 + m2, c1 * c2)
                return out
            return self.mul(a, b)
        if kind == "div":
            b = self.eval_node(node[2], free)
            if list(b) != [()]:
                raise PresentationError("division is only allowed by a scalar")
            inv = b[()].inverse()
            return {m: c * inv for m, c in self.eval_node(node[1], free).items()}
        if kind == "pow":
            base, e = node[1], node[2]
            val = self.eval_node(base, free)
            if e < 0:
                if list(val) == [()]:
                    return {(): val[()].inverse() ** (-e)}
                if len(val) == 1:
                    (w, c), = val.items()
                    if c == 1 and all(a // 2 in self.invertible for a in w):
                        inv = tuple(a ^ 1 for a in reversed(w))
                        val = {inv: ONE}
                        e = -e
                    else:
                        raise PresentationError("negative power of a non-invertible element")
                else:
                    raise PresentationError("negative power of a non-invertible element")
            out = {(): ONE}
            for _ in range(e):
                if free:
                    out = {m1 + m2: c1 * c2 for m1, c1 in out.items() for m2, c2 in val.items()}
                else:
                    out = self.mul(out, val)
            return out
        if kind == "tensor":
            raise PresentationError("tensor symbol '@' is only allowed in the hopf section")
        raise PresentationError(f"bad expression node {kind}")

    def describe(self) -> dict:
        return {
            "name": self.name,
            "generators": self.names,
            "invertible": sorted(self.names[g] for g in self.invertible),
            "rules": len(self.rules),
            "confluence_failures": len(self.confluence_report),
        }


class AlgElement:
    """Finite linear combination of normal-form monomials."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict):
        self.pres = pres
        self.terms = {m: Scalar.coerce(c) for m, c in terms.items() if c}

    def _wrap(self, other):
        if isinstance(other, AlgElement):
            return other
        return AlgElement(self.pres, {(): Scalar.coerce(other)})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in self._wrap(other).terms.items():
            _add_into(out, m, c)
        return AlgElement(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return AlgElement(self.pres, self.pres.mul(self.terms, other.terms))
        s = Scalar.coerce(other)
        return AlgElement(self.pres, {m: c * s for m, c in self.terms.items()})

    def __rmul__(self, other):
        s = Scalar.coerce(other)
        return AlgElement(self.pres, {m: s * c for m, c in self.terms.items()})

    def __pow__(self, e: int):
        out = self.pres.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar)):
            return self == self._wrap(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def star(self) -> "AlgElement":
        return AlgElement(self.pres, self.pres.star(self.terms))

    def coefficient(self, mono) -> Scalar:
        return self.terms.get(tuple(mono), ZERO)

    def __repr__(self):
        return self.pres.format(self.terms)

    __str__ = __repr__


# --------------------------------------------------------------- parsing


def _as_word(pres: Presentation, node, line) -> tuple:
    val = pres.eval_node(node, free=True)
    if len(val) != 1:
        raise PresentationError(f"line {line}: left side of a relation must be a single word")
    (w, c), = val.items()
    if c != 1 or not w:
        raise PresentationError(f"line {line}: left side of a relation must be a word with coefficient 1")
    return w


def parse_presentation(text: str, params: dict | None = None, name: str = "algebra",
                       check: bool = True, max_overlap: int = 6) -> Presentation:
    """Parse presentation source into a validated :class:`Presentation`."""
    stmts = _Parser(text).statements()
    gens, invs = [], []
    for kind, payload, line in stmts:
        if kind == "gen":
            for n in payload:
                if n in gens:
                    raise PresentationError(f"line {line}: generator {n} declared twice")
                if n in ("i",) or (params and n in params):
                    raise PresentationError(f"line {line}: {n} is reserved")
                gens.append(n)
        elif kind == "inv":
            invs.extend(payload)
    if not gens:
        raise PresentationError("no generators declared")
    for n in invs:
        if n not in gens:
            raise PresentationError(f"inverse declared for unknown generator {n}")
    pres = Presentation(gens, invs, name=name)
    pres.params = {k: Scalar.coerce(v) for k, v in (params or {}).items()}
    for kind, payload, line in stmts:
        if kind == "rel":
            lhs, rhs = payload
            w = _as_word(pres, lhs, line)
            pres._add_rule(w, pres.eval_node(rhs, free=True))
        elif kind in ("weight", "filt"):
            target, vec = payload
            if target not in pres.index or len(vec) != 1:
                raise PresentationError(f"line {line}: bad {kind} statement")
            (pres.weights if kind == "weight" else pres.filt)[pres.index[target]] = vec[0]
        elif kind == "grade":
            target, vec = payload
            if target not in pres.index:
                raise PresentationError(f"line {line}: unknown generator {target}")
            pres.grading[pres.index[target]] = vec
    if pres.grading:
        dims = {len(v) for v in pres.grading.values()}
        if len(dims) != 1:
            raise PresentationError("grade vectors have different lengths")
    pres.check_termination()
    for kind, payload, line in stmts:
        if kind == "star":
            target, expr = payload
            pres.star_map[pres.letter(target)] = pres.eval_node(expr)
        elif kind in ("delta", "eps", "S", "Sinv", "char"):
            pres.hopf_statements.append((kind, payload, line))
    if check:
        fails = pres.check_confluence(max_overlap)
        if fails:
            w, a, b = fails[0]
            raise PresentationError(f"overlap check failed on {w}: {a} != {b}")
    return pres


def random_word(pres: Presentation, length: int, rng: random.Random) -> tuple:
    letters = []
    for g in range(len(pres.names)):
        letters.append(2 * g)
        if g in pres.invertible:
            letters.append(2 * g + 1)
    return tuple(rng.choice(letters) for _ in range(length))


def random_element(pres: Presentation, rng: random.Random, max_len: int = 3, terms: int = 3,
                   complex_coeffs: bool = False) -> dict:
    out = {}
    for _ in range(terms):
        w = random_word(pres, rng.randint(0, max_len), rng)
        c = Scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
                   Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if complex_coeffs else 0)
        for m, c2 in pres.normalize_word(w).items():
            _add_into(out, m, c * c2)
    return out
