"""Sparse multivariate polynomials over GF(p) and Buchberger's algorithm.

A monomial is a tuple of exponents aligned with ``Ring.names``. Polynomials
store ``{monomial: coefficient}`` with coefficients in ``0 < c < p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_PRIME = 32003
ORDERS = ("degrevlex", "lex", "block")


class RingMismatchError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _degrevlex(m):
    return (sum(m), tuple(-e for e in reversed(m)))


class Ring:
    """GF(p)[names] with a fixed term order.

    ``order="block"`` with ``elim=k`` compares the first ``k`` variables by
    degrevlex first and breaks ties by degrevlex on the rest, so any monomial
    involving an eliminated variable beats every monomial free of them.
    """

    def __init__(self, names, p: int = DEFAULT_PRIME, order: str = "degrevlex", elim: int = 0):
        if not is_prime(p):
            raise ValueError(f"coefficient field characteristic {p} is not prime")
        if order not in ORDERS:
            raise ValueError(f"unknown term order {order!r}")
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self.p = p
        self.order = order
        self.elim = elim if order == "block" else 0
        self._index = {name: i for i, name in enumerate(self.names)}
        self.zero_monomial = (0,) * self.nvars
        if order == "degrevlex":
            keyfunc = _degrevlex
        elif order == "lex":
            keyfunc = tuple
        else:
            k = self.elim
            def keyfunc(m):
                return (_degrevlex(m[:k]), _degrevlex(m[k:]))
        self.key = lru_cache(maxsize=None)(keyfunc)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names and self.p == other.p
                and self.order == other.order and self.elim == other.elim)

    def __hash__(self):
        return hash((self.names, self.p, self.order, self.elim))

    def __repr__(self):
        extra = f", elim={self.elim}" if self.order == "block" else ""
        return f"Ring({list(self.names)}, p={self.p}, order={self.order!r}{extra})"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise RingMismatchError(f"variable {name!r} not in ring") from None

    def var(self, name) -> "Polynomial":
        m = [0] * self.nvars
        m[self.index(name)] = 1
        return Polynomial(self, {tuple(m): 1})

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.zero_monomial: c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def with_order(self, order, elim=0) -> "Ring":
        return Ring(self.names, self.p, order, elim)

    def parse(self, text) -> "Polynomial":
        return parse_polynomial(text, self)


class Polynomial:
    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms):
        p = ring.p
        clean = {}
        for m, c in terms.items():
            c %= p
            if c:
                clean[m] = c
        self.ring = ring
        self.terms = clean
        self._lm = None

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._lm = None
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise RingMismatchError("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: a * c % self.ring.p for m, a in self.terms.items()})
        other = self._coerce(other)
        p = self.ring.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def mul_term(self, mono, coeff):
        p = self.ring.p
        return Polynomial._raw(self.ring, {
            tuple(a + b for a, b in zip(m, mono)): c * coeff % p for m, c in self.terms.items()
        })

    @property
    def lm(self):
        """Leading monomial under the ring's order."""
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def monic(self):
        if not self.terms:
            return self
        inv = pow(self.lc, -1, self.ring.p)
        if inv == 1:
            return self
        return self * inv

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return {self.ring.names[i] for i in used}

    def __str__(self):
        if not self.terms:
            return "0"
        p = self.ring.p
        parts = []
        for m, c in self.sorted_terms():
            neg = c > p // 2 and p > 2
            mag = p - c if neg else c
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|\^|[-+*()]))")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``"x1*y2 - x2*y1"`` style text (``^``/``**`` powers, parentheses)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at offset {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("var", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not tokens:
        raise ValueError("empty polynomial")
    state = {"i": 0}

    def peek():
        i = state["i"]
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        tok = peek()
        state["i"] += 1
        return tok

    def expr():
        sign = 1
        if peek() in (("op", "-"), ("op", "+")):
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while True:
            if peek() == ("op", "*"):
                take()
                acc = acc * power()
            elif peek()[0] in ("num", "var") or peek() == ("op", "("):
                acc = acc * power()
            else:
                return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            out = ring.one()
            for _ in range(e):
                out = out * base
            return out
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return ring.constant(val)
        if kind == "var":
            return ring.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -atom()
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if state["i"] != len(tokens):
        raise ValueError(f"unexpected trailing token {tokens[state['i']][1]!r}")
    return result


# -- ideals and Groebner bases ---------------------------------------------

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    basis: tuple
    reduced: bool = True

    @property
    def order(self):
        return self.ring.order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def contains(self, f) -> bool:
        return not normal_form(f, self)

    def is_unit(self) -> bool:
        return any(not any(g.lm) for g in self.basis)

    def as_strings(self):
        return [str(g) for g in self.basis]


class Ideal:
    def __init__(self, ring: Ring, generators=()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_polynomial(g, ring)
            if g.ring != ring:
                raise RingMismatchError("generator lives in a different ring")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    @property
    def order(self):
        return self.ring.order

    def __add__(self, other):
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def contains(self, f) -> bool:
        return self.groebner().contains(f)


def _reduce(f_terms, basis, ring):
    """Full multivariate division of ``f_terms`` by monic ``basis``."""
    p = ring.p
    key = ring.key
    f = dict(f_terms)
    rem = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for g in basis:
            gm = g.lm
            if _divides(gm, m):
                q = tuple(a - b for a, b in zip(m, gm))
                for gt, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(q, gt))
                    v = (f.get(t, 0) - c * gc) % p
                    if v:
                        f[t] = v
                    else:
                        f.pop(t, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def normal_form(f: Polynomial, gb) -> Polynomial:
    """Remainder of ``f`` on division by ``gb``; zero iff ``f`` lies in the ideal."""
    basis = gb.basis if isinstance(gb, GroebnerBasis) else tuple(gb)
    ring = gb.ring if isinstance(gb, GroebnerBasis) else f.ring
    if f.ring != ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    monic = [g if g.lc == 1 else g.monic() for g in basis]
    return Polynomial._raw(ring, _reduce(f.terms, monic, ring))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    p = ring.p
    m = _lcm(f.lm, g.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(m, f.lm)), pow(f.lc, -1, p))
    b = g.mul_term(tuple(x - y for x, y in zip(m, g.lm)), pow(g.lc, -1, p))
    return a - b


def buchberger(ideal: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under its ring's order.

    Pairs are taken by the normal strategy (smallest lcm degree, then
    smallest index pair) with the product and chain criteria.
    """
    ring = ideal.ring
    gens = [g.monic() for g in ideal.generators if g]
    basis = []
    pending = {}

    def add(h):
        k = len(basis)
        basis.append(h)
        for i in range(k):
            pending[(i, k)] = _lcm(basis[i].lm, h.lm)

    for g in gens:
        add(g)
    while pending:
        i, j = min(pending, key=lambda ij: (sum(pending[ij]), ij))
        lcm = pending.pop((i, j))
        lmi, lmj = basis[i].lm, basis[j].lm
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        chain = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            if _divides(basis[k].lm, lcm):
                chain = True
                break
        if chain:
            continue
        h = Polynomial._raw(ring, _reduce(s_polynomial(basis[i], basis[j]).terms, basis, ring))
        if h:
            add(h.monic())
    return GroebnerBasis(ring, tuple(_interreduce(basis, ring)), True)


def _interreduce(basis, ring):
    minimal = []
    for i, g in enumerate(basis):
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            if _divides(h.lm, g.lm) and (h.lm != g.lm or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = {g.lm: g.terms[g.lm]}
        tail = {m: c for m, c in g.terms.items() if m != g.lm}
        tail = _reduce(tail, others, ring)
        tail.update(lead)
        out.append(Polynomial._raw(ring, tail).monic())
    out.sort(key=lambda g: ring.key(g.lm), reverse=True)
    return out


def is_groebner(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of the basis reduces to zero."""
    basis = list(gb.basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j]), gb):
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    basis = list(gb.basis)
    for g in basis:
        if g.lc != 1:
            return False
        for h in basis:
            if h is g:
                continue
            if any(_divides(h.lm, m) for m in g.terms):
                return False
    return True


def intersect(i: Ideal, j: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    ring = i.ring
    if j.ring != ring:
        raise RingMismatchError("ideals live in different rings")
    if "t" in ring.names:
        raise RingMismatchError("ring already uses the elimination variable 't'")
    big = Ring(("t",) + ring.names, ring.p, "block", elim=1)
    p = ring.p
    gens = []
    for f in i.generators:
        gens.append(Polynomial._raw(big, {(1,) + m: c for m, c in f.terms.items()}))
    for g in j.generators:
        terms = {}
        for m, c in g.terms.items():
            terms[(0,) + m] = c
            terms[(1,) + m] = (p - c) % p
        gens.append(Polynomial(big, terms))
    gb = buchberger(Ideal(big, gens))
    kept = [Polynomial._raw(ring, {m[1:]: c for m, c in g.terms.items()}) for g in gb.basis if g.lm[0] == 0]
    out = Ideal(ring, kept)
    return out


def ideal_equal(i: Ideal, j: Ideal) -> bool:
    if i.ring != j.ring:
        raise RingMismatchError("ideals live in different rings")
    gi, gj = i.groebner(), j.groebner()
    return all(not normal_form(f, gj) for f in i.generators) and all(not normal_form(f, gi) for f in j.generators)


def ideal_contained(i: Ideal, j: Ideal) -> bool:
    """I ⊆ J."""
    gj = j.groebner()
    return all(not normal_form(f, gj) for f in i.generators)


def krull_dimension(gb: GroebnerBasis) -> int:
    """dim R/I read off the leading monomials: the largest variable set carrying none of them."""
    from itertools import combinations

    if gb.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(g.lm) if e) for g in gb.basis]
    nv = gb.ring.nvars
    for size in range(nv, -1, -1):
        for u in combinations(range(nv), size):
            us = set(u)
            if not any(s <= us for s in supports):
                return size
    return 0
