"""Exact multivariate polynomials over the rationals.

Rings carry an ordered variable list, a one- or two-factor grading (with
optional degree-0 weights for deformation parameters) and a monomial order.
Polynomials are immutable-by-convention sparse term maps; every operation
returns a canonical value with no stored zero coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    NonHomogeneousError,
    ParseError,
    RingMismatchError,
    UnboundVariableError,
    VirtconeError,
)
from .rationals import Q, rat_str

Monomial = tuple  # exponent vector, one entry per ring variable


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class Grevlex:
    name: str = field(default="grevlex", init=False)

    def key_fn(self, ring: "PolyRing"):
        def key(e: Monomial):
            return (sum(e), tuple(-x for x in reversed(e)))

        return key


@dataclass(frozen=True)
class Lex:
    name: str = field(default="lex", init=False)

    def key_fn(self, ring: "PolyRing"):
        return lambda e: e


@dataclass(frozen=True)
class Block:
    """Elimination order: grevlex on `front` variables, ties by grevlex on the rest."""

    front: tuple

    @property
    def name(self) -> str:
        return f"block({','.join(self.front)})"

    def key_fn(self, ring: "PolyRing"):
        fi = tuple(ring.index(v) for v in self.front)
        ri = tuple(i for i in range(len(ring.names)) if i not in set(fi))

        def key(e: Monomial):
            ef = tuple(e[i] for i in fi)
            er = tuple(e[i] for i in ri)
            return (sum(ef), tuple(-x for x in reversed(ef)),
                    sum(er), tuple(-x for x in reversed(er)))

        return key


def order_from_name(name: str):
    if name == "grevlex":
        return Grevlex()
    if name == "lex":
        return Lex()
    raise VirtconeError(f"unknown monomial order {name!r}")


# ---------------------------------------------------------------------------
# rings


class PolyRing:
    """Polynomial ring Q[x_1..x_n] with grading factors and a monomial order.

    factors[i] is 1 or 2; weights[i] is the degree of names[i] in its factor
    (0 for deformation parameters such as t).
    """

    __slots__ = ("names", "factors", "weights", "order", "_index", "_key")

    def __init__(self, names: Iterable[str], factors=None, order=None, weights=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise VirtconeError("duplicate variable names")
        self.factors = tuple(factors) if factors is not None else (1,) * len(self.names)
        if len(self.factors) != len(self.names) or any(f not in (1, 2) for f in self.factors):
            raise VirtconeError("bad factor assignment")
        self.weights = tuple(weights) if weights is not None else (1,) * len(self.names)
        self.order = order if order is not None else Grevlex()
        self._index = {n: i for i, n in enumerate(self.names)}
        self._key = self.order.key_fn(self)

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.names == other.names
                and self.factors == other.factors
                and self.weights == other.weights
                and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.factors, self.weights, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, order={self.order.name})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnboundVariableError(f"unknown variable {name!r}") from None

    def key(self, e: Monomial):
        return self._key(e)

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.names, self.factors, order, self.weights)

    def with_variables(self, extra_names, extra_factors=None, extra_weights=None,
                       order=None) -> "PolyRing":
        extra_names = tuple(extra_names)
        ef = tuple(extra_factors) if extra_factors is not None else (1,) * len(extra_names)
        ew = tuple(extra_weights) if extra_weights is not None else (1,) * len(extra_names)
        return PolyRing(self.names + extra_names, self.factors + ef,
                        order if order is not None else self.order, self.weights + ew)

    def drop_variables(self, drop) -> "PolyRing":
        drop = set(drop)
        keep = [i for i, n in enumerate(self.names) if n not in drop]
        return PolyRing(tuple(self.names[i] for i in keep),
                        tuple(self.factors[i] for i in keep),
                        Grevlex(),
                        tuple(self.weights[i] for i in keep))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = Q(c) if not isinstance(c, type(Q(0))) else c
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * len(self.names): c})

    def var(self, name: str) -> "Polynomial":
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Q(1)})

    def vars(self):
        return [self.var(n) for n in self.names]

    def factor_names(self, factor: int):
        return [n for n, f in zip(self.names, self.factors) if f == factor]

    def monomial(self, e: Monomial, c=1) -> "Polynomial":
        if Q(c) == 0:
            return self.zero()
        return Polynomial(self, {tuple(e): Q(c)})


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- basic protocol

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<{poly_str(self)}>"

    # -- arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError("operands in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise VirtconeError("negative polynomial power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Q(c)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    # -- structure

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda mc: self.ring.key(mc[0]), reverse=True)

    def lead(self):
        """(monomial, coefficient) of the leading term; None for zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=self.ring.key)
        return m, self.terms[m]

    def monic(self) -> "Polynomial":
        lt = self.lead()
        if lt is None:
            return self
        return self.scale(Q(1) / lt[1])

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant(self):
        return self.terms.get((0,) * len(self.ring.names), Q(0))

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def coefficient_of(self, name: str, power: int) -> "Polynomial":
        """Coefficient of name**power, as a polynomial with that variable's exponent zeroed."""
        i = self.ring.index(name)
        terms = {}
        for m, c in self.terms.items():
            if m[i] == power:
                mm = list(m)
                mm[i] = 0
                terms[tuple(mm)] = c
        return Polynomial(self.ring, terms)

    def term_bidegree(self, m: Monomial):
        r = self.ring
        d1 = sum(m[i] * r.weights[i] for i in range(len(m)) if r.factors[i] == 1)
        d2 = sum(m[i] * r.weights[i] for i in range(len(m)) if r.factors[i] == 2)
        return (d1, d2)

    def is_homogeneous(self) -> bool:
        degs = {self.term_bidegree(m) for m in self.terms}
        return len(degs) <= 1


def poly_arith(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    """Dispatch form of +, -, *: used by the script runner."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise VirtconeError(f"unknown arithmetic op {op!r}")


def multi_degree(p: Polynomial):
    """Common (factor-1, factor-2) degree of all terms; error if mixed or zero."""
    if not p.terms:
        raise NonHomogeneousError("zero polynomial has no degree")
    degs = {p.term_bidegree(m) for m in p.terms}
    if len(degs) != 1:
        raise NonHomogeneousError(f"non-homogeneous polynomial: degrees {sorted(degs)}")
    return degs.pop()


def substitute(p: Polynomial, bindings: Mapping[str, Polynomial],
               target: PolyRing | None = None) -> Polynomial:
    """Image of p under the ring map sending each variable to its binding.

    Variables without a binding are sent to the same-named variable of the
    target ring; if the target lacks that name the substitution fails.
    """
    if target is None:
        for img in bindings.values():
            target = img.ring
            break
        else:
            target = p.ring
    images = []
    for n in p.ring.names:
        if n in bindings:
            img = bindings[n]
            if img.ring != target:
                raise RingMismatchError(f"binding for {n!r} lies in a different ring")
            images.append(img)
        elif n in target.names:
            images.append(target.var(n))
        else:
            raise UnboundVariableError(f"variable {n!r} has no image in the target ring")
    result = target.zero()
    for m, c in p.terms.items():
        term = target.const(c)
        for i, e in enumerate(m):
            if e:
                term = term * images[i] ** e
        result = result + term
    return result


# ---------------------------------------------------------------------------
# text form


def _term_str(ring: PolyRing, m: Monomial, c) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    if not parts:
        return rat_str(c)
    if c == 1:
        return "*".join(parts)
    if c == -1:
        return "-" + "*".join(parts)
    return rat_str(c) + "*" + "*".join(parts)


def poly_str(p: Polynomial) -> str:
    """Canonical text form; parse_poly inverts it exactly."""
    if not p.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        s = _term_str(p.ring, m, c)
        if i == 0:
            out.append(s)
        elif s.startswith("-"):
            out.append(" - " + s[1:])
        else:
            out.append(" + " + s)
    return "".join(out)


# ---------------------------------------------------------------------------
# tokenizer + expression parser (shared with the script language)

SYMBOLS = ("+", "-", "*", "/", "^", "(", ")", "[", "]", ",", ";", "=")


class Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind  # 'int' | 'ident' | symbol | 'eof'
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"Token({self.kind!r},{self.value!r}@{self.line}:{self.col})"


def tokenize(text: str):
    tokens = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in SYMBOLS:
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", None, line, col))
    return tokens


class ExprParser:
    """Recursive-descent parser for polynomial expressions over a ring.

    Grammar: expr := term (('+'|'-') term)*
             term := unary (('*'|'/')? unary)*   -- juxtaposition multiplies
             unary := '-' unary | power
             power := atom ('^' INT)?
             atom := INT | IDENT | '(' expr ')'
    """

    def __init__(self, tokens, pos, ring: PolyRing):
        self.tokens = tokens
        self.pos = pos
        self.ring = ring

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, msg):
        t = self.peek()
        raise ParseError(msg, t.line, t.col)

    def parse_expr(self) -> Polynomial:
        p = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            q = self.parse_term()
            p = p + q if op == "+" else p - q
        return p

    def parse_term(self) -> Polynomial:
        p = self.parse_unary()
        while True:
            t = self.peek()
            if t.kind in ("*", "/"):
                op = self.next().kind
                q = self.parse_unary()
                if op == "/":
                    if q.total_degree() > 0 or not q:
                        self.error("division only by nonzero constants")
                    p = p.scale(Q(1) / q.constant())
                else:
                    p = p * q
            elif t.kind in ("int", "ident", "("):
                p = p * self.parse_unary()
            else:
                return p

    def parse_unary(self) -> Polynomial:
        if self.peek().kind == "-":
            self.next()
            return -self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> Polynomial:
        p = self.parse_atom()
        if self.peek().kind == "^":
            self.next()
            t = self.peek()
            if t.kind != "int":
                self.error("expected integer exponent")
            self.next()
            p = p ** t.value
        return p

    def parse_atom(self) -> Polynomial:
        t = self.peek()
        if t.kind == "int":
            self.next()
            return self.ring.const(t.value)
        if t.kind == "ident":
            if t.value not in self.ring.names:
                self.error(f"unknown variable {t.value!r}")
            self.next()
            return self.ring.var(t.value)
        if t.kind == "(":
            self.next()
            p = self.parse_expr()
            if self.peek().kind != ")":
                self.error("expected ')'")
            self.next()
            return p
        self.error("expected polynomial atom")


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    tokens = tokenize(text)
    parser = ExprParser(tokens, 0, ring)
    p = parser.parse_expr()
    t = parser.peek()
    if t.kind != "eof":
        raise ParseError("trailing input after polynomial", t.line, t.col)
    return p
