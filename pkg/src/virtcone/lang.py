"""Script language: parser, AST, and pretty-printer.

A script declares one ambient space, binds named schemes, twist bundles and
families, and issues print directives.  Statements end with ';'.

    ambient P3 [x, y, z, w];
    let X = scheme (x*z, y*z);
    let Y = scheme (x*z);
    let E = twists(2, 2);
    print segre(X in Y);
    print vclass(X, E);

Polynomial expressions share the grammar of parse_poly; series arguments to
residual(...) are polynomials in the reserved symbol H.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BindingError, ParseError
from .poly import ExprParser, Polynomial, PolyRing, poly_str, tokenize

SERIES_RING = PolyRing(("H",))


@dataclass(frozen=True)
class Ambient:
    mode: str  # "projective" | "affine"
    names: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetScheme:
    name: str
    polys: tuple
    inside: str | None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetTwists:
    name: str
    twists: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class LetFamily:
    name: str
    extra_vars: tuple
    polys: tuple
    param: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PrintSegre:
    target: str
    inside: str | None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PrintVclass:
    target: str
    bundle: str | tuple  # bound name or inline twists
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PrintDegrees:
    target: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PrintCone:
    target: str
    inside: str | None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PrintFlatlimit:
    target: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class PrintResidual:
    normal: Polynomial
    tangent_ambient: Polynomial
    tangent_source: Polynomial
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Script:
    ambient: Ambient | None  # None only for the empty script
    statements: tuple        # lets and prints, in source order


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0
        self.ambient = None
        self.ring = None
        self.bound = {}  # name -> "scheme" | "twists" | "family"

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, msg, cls=ParseError):
        t = self.peek()
        raise cls(msg, t.line, t.col)

    def expect(self, kind, what=None):
        t = self.peek()
        if t.kind != kind:
            self.error(f"expected {what or kind!r}")
        return self.next()

    def expect_keyword(self, word):
        t = self.peek()
        if t.kind != "ident" or t.value != word:
            self.error(f"expected keyword {word!r}")
        return self.next()

    def ident(self, what="a name"):
        t = self.peek()
        if t.kind != "ident":
            self.error(f"expected {what}")
        return self.next()

    # ------------------------------------------------------------- statements

    def parse_script(self) -> Script:
        if self.peek().kind == "eof":
            return Script(None, ())
        statements = []
        while self.peek().kind != "eof":
            t = self.peek()
            if t.kind != "ident":
                self.error("expected a statement keyword (ambient, let, print)")
            if t.value == "ambient":
                self.parse_ambient()
            elif t.value == "let":
                statements.append(self.parse_let())
            elif t.value == "print":
                statements.append(self.parse_print())
            else:
                self.error(f"unknown statement {t.value!r}")
        if self.ambient is None:
            raise BindingError("ambient not declared", 1, 1)
        return Script(self.ambient, tuple(statements))

    def parse_ambient(self):
        t = self.next()  # 'ambient'
        if self.ambient is not None:
            raise BindingError("ambient declared twice", t.line, t.col)
        space = self.ident("an ambient space such as P3 or A2")
        word = space.value
        if len(word) < 2 or word[0] not in ("P", "A") or not word[1:].isdigit():
            raise ParseError("ambient space must look like P3 or A2",
                             space.line, space.col)
        mode = "projective" if word[0] == "P" else "affine"
        n = int(word[1:])
        self.expect("[", "'['")
        names = [self.ident("a variable name").value]
        while self.peek().kind == ",":
            self.next()
            names.append(self.ident("a variable name").value)
        self.expect("]", "']'")
        self.expect(";", "';'")
        expected = n + 1 if mode == "projective" else n
        if len(names) != expected:
            raise ParseError(f"{word} needs exactly {expected} variables",
                             space.line, space.col)
        if "H" in names:
            raise ParseError("H is reserved for series expressions",
                             space.line, space.col)
        self.ambient = Ambient(mode, tuple(names), space.line, space.col)
        self.ring = PolyRing(self.ambient.names)

    def require_ambient(self, tok):
        if self.ambient is None:
            raise BindingError("ambient not declared", tok.line, tok.col)

    def require_bound(self, tok, name, kinds):
        if name not in self.bound:
            raise BindingError(f"name {name!r} is not bound", tok.line, tok.col)
        if self.bound[name] not in kinds:
            raise BindingError(
                f"{name!r} is a {self.bound[name]}, expected {' or '.join(kinds)}",
                tok.line, tok.col)

    def parse_poly_list(self, ring):
        self.expect("(", "'('")
        polys = [self.parse_poly(ring)]
        while self.peek().kind == ",":
            self.next()
            polys.append(self.parse_poly(ring))
        self.expect(")", "')'")
        return tuple(polys)

    def parse_poly(self, ring) -> Polynomial:
        sub = ExprParser(self.tokens, self.pos, ring)
        p = sub.parse_expr()
        self.pos = sub.pos
        return p

    def parse_int(self) -> int:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        t = self.expect("int", "an integer")
        return sign * t.value

    def parse_let(self):
        kw = self.next()  # 'let'
        self.require_ambient(kw)
        name_tok = self.ident("a binding name")
        name = name_tok.value
        if name in self.bound:
            raise BindingError(f"name {name!r} is already bound",
                               name_tok.line, name_tok.col)
        self.expect("=", "'='")
        head = self.ident("scheme, twists, or family")
        if head.value == "scheme":
            polys = self.parse_poly_list(self.ring)
            inside = None
            if self.peek().kind == "ident" and self.peek().value == "in":
                self.next()
                in_tok = self.ident("a scheme name")
                self.require_bound(in_tok, in_tok.value, ("scheme",))
                inside = in_tok.value
            self.expect(";", "';'")
            self.bound[name] = "scheme"
            return LetScheme(name, polys, inside, kw.line, kw.col)
        if head.value == "twists":
            self.expect("(", "'('")
            twists = [self.parse_int()]
            while self.peek().kind == ",":
                self.next()
                twists.append(self.parse_int())
            self.expect(")", "')'")
            self.expect(";", "';'")
            self.bound[name] = "twists"
            return LetTwists(name, tuple(twists), kw.line, kw.col)
        if head.value == "family":
            extra = []
            if self.peek().kind == "[":
                self.next()
                extra.append(self.ident("a variable name").value)
                while self.peek().kind == ",":
                    self.next()
                    extra.append(self.ident("a variable name").value)
                self.expect("]", "']'")
            param_probe = None
            # the parameter is declared after the polynomials but is in scope
            # inside them; scan ahead for it
            param_probe = self._scan_param()
            fam_ring = self.ring.with_variables(
                tuple(extra) + (param_probe,),
                extra_weights=(1,) * len(extra) + (0,))
            polys = self.parse_poly_list(fam_ring)
            self.expect_keyword("param")
            param_tok = self.ident("the parameter variable")
            if param_tok.value != param_probe:
                raise ParseError("param clause does not match the scanned parameter",
                                 param_tok.line, param_tok.col)
            self.expect(";", "';'")
            self.bound[name] = "family"
            return LetFamily(name, tuple(extra), polys, param_tok.value,
                             kw.line, kw.col)
        raise ParseError(f"unknown binding kind {head.value!r}",
                         head.line, head.col)

    def _scan_param(self) -> str:
        """Look ahead past the polynomial list for `param IDENT`."""
        depth = 0
        i = self.pos
        while True:
            t = self.tokens[i]
            if t.kind == "eof" or t.kind == ";":
                raise ParseError("family binding needs a `param` clause",
                                 t.line, t.col)
            if t.kind == "(":
                depth += 1
            elif t.kind == ")":
                depth -= 1
            elif depth == 0 and t.kind == "ident" and t.value == "param":
                nxt = self.tokens[i + 1]
                if nxt.kind != "ident":
                    raise ParseError("expected the parameter variable",
                                     nxt.line, nxt.col)
                return nxt.value
            i += 1

    def parse_print(self):
        kw = self.next()  # 'print'
        self.require_ambient(kw)
        head = self.ident("a directive")
        op = head.value
        self.expect("(", "'('")
        if op == "segre" or op == "cone":
            tgt = self.ident("a scheme name")
            self.require_bound(tgt, tgt.value, ("scheme",))
            inside = None
            if self.peek().kind == "ident" and self.peek().value == "in":
                self.next()
                in_tok = self.ident("a scheme name")
                self.require_bound(in_tok, in_tok.value, ("scheme",))
                inside = in_tok.value
            self.expect(")", "')'")
            self.expect(";", "';'")
            cls = PrintSegre if op == "segre" else PrintCone
            return cls(tgt.value, inside, kw.line, kw.col)
        if op == "vclass":
            tgt = self.ident("a scheme name")
            self.require_bound(tgt, tgt.value, ("scheme",))
            self.expect(",", "','")
            t = self.peek()
            if t.kind == "ident" and t.value == "twists":
                self.next()
                self.expect("(", "'('")
                tw = [self.parse_int()]
                while self.peek().kind == ",":
                    self.next()
                    tw.append(self.parse_int())
                self.expect(")", "')'")
                bundle = tuple(tw)
            else:
                b = self.ident("a twists name")
                self.require_bound(b, b.value, ("twists",))
                bundle = b.value
            self.expect(")", "')'")
            self.expect(";", "';'")
            return PrintVclass(tgt.value, bundle, kw.line, kw.col)
        if op == "degrees":
            tgt = self.ident("a scheme name")
            self.require_bound(tgt, tgt.value, ("scheme",))
            self.expect(")", "')'")
            self.expect(";", "';'")
            return PrintDegrees(tgt.value, kw.line, kw.col)
        if op == "flatlimit":
            tgt = self.ident("a family name")
            self.require_bound(tgt, tgt.value, ("family",))
            self.expect(")", "')'")
            self.expect(";", "';'")
            return PrintFlatlimit(tgt.value, kw.line, kw.col)
        if op == "residual":
            normal = self.parse_poly(SERIES_RING)
            self.expect(",", "','")
            tamb = self.parse_poly(SERIES_RING)
            self.expect(",", "','")
            tsrc = self.parse_poly(SERIES_RING)
            self.expect(")", "')'")
            self.expect(";", "';'")
            return PrintResidual(normal, tamb, tsrc, kw.line, kw.col)
        raise ParseError(f"unknown directive {op!r}", head.line, head.col)


def parse(source: str) -> Script:
    return _Parser(tokenize(source)).parse_script()


def pretty(script: Script) -> str:
    amb = script.ambient
    if amb is None:
        return ""
    n = len(amb.names) - (1 if amb.mode == "projective" else 0)
    letter = "P" if amb.mode == "projective" else "A"
    out = [f"ambient {letter}{n} [{', '.join(amb.names)}];"]
    for st in script.statements:
        if isinstance(st, LetScheme):
            body = ", ".join(poly_str(p) for p in st.polys)
            tail = f" in {st.inside}" if st.inside else ""
            out.append(f"let {st.name} = scheme ({body}){tail};")
        elif isinstance(st, LetTwists):
            out.append(f"let {st.name} = twists({', '.join(map(str, st.twists))});")
        elif isinstance(st, LetFamily):
            vars_part = f" [{', '.join(st.extra_vars)}]" if st.extra_vars else ""
            body = ", ".join(poly_str(p) for p in st.polys)
            out.append(f"let {st.name} = family{vars_part} ({body}) param {st.param};")
        elif isinstance(st, PrintSegre):
            tail = f" in {st.inside}" if st.inside else ""
            out.append(f"print segre({st.target}{tail});")
        elif isinstance(st, PrintCone):
            tail = f" in {st.inside}" if st.inside else ""
            out.append(f"print cone({st.target}{tail});")
        elif isinstance(st, PrintVclass):
            if isinstance(st.bundle, str):
                out.append(f"print vclass({st.target}, {st.bundle});")
            else:
                tw = ", ".join(map(str, st.bundle))
                out.append(f"print vclass({st.target}, twists({tw}));")
        elif isinstance(st, PrintDegrees):
            out.append(f"print degrees({st.target});")
        elif isinstance(st, PrintFlatlimit):
            out.append(f"print flatlimit({st.target});")
        elif isinstance(st, PrintResidual):
            out.append("print residual("
                       f"{poly_str(st.normal)}, {poly_str(st.tangent_ambient)}, "
                       f"{poly_str(st.tangent_source)});")
        else:
            raise TypeError(f"unknown statement {st!r}")
    return "\n".join(out) + "\n"
