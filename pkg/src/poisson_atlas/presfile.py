"""Parse and serialize the presentation file format.

The grammar, one clause per statement, each ending in `;`:

    vars x, y, z laurent(z);
    bracket exact f = z^2 - x*y;
    bracket scaled a = 2*z; f = x*y + z + z^-1;
    bracket table { [x,y] = x*y; [y,z] = y*z - 2*x; };
    relation f - 4;
    point (0, 0, 1);
    auto phi { x -> x; y -> -y; z -> -z; };
    embed sub(u, v, w) { u -> x^2/8; v -> y^2/8; w -> z/2; };
    grading z;

Comments run from `#` to end of line.  Scalars may be integers, rationals
`p/q`, or `sqrt(d)` combinations.  Names bound in a bracket clause (f, a)
are usable in later expressions.  An embed block may optionally carry its
own `bracket` and `relation` clauses describing the sub-presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brackets import (
    Exact,
    PoissonPresentation,
    Scaled,
    SubstitutionMap,
    Table,
)
from .errors import LaurentViolationError, ParseError
from .poly import LaurentPoly, PointP, VarSet
from .scalars import Scalar

_SYMBOLS = ("->", ",", ";", "(", ")", "{", "}", "[", "]", "=", "+", "-", "*", "/", "^")


@dataclass
class _Token:
    kind: str  # "name" | "int" | "sym" | "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if text.startswith("->", i):
            tokens.append(_Token("sym", "->", line, col))
            i += 2
            col += 2
            continue
        if c in "(){}[],;=+-*/^":
            tokens.append(_Token("sym", c, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


@dataclass
class EmbedClause:
    """An embedding of a named sub-presentation, generator by generator."""

    name: str
    sub_varset: VarSet
    images: dict  # sub variable name -> LaurentPoly over the ambient varset
    sub_bracket: object = None  # optional BracketSpec over the sub varset
    sub_relations: tuple = ()
    sub_bound: dict = field(default_factory=dict)

    def substitution(self) -> SubstitutionMap:
        return SubstitutionMap.from_dict(self.sub_varset, self.images)

    def sub_presentation(self, name="") -> PoissonPresentation:
        if self.sub_bracket is None:
            raise ParseError(f"embed {self.name} carries no sub-presentation bracket")
        return PoissonPresentation(
            self.sub_varset, self.sub_bracket, self.sub_relations, name or self.name
        )


@dataclass
class PresentationFile:
    """Parsed form of one presentation file."""

    varset: VarSet
    bracket_spec: object
    bound: dict  # names bound in the bracket clause, e.g. f and a
    relations: list = field(default_factory=list)
    points: list = field(default_factory=list)
    autos: dict = field(default_factory=dict)
    embeds: dict = field(default_factory=dict)
    grading: LaurentPoly | None = None

    def presentation(self, name="") -> PoissonPresentation:
        """Semantic validation (Jacobi) happens in the constructor."""
        return PoissonPresentation(
            self.varset, self.bracket_spec, tuple(self.relations), name
        )


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token helpers ---------------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def expect_name(self) -> _Token:
        tok = self.next()
        if tok.kind != "name":
            raise ParseError(f"expected a name, found {tok.text!r}", tok.line, tok.col)
        return tok

    def at(self, text: str) -> bool:
        return self.peek().text == text

    # -- expressions -----------------------------------------------------------

    def parse_expr(self, varset: VarSet, env: dict) -> LaurentPoly:
        out = self._term(varset, env)
        while self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self._term(varset, env)
            out = out + rhs if op == "+" else out - rhs
        return out

    def _term(self, varset, env):
        out = self._factor(varset, env)
        while self.peek().text in ("*", "/"):
            op = self.next().text
            rhs = self._factor(varset, env)
            if op == "*":
                out = out * rhs
            else:
                tok = self.peek()
                try:
                    out = out * rhs._unit_inverse()
                except LaurentViolationError:
                    raise ParseError(
                        "division only by scalars or unit monomials", tok.line, tok.col
                    ) from None
        return out

    def _factor(self, varset, env):
        sign = 1
        while self.peek().text == "-":
            self.next()
            sign = -sign
        out = self._atom(varset, env)
        if self.at("^"):
            self.next()
            e = self._exponent()
            try:
                out = out**e
            except LaurentViolationError as exc:
                tok = self.peek()
                raise ParseError(str(exc), tok.line, tok.col) from None
        return out if sign == 1 else -out

    def _exponent(self) -> int:
        tok = self.next()
        if tok.text == "(":
            inner = self.next()
            sign = 1
            if inner.text == "-":
                sign = -1
                inner = self.next()
            if inner.kind != "int":
                raise ParseError("expected an integer exponent", inner.line, inner.col)
            self.expect(")")
            return sign * int(inner.text)
        if tok.text == "-":
            inner = self.next()
            if inner.kind != "int":
                raise ParseError("expected an integer exponent", inner.line, inner.col)
            return -int(inner.text)
        if tok.kind != "int":
            raise ParseError("expected an integer exponent", tok.line, tok.col)
        return int(tok.text)

    def _atom(self, varset, env):
        tok = self.next()
        if tok.kind == "int":
            return LaurentPoly.const(varset, int(tok.text))
        if tok.text == "(":
            out = self.parse_expr(varset, env)
            self.expect(")")
            return out
        if tok.kind == "name":
            if tok.text == "sqrt":
                self.expect("(")
                inner = self.next()
                sign = 1
                if inner.text == "-":
                    sign = -1
                    inner = self.next()
                if inner.kind != "int":
                    raise ParseError("expected sqrt of an integer", inner.line, inner.col)
                self.expect(")")
                d = sign * int(inner.text)
                if d in (0, 1):
                    return LaurentPoly.const(varset, Scalar(1) if d else Scalar(0))
                return LaurentPoly.const(varset, Scalar(0, 1, d))
            if tok.text in env:
                return env[tok.text]
            if tok.text in varset.names:
                return LaurentPoly.variable(varset, tok.text)
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.col)

    def scalar_expr(self, varset, env) -> Scalar:
        tok = self.peek()
        poly = self.parse_expr(varset, env)
        try:
            return poly.constant_value()
        except ValueError:
            raise ParseError("expected a scalar value", tok.line, tok.col) from None

    # -- clauses -----------------------------------------------------------------

    def parse_varlist(self):
        names = [self.expect_name().text]
        while self.at(","):
            self.next()
            names.append(self.expect_name().text)
        laurent = []
        if self.at("laurent"):
            self.next()
            self.expect("(")
            laurent.append(self.expect_name().text)
            while self.at(","):
                self.next()
                laurent.append(self.expect_name().text)
            self.expect(")")
        return names, laurent

    def parse_bracket(self, varset, env):
        tok = self.peek()
        kind = self.expect_name().text
        if kind in ("exact", "scaled") and len(varset) != 3:
            raise ParseError(
                f"{kind} brackets need exactly 3 variables", tok.line, tok.col
            )
        if kind == "exact":
            name = self.expect_name().text
            self.expect("=")
            poly = self.parse_expr(varset, env)
            env[name] = poly
            return Exact(poly)
        if kind == "scaled":
            name_a = self.expect_name().text
            self.expect("=")
            mult = self.parse_expr(varset, env)
            env[name_a] = mult
            self.expect(";")
            name_f = self.expect_name().text
            self.expect("=")
            poly = self.parse_expr(varset, env)
            env[name_f] = poly
            return Scaled(mult, poly)
        if kind == "table":
            self.expect("{")
            mapping = {}
            while not self.at("}"):
                self.expect("[")
                a = self.expect_name().text
                self.expect(",")
                b = self.expect_name().text
                self.expect("]")
                self.expect("=")
                mapping[(a, b)] = self.parse_expr(varset, env)
                self.expect(";")
            self.expect("}")
            return Table.from_dict(varset, mapping)
        tok = self.peek()
        raise ParseError(f"unknown bracket kind {kind!r}", tok.line, tok.col)

    def parse_point(self, varset, env) -> PointP:
        self.expect("(")
        values = [self.scalar_expr(varset, env)]
        while self.at(","):
            self.next()
            values.append(self.scalar_expr(varset, env))
        tok = self.expect(")")
        try:
            return PointP(varset, values)
        except LaurentViolationError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None

    def parse_file(self) -> PresentationFile:
        tok = self.peek()
        if tok.text != "vars":
            raise ParseError("file must start with a vars clause", tok.line, tok.col)
        self.next()
        names, laurent = self.parse_varlist()
        self.expect(";")
        try:
            varset = VarSet(tuple(names), tuple(laurent))
        except ValueError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None
        env: dict = {}
        spec = None
        relations, points = [], []
        autos, embeds = {}, {}
        grading = None
        while not self.at(""):
            tok = self.peek()
            if tok.kind == "eof":
                break
            word = self.expect_name().text
            if word == "bracket":
                spec = self.parse_bracket(varset, env)
                self.expect(";")
            elif word == "relation":
                relations.append(self.parse_expr(varset, env))
                self.expect(";")
            elif word == "point":
                points.append(self.parse_point(varset, env))
                self.expect(";")
            elif word == "auto":
                name = self.expect_name().text
                self.expect("{")
                images = {}
                while not self.at("}"):
                    v = self.expect_name().text
                    if v not in varset.names:
                        raise ParseError(f"unknown variable {v!r}", tok.line, tok.col)
                    self.expect("->")
                    images[v] = self.parse_expr(varset, env)
                    self.expect(";")
                self.expect("}")
                self.expect(";")
                missing = [n for n in varset.names if n not in images]
                if missing:
                    raise ParseError(
                        f"auto {name} misses variables {missing}", tok.line, tok.col
                    )
                autos[name] = SubstitutionMap.from_dict(varset, images)
            elif word == "embed":
                embed = self.parse_embed(varset, env)
                embeds[embed.name] = embed
                self.expect(";")
            elif word == "grading":
                grading = self.parse_expr(varset, env)
                self.expect(";")
            else:
                raise ParseError(f"unknown clause {word!r}", tok.line, tok.col)
        if spec is None:
            tok = self.peek()
            raise ParseError("missing bracket clause", tok.line, tok.col)
        return PresentationFile(
            varset, spec, env, relations, points, autos, embeds, grading
        )

    def parse_embed(self, varset, env) -> EmbedClause:
        name = self.expect_name().text
        self.expect("(")
        sub_names = [self.expect_name().text]
        while self.at(","):
            self.next()
            sub_names.append(self.expect_name().text)
        self.expect(")")
        sub_laurent = []
        if self.at("laurent"):
            self.next()
            self.expect("(")
            sub_laurent.append(self.expect_name().text)
            while self.at(","):
                self.next()
                sub_laurent.append(self.expect_name().text)
            self.expect(")")
        sub_varset = VarSet(tuple(sub_names), tuple(sub_laurent))
        self.expect("{")
        images = {}
        sub_bracket = None
        sub_relations = []
        sub_env: dict = {}
        while not self.at("}"):
            tok = self.peek()
            word = self.expect_name().text
            if word == "bracket":
                sub_bracket = self.parse_bracket(sub_varset, sub_env)
                self.expect(";")
            elif word == "relation":
                sub_relations.append(self.parse_expr(sub_varset, sub_env))
                self.expect(";")
            elif word in sub_names:
                self.expect("->")
                images[word] = self.parse_expr(varset, env)
                self.expect(";")
            else:
                raise ParseError(
                    f"unknown name {word!r} in embed block", tok.line, tok.col
                )
        self.expect("}")
        missing = [n for n in sub_names if n not in images]
        if missing:
            raise ParseError(f"embed {name} misses images for {missing}", 0, 0)
        return EmbedClause(
            name, sub_varset, images, sub_bracket, tuple(sub_relations), sub_env
        )


def parse_presentation(text: str) -> PresentationFile:
    return _Parser(text).parse_file()


# -- serialization ----------------------------------------------------------------


def lincomb_text(labels, row) -> str:
    """Render a sparse {index: coeff} combination over labels as `2*x - 3*y`."""
    bits = []
    for k in sorted(row):
        c = row[k]
        text = str(c)
        if text == "1":
            piece = labels[k]
        elif text == "-1":
            piece = f"-{labels[k]}"
        else:
            piece = f"({text})*{labels[k]}" if "sqrt" in text else f"{text}*{labels[k]}"
        bits.append(piece)
    if not bits:
        return "0"
    out = bits[0]
    for piece in bits[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


def poly_text(p: LaurentPoly) -> str:
    """Expression text that parses back to the same polynomial."""
    if p.is_zero:
        return "0"
    bits = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for name, e in zip(p.varset.names, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^({e})" if e < 0 else f"{name}^{e}")
        piece = "*".join(factors)
        cs = _scalar_text(coeff)
        if not piece:
            piece = cs
        elif cs == "1":
            pass
        elif cs == "-1":
            piece = f"-{piece}"
        else:
            piece = f"{cs}*{piece}"
        bits.append(piece)
    out = bits[0]
    for piece in bits[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


def _scalar_text(s: Scalar) -> str:
    if s.is_rational:
        q = s.as_fraction()
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    parts = []
    if s.a != 0:
        parts.append(f"{s.a.numerator}" if s.a.denominator == 1 else f"{s.a.numerator}/{s.a.denominator}")
    b = s.b
    root = f"sqrt({s.d})"
    if abs(b) != 1:
        mag = abs(b)
        root = (f"{mag.numerator}" if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}") + f"*{root}"
    parts.append(root if b > 0 else f"-{root}" if not parts else f"- {root}")
    text = parts[0] if len(parts) == 1 else f"{parts[0]} {parts[1]}" if parts[1].startswith("-") else f"{parts[0]} + {parts[1]}"
    return f"({text})" if (s.a != 0 or b < 0) else text


def serialize_presentation(pf: PresentationFile) -> str:
    """Render a PresentationFile back to clause text (round-trips by parse)."""
    lines = []
    vars_line = "vars " + ", ".join(pf.varset.names)
    flagged = [n for n, f in zip(pf.varset.names, pf.varset.laurent) if f]
    if flagged:
        vars_line += f" laurent({', '.join(flagged)})"
    lines.append(vars_line + ";")
    spec = pf.bracket_spec
    if isinstance(spec, Exact):
        lines.append(f"bracket exact f = {poly_text(spec.potential)};")
    elif isinstance(spec, Scaled):
        lines.append(
            f"bracket scaled a = {poly_text(spec.multiplier)}; f = {poly_text(spec.potential)};"
        )
    else:
        rows = []
        if isinstance(spec, Table):
            entries = spec.entries
        else:  # KirillovKostant and friends expose a pair table
            n = len(pf.varset)
            entries = [
                (i, j, spec.pair(pf.varset, i, j))
                for i in range(n)
                for j in range(i + 1, n)
            ]
        for i, j, poly in entries:
            if not poly.is_zero:
                rows.append(
                    f"  [{pf.varset.names[i]},{pf.varset.names[j]}] = {poly_text(poly)};"
                )
        lines.append("bracket table {")
        lines.extend(rows)
        lines.append("};")
    for r in pf.relations:
        lines.append(f"relation {poly_text(r)};")
    for pt in pf.points:
        coords = ", ".join(_scalar_text(v) for v in pt.values)
        lines.append(f"point ({coords});")
    for name, auto in pf.autos.items():
        body = " ".join(
            f"{v} -> {poly_text(img)};" for v, img in zip(auto.source.names, auto.images)
        )
        lines.append(f"auto {name} {{ {body} }};")
    for name, embed in pf.embeds.items():
        head = f"embed {name}(" + ", ".join(embed.sub_varset.names) + ")"
        flagged = [n for n, f in zip(embed.sub_varset.names, embed.sub_varset.laurent) if f]
        if flagged:
            head += f" laurent({', '.join(flagged)})"
        body = []
        if embed.sub_bracket is not None:
            if isinstance(embed.sub_bracket, Exact):
                body.append(f"bracket exact F = {poly_text(embed.sub_bracket.potential)};")
            elif isinstance(embed.sub_bracket, Scaled):
                body.append(
                    f"bracket scaled A = {poly_text(embed.sub_bracket.multiplier)}; "
                    f"F = {poly_text(embed.sub_bracket.potential)};"
                )
        for r in embed.sub_relations:
            body.append(f"relation {poly_text(r)};")
        for v in embed.sub_varset.names:
            body.append(f"{v} -> {poly_text(embed.images[v])};")
        lines.append(head + " { " + " ".join(body) + " };")
    if pf.grading is not None:
        lines.append(f"grading {poly_text(pf.grading)};")
    return "\n".join(lines) + "\n"
