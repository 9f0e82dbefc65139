"""Parser and printer for the problem text format.

A problem file declares one ring, then named polynomials, vectors and
matrices over it, then queries.  The printer emits the same format back;
printing and re-parsing reproduces every object exactly.  The full grammar
lives in docs/format.md.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field

from .errors import (
    DimensionMismatchError,
    ProblemSyntaxError,
    UndefinedNameError,
)
from .fields import QQ, Field, FieldElement, PrimeField, QuadraticField
from .poly import Polynomial, PolyMatrix, PolyRing, VectorPoly

KEYWORDS = {"ring", "poly", "vec", "mat", "query", "in", "at"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>\d+)
  | (?P<punct>[;=,\[\](){}^*+\-/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "int" | "punct" | "eof"
    text: str
    line: int
    column: int


def tokenize(text: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ProblemSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True)
class Query:
    kind: str
    args: dict


@dataclass
class ProblemFile:
    ring: PolyRing
    objects: dict = dataclass_field(default_factory=dict)  # name -> (kind, value)
    queries: list = dataclass_field(default_factory=list)
    rank: int | None = None  # fixed by the first vector or matrix

    def get(self, name: str, wanted_kinds, where: Token | None = None):
        if name not in self.objects:
            raise UndefinedNameError(f"name {name!r} is not declared")
        kind, value = self.objects[name]
        if kind not in wanted_kinds:
            raise UndefinedNameError(
                f"{name!r} is a {kind}, expected one of {sorted(wanted_kinds)}"
            )
        return value


QUERY_KINDS = {
    "member",
    "semiprime-member",
    "radical-member",
    "matrix-semiprime-member",
    "refute-semiprime",
    "refute-weak",
    "k-of",
    "oracle",
}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token helpers -----------------------------------------------------
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ProblemSyntaxError(message, tok.line, tok.column)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = text if text is not None else kind
            found = tok.text if tok.kind != "eof" else "end of input"
            self.fail(f"expected {wanted!r}, found {found!r}")
        return self.advance()

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == text

    # -- problem structure ---------------------------------------------------
    def parse_problem(self) -> ProblemFile:
        problem = None
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind != "name":
                self.fail("expected a statement keyword")
            if tok.text == "ring":
                if problem is not None:
                    self.fail("only one ring declaration per problem")
                problem = self.parse_ring()
            elif tok.text in ("poly", "vec", "mat"):
                if problem is None:
                    self.fail("declare the ring before any objects")
                self.parse_object(problem)
            elif tok.text == "query":
                if problem is None:
                    self.fail("declare the ring before any queries")
                self.parse_query(problem)
            else:
                self.fail(f"unknown statement {tok.text!r}")
        if problem is None:
            self.fail("problem has no ring declaration")
        return problem

    def parse_ring(self) -> ProblemFile:
        self.expect("name", "ring")
        field = self.parse_field_name()
        self.expect("punct", "[")
        names = [self.expect("name").text]
        while self.at_punct(","):
            self.advance()
            names.append(self.expect("name").text)
        self.expect("punct", "]")
        self.expect("punct", ";")
        for name in names:
            if name in KEYWORDS:
                self.fail(f"variable name {name!r} is reserved")
        try:
            ring = PolyRing(field, names)
        except ValueError as exc:
            self.fail(str(exc))
        return ProblemFile(ring=ring)

    def parse_field_name(self) -> Field:
        tok = self.expect("name")
        if tok.text in ("Q", "QQ"):
            return QQ
        if tok.text.startswith("F") and tok.text[1:].isdigit():
            p = int(tok.text[1:])
            squared = False
            if self.at_punct("^"):
                self.advance()
                power = self.expect("int")
                if power.text != "2":
                    self.fail("only quadratic field extensions are supported", power)
                squared = True
            try:
                return QuadraticField(p) if squared else PrimeField(p)
            except ValueError as exc:
                self.fail(str(exc), tok)
        self.fail(f"unknown field {tok.text!r}", tok)

    def parse_object(self, problem: ProblemFile):
        kind = self.advance().text
        name_tok = self.expect("name")
        name = name_tok.text
        if name in KEYWORDS:
            self.fail(f"name {name!r} is reserved", name_tok)
        if name in problem.objects:
            self.fail(f"name {name!r} is already declared", name_tok)
        self.expect("punct", "=")
        if kind == "poly":
            value = self.parse_expression(problem.ring)
        elif kind == "vec":
            value = self.parse_vector(problem.ring)
            self._fix_rank(problem, len(value), name_tok)
        else:
            value = self.parse_matrix(problem.ring)
            self._fix_rank(problem, value.size, name_tok)
        self.expect("punct", ";")
        problem.objects[name] = (kind, value)

    def _fix_rank(self, problem: ProblemFile, rank: int, tok: Token):
        if problem.rank is None:
            problem.rank = rank
        elif problem.rank != rank:
            raise DimensionMismatchError(
                f"rank {rank} at line {tok.line} conflicts with earlier rank {problem.rank}"
            )

    # -- queries -------------------------------------------------------------
    def parse_query(self, problem: ProblemFile):
        self.expect("name", "query")
        kind = self.expect("name").text
        while self.at_punct("-"):
            self.advance()
            kind += "-" + self.expect("name").text
        if kind not in QUERY_KINDS:
            self.fail(f"unknown query kind {kind!r}")
        if kind == "k-of":
            gens = self.parse_name_set()
            self.expect("name", "at")
            point = self.parse_point(problem.ring)
            args = {"generators": gens, "point": point}
        elif kind == "refute-weak":
            scalar = self.expect("name").text
            self.expect("punct", ",")
            vector = self.expect("name").text
            self.expect("name", "in")
            args = {
                "scalar": scalar,
                "vector": vector,
                "generators": self.parse_name_set(),
            }
        else:
            query_name = self.expect("name").text
            self.expect("name", "in")
            args = {"query": query_name, "generators": self.parse_name_set()}
        self.expect("punct", ";")
        self._check_query(problem, kind, args)
        problem.queries.append(Query(kind, args))

    def parse_name_set(self):
        self.expect("punct", "{")
        names = [self.expect("name").text]
        while self.at_punct(","):
            self.advance()
            names.append(self.expect("name").text)
        self.expect("punct", "}")
        return names

    def parse_point(self, ring: PolyRing):
        self.expect("punct", "(")
        coords = [self.parse_scalar(ring)]
        while self.at_punct(","):
            self.advance()
            coords.append(self.parse_scalar(ring))
        self.expect("punct", ")")
        if len(coords) != ring.nx:
            raise DimensionMismatchError(
                f"point has {len(coords)} coordinates, ring has {ring.nx} variables"
            )
        return coords

    def parse_scalar(self, ring: PolyRing):
        tok = self.peek()
        value = self.parse_expression(ring)
        try:
            return FieldElement(ring.field, value.constant_value())
        except ValueError:
            self.fail("expected a constant scalar", tok)

    def _check_query(self, problem: ProblemFile, kind: str, args: dict):
        by_kind = {
            "member": ({"vec", "poly"}, {"vec", "poly"}),
            "semiprime-member": ({"vec"}, {"vec"}),
            "radical-member": ({"poly"}, {"poly"}),
            "matrix-semiprime-member": ({"mat"}, {"mat"}),
            "refute-semiprime": ({"vec"}, {"vec"}),
            "oracle": ({"vec", "mat"}, {"vec", "mat"}),
        }
        if kind in by_kind:
            qkinds, gkinds = by_kind[kind]
            problem.get(args["query"], qkinds)
            declared = problem.objects[args["query"]][0]
            # mixed-kind queries require the generators to match the query
            wanted = {declared} if len(qkinds) > 1 else gkinds
            for g in args["generators"]:
                problem.get(g, wanted)
        elif kind == "refute-weak":
            problem.get(args["scalar"], {"poly"})
            problem.get(args["vector"], {"vec"})
            for g in args["generators"]:
                problem.get(g, {"vec"})
        elif kind == "k-of":
            for g in args["generators"]:
                problem.get(g, {"vec"})

    # -- expressions -----------------------------------------------------------
    def parse_expression(self, ring: PolyRing) -> Polynomial:
        negate = False
        if self.at_punct("-"):
            self.advance()
            negate = True
        total = self.parse_term(ring)
        if negate:
            total = -total
        while self.at_punct("+") or self.at_punct("-"):
            op = self.advance().text
            term = self.parse_term(ring)
            total = total - term if op == "-" else total + term
        return total

    def parse_term(self, ring: PolyRing) -> Polynomial:
        product = self.parse_factor(ring)
        while True:
            if self.at_punct("*"):
                self.advance()
                product = product * self.parse_factor(ring)
            else:
                tok = self.peek()
                if tok.kind in ("name", "int") or (tok.kind == "punct" and tok.text == "("):
                    product = product * self.parse_factor(ring)
                else:
                    return product

    def parse_factor(self, ring: PolyRing) -> Polynomial:
        base = self.parse_atom(ring)
        if self.at_punct("^"):
            self.advance()
            power = int(self.expect("int").text)
            base = base**power
        return base

    def parse_atom(self, ring: PolyRing) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            value = int(tok.text)
            if self.at_punct("/"):
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok.text)
                if den == 0:
                    self.fail("zero denominator", den_tok)
                field = ring.field
                return ring.const(
                    field.div(field.coerce(value), field.coerce(den))
                )
            return ring.const(value)
        if tok.kind == "name":
            self.advance()
            if tok.text in ring.names:
                return ring.variable(tok.text)
            if tok.text == "t" and isinstance(ring.field, QuadraticField):
                return ring.const(ring.field.generator)
            raise UndefinedNameError(
                f"{tok.text!r} is not a ring variable (line {tok.line})"
            )
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            inner = self.parse_expression(ring)
            self.expect("punct", ")")
            return inner
        self.fail("expected a polynomial factor")

    def parse_vector(self, ring: PolyRing) -> VectorPoly:
        self.expect("punct", "[")
        entries = [self.parse_expression(ring)]
        while self.at_punct(","):
            self.advance()
            entries.append(self.parse_expression(ring))
        self.expect("punct", "]")
        return VectorPoly(ring, entries)

    def parse_matrix(self, ring: PolyRing) -> PolyMatrix:
        self.expect("punct", "[")
        rows = [self.parse_vector(ring).entries]
        while self.at_punct(","):
            self.advance()
            rows.append(self.parse_vector(ring).entries)
        self.expect("punct", "]")
        return PolyMatrix(ring, rows)


def parse_problem(text: str) -> ProblemFile:
    """Parse problem text; raises ProblemSyntaxError with position info,
    UndefinedName for undeclared references, DimensionMismatch for
    inconsistent ranks."""
    return _Parser(text).parse_problem()


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse a single polynomial expression over a given ring."""
    parser = _Parser(text)
    value = parser.parse_expression(ring)
    parser.expect("eof")
    return value


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def field_name(field: Field) -> str:
    if field == QQ:
        return "Q"
    if isinstance(field, QuadraticField):
        return f"F{field.p}^2"
    if isinstance(field, PrimeField):
        return f"F{field.p}"
    raise ValueError(f"cannot name field {field!r}")


def format_query(query: Query) -> str:
    if query.kind == "k-of":
        gens = ", ".join(query.args["generators"])
        point = ", ".join(str(c) for c in query.args["point"])
        return f"query k-of {{{gens}}} at ({point});"
    if query.kind == "refute-weak":
        gens = ", ".join(query.args["generators"])
        return (
            f"query refute-weak {query.args['scalar']}, {query.args['vector']}"
            f" in {{{gens}}};"
        )
    gens = ", ".join(query.args["generators"])
    return f"query {query.kind} {query.args['query']} in {{{gens}}};"


def format_problem(problem: ProblemFile) -> str:
    """Render a problem back to text; parsing the output reproduces every
    declared object bit-exactly."""
    lines = [f"ring {field_name(problem.ring.field)}[{', '.join(problem.ring.names)}];"]
    for name, (kind, value) in problem.objects.items():
        lines.append(f"{kind} {name} = {value};")
    for query in problem.queries:
        lines.append(format_query(query))
    return "\n".join(lines) + "\n"
