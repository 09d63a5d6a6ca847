"""Expression language for operator words and identity statements.

Grammar (whitespace-insensitive, juxtaposition is never multiplication):

    expr    := ['-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' INT)?
    atom    := 'a' | 'b' | 'N' | 'p' | 'q' | 'A' | 'd' | RATIONAL
             | 'qnum(' NAT ')' | 'comm(' expr ',' expr ')' | '(' expr ')'

RATIONAL is DIGITS or DIGITS/DIGITS with no intervening spaces; 'd' is the
ASCII name of the shift step.  Exponents may be negative only where the
value is an invertible scalar (in practice: powers of q); generator powers
must be non-negative.  Parse errors carry line, column and the expected
token set.

Statements layer on top of expressions:

    normalize EXPR
    verify EXPR == EXPR        (a bare EXPR == EXPR also verifies)
    expand EXPR
    with NAME=RATIONAL, ...    (parameter bindings for later statements)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalar import Poly1, Scalar, zero
from .weyl import NormalForm, Relation, WordError

__all__ = [
    "ParseError",
    "EvalError",
    "parse",
    "evaluate",
    "eval_scalar",
    "eval_npoly",
    "print_canonical",
    "Statement",
    "parse_statement",
    "parse_script",
    "run_script",
]


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int, expected=()):
        super().__init__("%s at line %d, column %d" % (message, line, col))
        self.line = line
        self.col = col
        self.expected = frozenset(expected)


class EvalError(Exception):
    """Well-formed input that does not evaluate (N without the extended relation, ...)."""


_GEN = ("a", "b", "N")
_SYM = ("p", "q", "A", "d")
_KEYWORDS = ("qnum", "comm")


def _tokenize(text: str):
    toks = []
    line, col = 1, 1
    i = 0
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
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                toks.append(("NUMBER", Fraction(int(text[i:j]), int(text[j + 1 : k])), line, col))
                col += k - i
                i = k
            else:
                toks.append(("NUMBER", Fraction(int(text[i:j])), line, col))
                col += j - i
                i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            toks.append(("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch == "=" and i + 1 < n and text[i + 1] == "=":
            toks.append(("OP", "==", line, col))
            i += 2
            col += 2
            continue
        if ch in "+-*^(),=":
            toks.append(("OP", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    toks.append(("EOF", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, value, line, col = self.peek()
        shown = value if kind != "EOF" else "end of input"
        raise ParseError("unexpected %r" % shown, line, col, expected)

    def eat(self, value):
        kind, val, _l, _c = self.peek()
        if kind == "OP" and val == value:
            return self.advance()
        self.fail({value})

    def expr(self):
        if self._at_op("-"):
            self.advance()
            node = ("neg", self.term())
        else:
            node = self.term()
        while self._at_op("+") or self._at_op("-"):
            op = self.advance()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self._at_op("*"):
            self.advance()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self._at_op("^"):
            self.advance()
            sign = 1
            if self._at_op("-"):
                self.advance()
                sign = -1
            kind, value, line, col = self.peek()
            if kind != "NUMBER" or value.denominator != 1:
                self.fail({"integer exponent"})
            self.advance()
            node = ("pow", node, sign * value.numerator)
        return node

    def atom(self):
        kind, value, line, col = self.peek()
        if kind == "NUMBER":
            self.advance()
            return ("num", value)
        if kind == "NAME":
            if value in _GEN:
                self.advance()
                return ("gen", value)
            if value in _SYM:
                self.advance()
                return ("sym", value)
            if value == "qnum":
                self.advance()
                self.eat("(")
                k, v, line2, col2 = self.peek()
                if k != "NUMBER" or v.denominator != 1 or v < 0:
                    self.fail({"natural number"})
                self.advance()
                self.eat(")")
                return ("qnum", v.numerator)
            if value == "comm":
                self.advance()
                self.eat("(")
                lhs = self.expr()
                self.eat(",")
                rhs = self.expr()
                self.eat(")")
                return ("comm", lhs, rhs)
            self.fail(set(_GEN) | set(_SYM) | set(_KEYWORDS))
        if kind == "OP" and value == "(":
            self.advance()
            node = self.expr()
            self.eat(")")
            return node
        self.fail(set(_GEN) | set(_SYM) | set(_KEYWORDS) | {"number", "("})

    def _at_op(self, value):
        kind, val, _l, _c = self.peek()
        return kind == "OP" and val == value

    def done(self):
        if self.peek()[0] != "EOF":
            self.fail({"end of input"})


def parse(text: str):
    """Parse an expression into an Ast (nested tuples)."""
    p = _Parser(text)
    node = p.expr()
    p.done()
    return node


# --- evaluation ----------------------------------------------------------------


def evaluate(ast, rel: Relation) -> NormalForm:
    """Bottom-up evaluation into the algebra."""
    kind = ast[0]
    if kind == "gen":
        try:
            return rel.gen(ast[1])
        except WordError as exc:
            raise EvalError(str(exc)) from None
    if kind == "sym":
        return rel.scalar_nf(Scalar.variable(ast[1]))
    if kind == "num":
        return rel.scalar_nf(Scalar.of(ast[1]))
    if kind == "qnum":
        from .scalar import qnum

        return rel.scalar_nf(qnum(ast[1]))
    if kind == "add":
        return evaluate(ast[1], rel) + evaluate(ast[2], rel)
    if kind == "sub":
        return evaluate(ast[1], rel) - evaluate(ast[2], rel)
    if kind == "mul":
        return evaluate(ast[1], rel) * evaluate(ast[2], rel)
    if kind == "neg":
        return -evaluate(ast[1], rel)
    if kind == "comm":
        x, y = evaluate(ast[1], rel), evaluate(ast[2], rel)
        return x * y - y * x
    if kind == "pow":
        base = evaluate(ast[1], rel)
        n = ast[2]
        if n >= 0:
            return base**n
        c = _as_scalar(base)
        if c is None:
            raise EvalError("negative powers need an invertible scalar base")
        return rel.scalar_nf(c**n)
    raise EvalError("unknown node %r" % (kind,))


def _as_scalar(nf: NormalForm):
    if nf.is_zero():
        return zero
    items = list(nf.items())
    if len(items) == 1 and items[0][0] == (0, 0, 0):
        return items[0][1]
    return None


def eval_scalar(ast) -> Scalar:
    """Evaluate a generator-free expression in the coefficient field."""
    kind = ast[0]
    if kind == "gen":
        raise EvalError("generators are not scalars")
    if kind == "sym":
        return Scalar.variable(ast[1])
    if kind == "num":
        return Scalar.of(ast[1])
    if kind == "qnum":
        from .scalar import qnum

        return qnum(ast[1])
    if kind == "add":
        return eval_scalar(ast[1]) + eval_scalar(ast[2])
    if kind == "sub":
        return eval_scalar(ast[1]) - eval_scalar(ast[2])
    if kind == "mul":
        return eval_scalar(ast[1]) * eval_scalar(ast[2])
    if kind == "neg":
        return -eval_scalar(ast[1])
    if kind == "pow":
        return eval_scalar(ast[1]) ** ast[2]
    raise EvalError("not a scalar expression")


def eval_npoly(ast) -> Poly1:
    """Evaluate an expression in N (no a, b) as a polynomial in N."""
    kind = ast[0]
    if kind == "gen":
        if ast[1] == "N":
            return Poly1([0, 1], "N")
        raise EvalError("only N may appear in a remainder polynomial")
    if kind in ("sym", "num", "qnum"):
        return Poly1([eval_scalar(ast)], "N")
    if kind == "add":
        return eval_npoly(ast[1]) + eval_npoly(ast[2])
    if kind == "sub":
        return eval_npoly(ast[1]) - eval_npoly(ast[2])
    if kind == "mul":
        return eval_npoly(ast[1]) * eval_npoly(ast[2])
    if kind == "neg":
        return -eval_npoly(ast[1])
    if kind == "pow":
        if ast[2] < 0:
            return Poly1([eval_scalar(ast)], "N")
        return eval_npoly(ast[1]) ** ast[2]
    raise EvalError("not a polynomial in N")


def print_canonical(x: NormalForm) -> str:
    return x.render()


# --- statements ------------------------------------------------------------------


@dataclass
class Statement:
    kind: str  # normalize | verify | expand | with
    exprs: tuple = ()
    bindings: dict = field(default_factory=dict)


def parse_statement(text: str) -> Statement:
    stripped = text.strip()
    head = stripped.split(None, 1)[0] if stripped else ""
    if head == "with":
        return _parse_with(stripped[len("with") :])
    if head in ("normalize", "expand"):
        body = stripped[len(head) :]
        return Statement(head, (parse(body),))
    if head == "verify":
        body = stripped[len("verify") :]
        return _parse_verify(body)
    if "==" in stripped:
        return _parse_verify(stripped)
    return Statement("normalize", (parse(stripped),))


def _parse_verify(body: str) -> Statement:
    left, sep, right = body.partition("==")
    if not sep:
        raise ParseError("verify needs '=='", 1, max(1, len(body)), {"=="})
    return Statement("verify", (parse(left), parse(right)))


def _parse_with(body: str) -> Statement:
    bindings = {}
    for piece in body.split(","):
        piece = piece.strip().rstrip(":")
        if not piece:
            continue
        name, sep, value = piece.partition("=")
        name = name.strip()
        value = value.strip()
        if not sep or name not in _SYM:
            raise ParseError("with-clause binds p, q, A or d", 1, 1, set(_SYM))
        negative = value.startswith("-")
        if negative:
            value = value[1:].strip()
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError("binding value must be rational", 1, 1, {"rational"}) from None
        bindings[name] = -frac if negative else frac
    return Statement("with", (), bindings)


def parse_script(text: str) -> list[Statement]:
    """Newline/semicolon separated statements; blank lines are skipped."""
    out = []
    for chunk in text.replace(";", "\n").splitlines():
        if chunk.strip():
            out.append(parse_statement(chunk))
    return out


def run_script(text: str, rel: Relation) -> list[dict]:
    """Execute a statement sequence; with-clauses bind parameters for the rest.

    Each non-with statement yields one result row: {"kind", "status",
    "result"}; verify rows carry the residual text, expand rows the
    coefficient list.
    """
    from .identities import NotExpressibleError, expand_in_ab_powers

    bindings: dict = {}
    rows: list[dict] = []
    for stmt in parse_script(text):
        if stmt.kind == "with":
            bindings.update(stmt.bindings)
            continue
        bound_rel = rel.bind(bindings) if bindings else rel
        values = [evaluate(e, bound_rel) for e in stmt.exprs]
        if bindings:
            values = [v.substitute(bindings) for v in values]
        if stmt.kind == "normalize":
            rows.append({"kind": "normalize", "status": "pass", "result": values[0].render()})
        elif stmt.kind == "verify":
            residual = values[0] - values[1]
            rows.append(
                {
                    "kind": "verify",
                    "status": "pass" if residual.is_zero() else "fail",
                    "result": residual.render() if residual else "",
                }
            )
        elif stmt.kind == "expand":
            try:
                exp = expand_in_ab_powers(values[0])
                coeffs = [c.text() if hasattr(c, "text") else c.compact() for c in exp.coeffs]
                rows.append({"kind": "expand", "status": "pass", "result": coeffs})
            except NotExpressibleError as exc:
                rows.append({"kind": "expand", "status": "fail", "result": str(exc)})
    return rows
