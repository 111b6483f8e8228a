"""Surface syntax for algebra elements.

Grammar, loosest binding first::

    sum     := tensor (("+" | "-") tensor)*
    tensor  := product ("ox" product)*
    product := unary (("*" unary) | ("/" INT))*
    unary   := "-" unary | power
    power   := atom ("^" INT)?
    atom    := INT ["/" INT] | "h" | generator | "(" sum ")"
             | name "(" sum ("," sum)* ")"

``INT/INT`` written without spaces around a bare integer is a rational
literal; ``/`` elsewhere divides by a nonzero integer. Functions are
``comm``, ``delta``, ``flip``, ``exp``, ``sinh`` and ``cosh``.
"""

from dataclasses import dataclass
import re

from ..errors import ExprSyntaxError, LegMismatch, UnknownGenerator
from ..kernel.rational import Rational, rat

FUNCTIONS = {"comm": 2, "delta": 1, "flip": 1, "exp": 1, "sinh": 1, "cosh": 1}
KEYWORDS = set(FUNCTIONS) | {"ox", "h"}


# -- AST -------------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Rational

    def __post_init__(self):
        object.__setattr__(self, "value", rat(self.value))
        if self.value < 0:
            raise ValueError("literals are nonnegative; use Neg")


@dataclass(frozen=True)
class Param:
    name: str = "h"


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * ox
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    arg: object
    divisor: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# -- tokens ----------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*/^(),]))")


@dataclass
class Token:
    kind: str
    text: str
    pos: int
    end: int


def _position(src, pos):
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(src):
    tokens = []
    pos, n = 0, len(src)
    while True:
        while pos < n and src[pos].isspace():
            pos += 1
        if pos == n:
            break
        m = _TOKEN.match(src, pos)
        if not m:
            line, col = _position(src, pos)
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group(kind)
        if kind == "name" and text == "ox":
            kind = "op"
        tokens.append(Token(kind, text, m.start(kind), m.end()))
        pos = m.end()
    tokens.append(Token("end", "", n, n))
    return tokens


class _Parser:
    def __init__(self, src, algebra=None):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0
        self.algebra = algebra

    def error(self, message, tok=None):
        tok = tok or self.peek()
        line, col = _position(self.src, tok.pos)
        raise ExprSyntaxError(message, line, col)

    def peek(self, offset=0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, text):
        if self.peek().kind == "op" and self.peek().text == text:
            return self.take()
        return None

    def expect(self, text):
        if not self.accept(text):
            found = self.peek().text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")

    def parse(self):
        if self.peek().kind == "end":
            self.error("empty expression")
        e = self.sum()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return e

    def sum(self):
        e = self.tensor()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            e = BinOp(op, e, self.tensor())
        return e

    def tensor(self):
        e = self.product()
        while self.accept("ox"):
            e = BinOp("ox", e, self.product())
        return e

    def product(self):
        e = self.unary()
        while True:
            if self.accept("*"):
                e = BinOp("*", e, self.unary())
            elif self.peek().text == "/" and self.peek().kind == "op":
                self.take()
                tok = self.peek()
                if tok.kind != "int":
                    self.error("division is only by an integer literal")
                self.take()
                if int(tok.text) == 0:
                    self.error("division by zero", tok)
                e = Div(e, int(tok.text))
            else:
                return e

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            tok = self.peek()
            if tok.kind != "int":
                self.error("exponent must be a nonnegative integer literal")
            self.take()
            base = Pow(base, int(tok.text))
            if self.peek().text == "^":
                self.error("chained powers need parentheses")
        return base

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            nxt, after = self.peek(), self.peek(1)
            if (nxt.text == "/" and nxt.pos == tok.end and after.kind == "int"
                    and after.pos == nxt.end):
                self.take()
                self.take()
                if int(after.text) == 0:
                    self.error("zero denominator in rational literal", after)
                return Num(Rational(int(tok.text), int(after.text)))
            return Num(int(tok.text))
        if tok.kind == "name":
            self.take()
            if tok.text in FUNCTIONS:
                return self.call(tok)
            if tok.text in ("h", "h_hat"):
                return Param(tok.text)
            if self.algebra is not None and tok.text not in self.algebra.generators:
                raise UnknownGenerator(tok.text, self.algebra.name)
            return Gen(tok.text)
        if self.accept("("):
            e = self.sum()
            self.expect(")")
            return e
        self.error(f"unexpected {tok.text or 'end of input'!r}")

    def call(self, tok):
        self.expect("(")
        args = [self.sum()]
        while self.accept(","):
            args.append(self.sum())
        self.expect(")")
        if len(args) != FUNCTIONS[tok.text]:
            self.error(f"{tok.text} takes {FUNCTIONS[tok.text]} argument(s)", tok)
        return Call(tok.text, tuple(args))


def parse(src, algebra=None):
    """Parse ``src`` into an AST; generator names are validated against
    ``algebra`` when one is given."""
    return _Parser(src, algebra).parse()


# -- printing --------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "ox": 2, "*": 3}


def _prec(e):
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Div):
        return 3
    if isinstance(e, Neg):
        return 4
    if isinstance(e, Pow):
        return 5
    if isinstance(e, Num) and e.value.denominator != 1:
        return 5.5
    return 6


def _wrap(e, need):
    text = to_text(e)
    return f"({text})" if _prec(e) < need else text


def to_text(e):
    """Inverse of :func:`parse` up to whitespace."""
    if isinstance(e, Num):
        q = e.value
        if q.denominator == 1:
            return str(int(q.numerator))
        return f"{int(q.numerator)}/{int(q.denominator)}"
    if isinstance(e, Param):
        return e.name
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.arg, 4)
    if isinstance(e, Pow):
        return f"{_wrap(e.base, 6)}^{e.exponent}"
    if isinstance(e, Div):
        left = to_text(e.arg)
        if not isinstance(e.arg, (Gen, Param, Call)):
            left = f"({left})"
        return f"{left}/{e.divisor}"
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        sep = " ox " if e.op == "ox" else (f" {e.op} " if p == 1 else e.op)
        return _wrap(e.left, p) + sep + _wrap(e.right, p + 1)
    if isinstance(e, Call):
        return f"{e.name}(" + ", ".join(to_text(a) for a in e.args) + ")"
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluation ------------------------------------------------------------------------

def _match_legs(a, b):
    if a.legs == b.legs:
        return a, b
    if a.legs == 1 and a.is_scalar():
        return a.lift_legs(b.legs), b
    if b.legs == 1 and b.is_scalar():
        return a, b.lift_legs(a.legs)
    raise LegMismatch(f"cannot combine {a.legs} and {b.legs} tensor legs")


def evaluate(e, algebra, K):
    """Evaluate an AST (or source text) to a normal-ordered series."""
    from ..kernel.analytic import cosh, series_exp, sinh
    from ..kernel.series import HSeries
    from ..tensor import coproduct, flip

    if isinstance(e, str):
        e = parse(e, algebra)

    def ev(node):
        if isinstance(node, Num):
            return HSeries.scalar(algebra, K, node.value)
        if isinstance(node, Param):
            return HSeries.h(algebra, K)
        if isinstance(node, Gen):
            return HSeries.generator(algebra, node.name, K)
        if isinstance(node, Neg):
            return -ev(node.arg)
        if isinstance(node, Pow):
            return ev(node.base) ** node.exponent
        if isinstance(node, Div):
            return ev(node.arg) * Rational(1, node.divisor)
        if isinstance(node, BinOp):
            a, b = ev(node.left), ev(node.right)
            if node.op == "ox":
                return a @ b
            if node.op == "*":
                return a * b
            a, b = _match_legs(a, b)
            return a + b if node.op == "+" else a - b
        if isinstance(node, Call):
            args = [ev(a) for a in node.args]
            if node.name == "comm":
                a, b = args
                return a * b - b * a
            fn = {"delta": coproduct, "flip": flip, "exp": series_exp,
                  "sinh": sinh, "cosh": cosh}[node.name]
            return fn(args[0])
        raise TypeError(f"not an expression node: {node!r}")

    return ev(e)
