"""A small arithmetic-expression language for user-defined integrands.

Grammar (see docs/expressions.md):

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" unary)?          # right-associative
    atom    := NUMBER | VAR | FUNC "(" expr ("," expr)* ")" | "(" expr ")"

Variables are u1..ud; functions are sin, cos, exp, log, sqrt, abs (unary)
and min, max (binary).  Expressions evaluate on (m, d) arrays of points;
log/sqrt of out-of-domain values raise an EvaluationError naming the
offending point rather than producing a silent NaN (NaNs would corrupt
the estimator's sort invisibly).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Expression",
    "ParseError",
    "EvaluationError",
    "parse_expression",
    "to_text",
    "evaluate",
    "evaluate_scalar",
]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Lit:
    value: float


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


Expression = Lit | Var | Neg | BinOp | Call

_UNARY_FUNCS = {"sin", "cos", "exp", "log", "sqrt", "abs"}
_BINARY_FUNCS = {"min", "max"}

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^(),]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group("num") is not None:
            tokens.append(("num", float(m.group("num")), m.start()))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, dim: int):
        self.tokens = tokens
        self.i = 0
        self.dim = dim

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> Expression:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.next()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.next()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expression:
        if self.peek()[:2] == ("op", "-"):
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.next()
            return BinOp("^", base, self.unary())  # right-assoc, binds unary minus
        return base

    def atom(self) -> Expression:
        kind, val, pos = self.next()
        if kind == "num":
            return Lit(val)
        if kind == "name":
            m = re.fullmatch(r"u(\d+)", val)
            if m:
                idx = int(m.group(1))
                if not (1 <= idx <= self.dim):
                    raise ParseError(
                        f"variable u{idx} out of range for dim={self.dim}", pos
                    )
                return Var(idx)
            if val in _UNARY_FUNCS or val in _BINARY_FUNCS:
                self.expect_op("(")
                args = [self.expr()]
                while self.peek()[:2] == ("op", ","):
                    self.next()
                    args.append(self.expr())
                self.expect_op(")")
                want = 1 if val in _UNARY_FUNCS else 2
                if len(args) != want:
                    raise ParseError(
                        f"{val} takes {want} argument(s), got {len(args)}", pos
                    )
                return Call(val, tuple(args))
            raise ParseError(f"unknown identifier {val!r}", pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_expression(text: str, dim: int) -> Expression:
    """Parse an expression over variables u1..u<dim>."""
    if dim < 1:
        raise ValueError("dim must be positive")
    return _Parser(_tokenize(text), dim).parse()


def to_text(node: Expression) -> str:
    """Print an expression; parse(to_text(e), d) == e."""
    if isinstance(node, Lit):
        return repr(node.value)
    if isinstance(node, Var):
        return f"u{node.index}"
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Call):
        return f"{node.func}({', '.join(to_text(a) for a in node.args)})"
    raise TypeError(f"not an expression node: {node!r}")


_NP_FUNCS = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "abs": np.abs,
    "min": np.minimum,
    "max": np.maximum,
}


def _check_domain(func: str, arg: np.ndarray) -> None:
    if func == "log":
        bad = np.asarray(arg) <= 0.0
    elif func == "sqrt":
        bad = np.asarray(arg) < 0.0
    else:
        return
    if np.any(bad):
        idx = int(np.argmax(bad))
        raise EvaluationError(
            f"{func} of out-of-domain value {np.asarray(arg).flat[idx]!r} "
            f"at point index {idx}"
        )


def evaluate(node: Expression, points: np.ndarray) -> np.ndarray:
    """Vectorized evaluation over an (m, d) array of points."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if isinstance(node, Lit):
        return np.full(pts.shape[0], node.value)
    if isinstance(node, Var):
        return pts[:, node.index - 1].copy()
    if isinstance(node, Neg):
        return -evaluate(node.operand, pts)
    if isinstance(node, BinOp):
        a = evaluate(node.left, pts)
        b = evaluate(node.right, pts)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "/":
            if np.any(b == 0.0):
                idx = int(np.argmax(b == 0.0))
                raise EvaluationError(f"division by zero at point index {idx}")
            return a / b
        if node.op == "^":
            return np.power(a, b)
    if isinstance(node, Call):
        args = [evaluate(a, pts) for a in node.args]
        _check_domain(node.func, args[0])
        fn = np.log if node.func == "log" else _NP_FUNCS[node.func]
        return fn(*args)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_scalar(node: Expression, u) -> float:
    """Independent tree-walking evaluation of a single point (math module)."""
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, Var):
        return float(u[node.index - 1])
    if isinstance(node, Neg):
        return -evaluate_scalar(node.operand, u)
    if isinstance(node, BinOp):
        a = evaluate_scalar(node.left, u)
        b = evaluate_scalar(node.right, u)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if node.op == "/":
            if b == 0.0:
                raise EvaluationError("division by zero")
            return a / b
        if node.op == "^":
            return a**b
    if isinstance(node, Call):
        args = [evaluate_scalar(a, u) for a in node.args]
        if node.func == "log" and args[0] <= 0.0:
            raise EvaluationError(f"log of non-positive value {args[0]!r}")
        if node.func == "sqrt" and args[0] < 0.0:
            raise EvaluationError(f"sqrt of negative value {args[0]!r}")
        fns = {
            "sin": math.sin,
            "cos": math.cos,
            "exp": math.exp,
            "log": math.log,
            "sqrt": math.sqrt,
            "abs": abs,
            "min": min,
            "max": max,
        }
        return float(fns[node.func](*args))
    raise TypeError(f"not an expression node: {node!r}")
