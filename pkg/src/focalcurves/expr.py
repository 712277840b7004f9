"""Expression ASTs for single-variable real functions.

Parsing, IEEE-double evaluation, symbolic differentiation with light
cleanup, printing with a reparse guarantee, and extraction of an exact
rational-function form when the expression is one.

Grammar (precedence lowest to highest: +,- then *,/ then unary minus
then ^ right-associative; juxtaposition multiplies; a function name
applies to a parenthesized expression or to a single trailing atom, so
"sin x^2" means (sin x)^2):

    expr  := term (("+"|"-") term)*
    term  := unary (("*"|"/"|juxtapose) unary)*
    unary := "-" unary | power
    power := atom ("^" unary)?
    atom  := number | "x" | "pi" | "e" | ident "(" expr ")" | ident atom | "(" expr ")"
    ident in {sin, cos, tan, exp, ln, sqrt}
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import Poly1, RationalFunction

FUNCTIONS = ("sin", "cos", "tan", "exp", "ln", "sqrt")
CONSTANTS = ("pi", "e")


class DomainError(ArithmeticError):
    """Evaluation left the function's real domain; the sample should be skipped."""


class ParseError(ValueError):
    """Syntax error carrying the byte offset and the set of expected tokens."""

    def __init__(self, message: str, offset: int, expected: frozenset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = expected


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Const:
    name: str  # "pi" or "e"


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    child: "ExprNode"


@dataclass(frozen=True)
class Add:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Sub:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Mul:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Div:
    left: "ExprNode"
    right: "ExprNode"


@dataclass(frozen=True)
class Pow:
    base: "ExprNode"
    exponent: "ExprNode"


@dataclass(frozen=True)
class Apply:
    fn: str
    arg: "ExprNode"


ExprNode = Union[Num, Const, Var, Neg, Add, Sub, Mul, Div, Pow, Apply]


@dataclass(frozen=True)
class FunctionDef:
    name: str
    body: ExprNode


class FunctionTable:
    """Session-scoped registry of named function definitions."""

    def __init__(self):
        self._defs = {}

    def define(self, text: str) -> FunctionDef:
        """Register 'name = body' or 'name(x) = body'; names must be fresh."""
        if text.count("=") != 1:
            raise ValueError("a definition needs exactly one '='")
        head, body_text = text.split("=")
        name = head.strip()
        if name.endswith("(x)"):
            name = name[:-3].strip()
        if not name.isalpha():
            raise ValueError(f"invalid function name {name!r}")
        if name in FUNCTIONS or name in CONSTANTS or name == "x":
            raise ValueError(f"{name!r} is reserved")
        if name in self._defs:
            raise ValueError(f"{name!r} is already defined")
        d = FunctionDef(name, parse(body_text.strip()))
        self._defs[name] = d
        return d

    def get(self, name: str) -> FunctionDef:
        return self._defs[name]

    def __contains__(self, name: str) -> bool:
        return name in self._defs


# ---------------------------------------------------------------------------
# Tokenizer


_T_NUM = "number"
_T_NAME = "name"
_T_EOF = "end of input"


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append((_T_NUM, text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            tokens.append((_T_NAME, text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, frozenset())
    tokens.append((_T_EOF, "", n))
    return tokens


_ATOM_STARTERS = frozenset({_T_NUM, _T_NAME, "("})


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}",
                             tok[2], frozenset({kind}))
        return self.advance()

    def parse(self) -> ExprNode:
        e = self.expr()
        tok = self.peek()
        if tok[0] != _T_EOF:
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2],
                             frozenset({"+", "-", "*", "/", "^", _T_EOF}))
        return e

    def expr(self) -> ExprNode:
        left = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self) -> ExprNode:
        left = self.unary()
        while True:
            kind = self.peek()[0]
            if kind in ("*", "/"):
                op = self.advance()[0]
                right = self.unary()
                left = Mul(left, right) if op == "*" else Div(left, right)
            elif kind in _ATOM_STARTERS:
                right = self.unary()
                left = Mul(left, right)
            else:
                return left

    def unary(self) -> ExprNode:
        if self.peek()[0] == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> ExprNode:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            return Pow(base, self.unary())
        return base

    def atom(self) -> ExprNode:
        kind, text, offset = self.peek()
        if kind == _T_NUM:
            self.advance()
            return Num(Fraction(text))
        if kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if kind == _T_NAME:
            self.advance()
            if text == "x":
                return Var()
            if text in CONSTANTS:
                return Const(text)
            if text in FUNCTIONS:
                if self.peek()[0] == "(":
                    self.advance()
                    arg = self.expr()
                    self.expect(")")
                else:
                    arg = self.atom()
                return Apply(text, arg)
            raise ParseError(f"unknown identifier {text!r}", offset,
                             frozenset({"x"} | set(FUNCTIONS) | set(CONSTANTS)))
        raise ParseError(f"expected an expression, found {text or 'end of input'!r}", offset,
                         frozenset({_T_NUM, "x", "(", "-"} | set(FUNCTIONS) | set(CONSTANTS)))


def parse(text: str) -> ExprNode:
    """Parse text into an AST; raises ParseError with offset on bad input."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Evaluation


def evaluate(e: ExprNode, x: float) -> float:
    """IEEE-double evaluation at x; DomainError where the expression leaves the reals."""
    v = _eval(e, float(x))
    if not math.isfinite(v):
        raise DomainError("evaluation overflowed the double range")
    return v


def _eval(e: ExprNode, x: float) -> float:
    if isinstance(e, Num):
        return float(e.value)
    if isinstance(e, Const):
        return math.pi if e.name == "pi" else math.e
    if isinstance(e, Var):
        return x
    if isinstance(e, Neg):
        return -_eval(e.child, x)
    if isinstance(e, Add):
        return _eval(e.left, x) + _eval(e.right, x)
    if isinstance(e, Sub):
        return _eval(e.left, x) - _eval(e.right, x)
    if isinstance(e, Mul):
        return _eval(e.left, x) * _eval(e.right, x)
    if isinstance(e, Div):
        num = _eval(e.left, x)
        den = _eval(e.right, x)
        if den == 0:
            raise DomainError("division by zero")
        return num / den
    if isinstance(e, Pow):
        base = _eval(e.base, x)
        expo = _eval(e.exponent, x)
        try:
            if expo == int(expo):
                return base ** int(expo)
            return math.pow(base, expo)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"power outside the real domain: {base}^{expo}") from exc
        except OverflowError as exc:
            raise DomainError("power overflowed the double range") from exc
    if isinstance(e, Apply):
        arg = _eval(e.arg, x)
        try:
            if e.fn == "sin":
                return math.sin(arg)
            if e.fn == "cos":
                return math.cos(arg)
            if e.fn == "tan":
                return math.tan(arg)
            if e.fn == "exp":
                return math.exp(arg)
            if e.fn == "ln":
                if arg <= 0:
                    raise DomainError("ln of a non-positive value")
                return math.log(arg)
            if e.fn == "sqrt":
                if arg < 0:
                    raise DomainError("sqrt of a negative value")
                return math.sqrt(arg)
        except OverflowError as exc:
            raise DomainError("function value overflowed the double range") from exc
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# Simplification (constant folding and 0/1 identities only)


def _is_num(e: ExprNode, v=None) -> bool:
    return isinstance(e, Num) and (v is None or e.value == v)


def simplify(e: ExprNode) -> ExprNode:
    if isinstance(e, (Num, Const, Var)):
        return e
    if isinstance(e, Neg):
        c = simplify(e.child)
        if isinstance(c, Num):
            return Num(-c.value)
        if isinstance(c, Neg):
            return c.child
        return Neg(c)
    if isinstance(e, Add):
        l, r = simplify(e.left), simplify(e.right)
        if isinstance(l, Num) and isinstance(r, Num):
            return Num(l.value + r.value)
        if _is_num(l, 0):
            return r
        if _is_num(r, 0):
            return l
        return Add(l, r)
    if isinstance(e, Sub):
        l, r = simplify(e.left), simplify(e.right)
        if isinstance(l, Num) and isinstance(r, Num):
            return Num(l.value - r.value)
        if _is_num(r, 0):
            return l
        if _is_num(l, 0):
            return simplify(Neg(r))
        return Sub(l, r)
    if isinstance(e, Mul):
        l, r = simplify(e.left), simplify(e.right)
        if isinstance(l, Num) and isinstance(r, Num):
            return Num(l.value * r.value)
        if _is_num(l, 0) or _is_num(r, 0):
            return Num(Fraction(0))
        if _is_num(l, 1):
            return r
        if _is_num(r, 1):
            return l
        return Mul(l, r)
    if isinstance(e, Div):
        l, r = simplify(e.left), simplify(e.right)
        if _is_num(r, 1):
            return l
        if isinstance(l, Num) and isinstance(r, Num) and r.value != 0:
            return Num(l.value / r.value)
        if _is_num(l, 0) and not _is_num(r, 0):
            return Num(Fraction(0))
        return Div(l, r)
    if isinstance(e, Pow):
        b, x = simplify(e.base), simplify(e.exponent)
        if _is_num(x, 1):
            return b
        if _is_num(x, 0):
            return Num(Fraction(1))
        if isinstance(b, Num) and isinstance(x, Num) and x.value.denominator == 1:
            n = x.value.numerator
            if n >= 0 or b.value != 0:
                return Num(b.value**n)
        return Pow(b, x)
    if isinstance(e, Apply):
        return Apply(e.fn, simplify(e.arg))
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# Differentiation


def differentiate(e: ExprNode) -> ExprNode:
    """Symbolic derivative with constant folding and 0/1-identity cleanup."""
    return simplify(_diff(simplify(e)))


_ZERO = Num(Fraction(0))
_ONE = Num(Fraction(1))


def _diff(e: ExprNode) -> ExprNode:
    if isinstance(e, (Num, Const)):
        return _ZERO
    if isinstance(e, Var):
        return _ONE
    if isinstance(e, Neg):
        return Neg(_diff(e.child))
    if isinstance(e, Add):
        return Add(_diff(e.left), _diff(e.right))
    if isinstance(e, Sub):
        return Sub(_diff(e.left), _diff(e.right))
    if isinstance(e, Mul):
        return Add(Mul(_diff(e.left), e.right), Mul(e.left, _diff(e.right)))
    if isinstance(e, Div):
        num = Sub(Mul(_diff(e.left), e.right), Mul(e.left, _diff(e.right)))
        return Div(num, Pow(e.right, Num(Fraction(2))))
    if isinstance(e, Pow):
        b, x = e.base, e.exponent
        if isinstance(x, Num):
            # d(b^n) = n * b^(n-1) * b'
            return Mul(Mul(x, Pow(b, Num(x.value - 1))), _diff(b))
        # general case via b^x = exp(x ln b)
        inner = Add(Mul(_diff(x), Apply("ln", b)), Mul(x, Div(_diff(b), b)))
        return Mul(Pow(b, x), inner)
    if isinstance(e, Apply):
        u = e.arg
        du = _diff(u)
        if e.fn == "sin":
            outer = Apply("cos", u)
        elif e.fn == "cos":
            outer = Neg(Apply("sin", u))
        elif e.fn == "tan":
            outer = Div(_ONE, Pow(Apply("cos", u), Num(Fraction(2))))
        elif e.fn == "exp":
            outer = Apply("exp", u)
        elif e.fn == "ln":
            outer = Div(_ONE, u)
        elif e.fn == "sqrt":
            outer = Div(_ONE, Mul(Num(Fraction(2)), Apply("sqrt", u)))
        else:
            raise TypeError(f"unknown function {e.fn!r}")
        return Mul(outer, du)
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# Printing


_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 5


def to_string(e: ExprNode) -> str:
    """Render so that parse(to_string(e)) equals e up to simplify-level cleanup."""
    return _fmt(e, 0)


def _fmt(e: ExprNode, ctx: int) -> str:
    s, prec = _render(e)
    if prec < ctx:
        return f"({s})"
    return s


def _render(e: ExprNode):
    if isinstance(e, Num):
        v = e.value
        if v.denominator == 1:
            s = str(v.numerator)
        else:
            s = f"{v.numerator}/{v.denominator}"
        if v < 0:
            return s, _PREC_NEG if v.denominator == 1 else _PREC_MUL
        return s, _PREC_ATOM if v.denominator == 1 else _PREC_MUL
    if isinstance(e, Const):
        return e.name, _PREC_ATOM
    if isinstance(e, Var):
        return "x", _PREC_ATOM
    if isinstance(e, Neg):
        return "-" + _fmt(e.child, _PREC_NEG), _PREC_NEG
    if isinstance(e, Add):
        return _fmt(e.left, _PREC_ADD) + " + " + _fmt(e.right, _PREC_MUL), _PREC_ADD
    if isinstance(e, Sub):
        return _fmt(e.left, _PREC_ADD) + " - " + _fmt(e.right, _PREC_MUL), _PREC_ADD
    if isinstance(e, Mul):
        return _fmt(e.left, _PREC_MUL) + "*" + _fmt(e.right, _PREC_NEG), _PREC_MUL
    if isinstance(e, Div):
        return _fmt(e.left, _PREC_MUL) + "/" + _fmt(e.right, _PREC_NEG), _PREC_MUL
    if isinstance(e, Pow):
        return _fmt(e.base, _PREC_ATOM) + "^" + _fmt(e.exponent, _PREC_NEG), _PREC_POW
    if isinstance(e, Apply):
        return e.fn + "(" + _fmt(e.arg, 0) + ")", _PREC_ATOM
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# Substitution and rational-function extraction


def substitute(e: ExprNode, replacement: ExprNode) -> ExprNode:
    """Replace the variable with another expression."""
    if isinstance(e, Var):
        return replacement
    if isinstance(e, (Num, Const)):
        return e
    if isinstance(e, Neg):
        return Neg(substitute(e.child, replacement))
    if isinstance(e, Add):
        return Add(substitute(e.left, replacement), substitute(e.right, replacement))
    if isinstance(e, Sub):
        return Sub(substitute(e.left, replacement), substitute(e.right, replacement))
    if isinstance(e, Mul):
        return Mul(substitute(e.left, replacement), substitute(e.right, replacement))
    if isinstance(e, Div):
        return Div(substitute(e.left, replacement), substitute(e.right, replacement))
    if isinstance(e, Pow):
        return Pow(substitute(e.base, replacement), substitute(e.exponent, replacement))
    if isinstance(e, Apply):
        return Apply(e.fn, substitute(e.arg, replacement))
    raise TypeError(f"not an expression node: {e!r}")


class NotRational:
    """Marker value: the expression is not a ratio of polynomials."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotRational"

    def __bool__(self):
        return False


NOT_RATIONAL = NotRational()


class _NotRationalError(Exception):
    pass


def to_rational_function(e: ExprNode) -> Union[RationalFunction, NotRational]:
    """Exact P/Q form of an expression built from field operations and integer powers.

    Returns the NOT_RATIONAL marker for anything else (transcendental parts,
    symbolic constants, fractional powers, identically-zero denominators).
    """
    try:
        p, q = _to_frac(simplify(e))
    except _NotRationalError:
        return NOT_RATIONAL
    if q.is_zero():
        return NOT_RATIONAL
    return RationalFunction(p, q)


def _to_frac(e: ExprNode):
    if isinstance(e, Num):
        return Poly1([e.value]), Poly1.one()
    if isinstance(e, Var):
        return Poly1.variable(), Poly1.one()
    if isinstance(e, Const):
        raise _NotRationalError
    if isinstance(e, Neg):
        p, q = _to_frac(e.child)
        return -p, q
    if isinstance(e, Add):
        p1, q1 = _to_frac(e.left)
        p2, q2 = _to_frac(e.right)
        return p1 * q2 + p2 * q1, q1 * q2
    if isinstance(e, Sub):
        p1, q1 = _to_frac(e.left)
        p2, q2 = _to_frac(e.right)
        return p1 * q2 - p2 * q1, q1 * q2
    if isinstance(e, Mul):
        p1, q1 = _to_frac(e.left)
        p2, q2 = _to_frac(e.right)
        return p1 * p2, q1 * q2
    if isinstance(e, Div):
        p1, q1 = _to_frac(e.left)
        p2, q2 = _to_frac(e.right)
        return p1 * q2, q1 * p2
    if isinstance(e, Pow):
        if not (isinstance(e.exponent, Num) and e.exponent.value.denominator == 1):
            raise _NotRationalError
        n = e.exponent.value.numerator
        p, q = _to_frac(e.base)
        if n >= 0:
            return p**n, q**n
        return q ** (-n), p ** (-n)
    raise _NotRationalError
