"""Text literals: exact scalars, triangle triples, operators and trig polynomials.

Scalar grammar (whitespace ignored)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary | unary)*     # juxtaposition multiplies: 4i, 2(1+i)
    unary := ('-' | '+') unary | power
    power := atom ('^' unary)?                     # integer exponents only
    atom  := NUMBER | 'z' | 'i' | 'w' | 'r' | '(' expr ')'

``z`` is the primitive 12th root of unity, ``w`` = omega, ``r`` = rho.
Decimals such as ``0.7`` are read as exact rationals.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cevian import CircOp, EtaPair, PQPair, from_eta, from_pq
from .errors import ParseError
from .scalar import I, OMEGA, RHO, ZETA, Cyc12, as_scalar
from .triangle import Triangle

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>omega|rho|zeta|[a-zA-Z])|(?P<op>[-+*/^()]))"
)
_NAMES = {"z": ZETA, "zeta": ZETA, "i": I, "w": OMEGA, "omega": OMEGA, "r": RHO, "rho": RHO}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        stripped_end = len(text.rstrip())
        while pos < stripped_end:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError("unexpected character", text, _skip_ws(text, pos))
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Cyc12:
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected {val!r}", self.text, pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in ("*", "/"):
                self.take()
                rhs = self.unary()
                if val == "*":
                    value = value * rhs
                else:
                    if not rhs:
                        raise ParseError("division by zero", self.text, pos)
                    value = value / rhs
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                value = value * self.unary()
            else:
                return value

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in ("-", "+"):
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            exp = self.unary()
            if not exp.is_rational() or exp.coords[0].denominator != 1:
                raise ParseError("exponent must be an integer", self.text, pos)
            n = int(exp.coords[0])
            if n < 0 and not base:
                raise ParseError("zero to a negative power", self.text, pos)
            return base**n
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Cyc12(Fraction(val))
        if kind == "name":
            try:
                return _NAMES[val]
            except KeyError:
                raise ParseError(f"unknown symbol {val!r}", self.text, pos) from None
        if kind == "op" and val == "(":
            value = self.expr()
            k2, v2, p2 = self.take()
            if not (k2 == "op" and v2 == ")"):
                raise ParseError("expected ')'", self.text, p2)
            return value
        if kind is None:
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected {val!r}", self.text, pos)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_scalar(text: str, exact: bool = True):
    """Parse an exact scalar; with ``exact=False`` the value is downcast to complex."""
    value = _Parser(text).parse()
    return value if exact else complex(value)


def split_top_level(text: str, sep: str = ",") -> list:
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return parts


def parse_triangle(text: str, exact: bool = True) -> Triangle:
    """Parse ``(a0, a1, a2)`` scalar literals or JSON ``[[re, im], ...]``."""
    body = text.strip()
    if body.startswith("[["):
        try:
            return Triangle.from_json(json.loads(body))
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad JSON triangle: {exc}", text, 0) from None
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError("triangle must look like '(a0, a1, a2)'", text, 0)
    parts = split_top_level(body[1:-1])
    if len(parts) != 3:
        raise ParseError(f"triangle needs 3 vertices, got {len(parts)}", text, 0)
    vertices = []
    offset = text.find(body) + 1
    for part in parts:
        try:
            vertices.append(parse_scalar(part, exact))
        except ParseError as exc:
            raise ParseError(exc.message, text, offset + exc.pos) from None
        offset += len(part) + 1
    return Triangle(*vertices)


_OP_RE = re.compile(r"^\s*([SMHC])\s*(\[[^\]]*\])?\s*\[(.*)\]\s*$", re.S)


def _parse_params(body: str, text: str, exact: bool) -> dict:
    params = {}
    offset = text.find(body)
    for part in split_top_level(body):
        if "=" not in part:
            raise ParseError(f"expected key=value, got {part.strip()!r}", text, offset)
        key, value = part.split("=", 1)
        try:
            params[key.strip()] = parse_scalar(value, exact)
        except ParseError as exc:
            # report the position within the whole literal
            raise ParseError(exc.message, text, offset + len(key) + 1 + exc.pos) from None
        offset += len(part) + 1
    return params


def _cevian_from_params(params: dict, text: str) -> CircOp:
    keys = set(params)
    if keys == {"p", "q"}:
        return from_pq(PQPair(params["p"], params["q"]))
    if keys == {"eta", "eta'"}:
        return from_eta(EtaPair(params["eta"], params["eta'"]))
    if keys == {"a", "b", "g"}:
        return CircOp(params["a"], params["b"], params["g"])
    raise ParseError(f"parameters must be p,q or eta,eta' or a,b,g; got {sorted(keys)}", text, 0)


def _check_brackets(text: str) -> None:
    stack = []
    pairs = {")": "(", "]": "["}
    for k, ch in enumerate(text):
        if ch in "([":
            stack.append((ch, k))
        elif ch in ")]":
            if not stack or stack[-1][0] != pairs[ch]:
                raise ParseError(f"unmatched {ch!r}", text, k)
            stack.pop()
    if stack:
        raise ParseError(f"unclosed {stack[-1][0]!r}", text, stack[-1][1])


def parse_operator(text: str, exact: bool = True):
    """Parse an operator literal.

    ``S[p=..,q=..]``, ``S[eta=..,eta'=..]``, ``S[a=..,b=..,g=..]`` give a
    :class:`CircOp`; ``M[wx/yz][...]`` the median operator over the given
    cevian parameters; ``H[s=..]`` Hajja's operator; ``C[s=..]`` the binary
    Ceva operator (an :class:`~trimedian.shape.ExtOp`).
    """
    from .median import MedianLabel, median_op
    from .cevian import to_eta
    from .shape import ceva, hajja

    _check_brackets(text)
    m = _OP_RE.match(text)
    if not m:
        raise ParseError("operator must look like 'S[...]', 'M[wx/yz][...]', 'H[s=...]' or 'C[s=...]'", text, 0)
    kind, label_part, body = m.groups()
    params = _parse_params(body, text, exact)
    if kind == "S":
        return _cevian_from_params(params, text)
    if kind == "M":
        if not label_part:
            raise ParseError("median operator needs a label, e.g. M[00/01][p=0,q=1/2]", text, 0)
        label = MedianLabel.parse(label_part[1:-1])
        return median_op(label, to_eta(_cevian_from_params(params, text)))
    if set(params) != {"s"}:
        raise ParseError(f"{kind}[...] takes a single parameter s", text, 0)
    return hajja(params["s"]) if kind == "H" else ceva(params["s"])


def parse_trigpoly(text: str, exact: bool = True):
    """Parse ``k:c; k:c; ...`` into a TrigPoly, e.g. ``1:-2; -2:1``."""
    from .orbit import TrigPoly

    coeffs = {}
    body = text.strip()
    if not body:
        raise ParseError("empty polynomial", text, 0)
    for part in split_top_level(body, ";"):
        if ":" not in part:
            raise ParseError(f"expected freq:coeff, got {part.strip()!r}", text, text.find(part))
        k, c = part.split(":", 1)
        try:
            freq = int(k)
        except ValueError:
            raise ParseError(f"frequency must be an integer, got {k.strip()!r}", text, text.find(part)) from None
        coeffs[freq] = as_scalar(coeffs.get(freq, 0)) + parse_scalar(c, exact)
    return TrigPoly(coeffs)
