"""Propositional formula trees, a precedence-climbing parser and a printer.

Surface syntax (ASCII)::

    atom      letter (letter | digit | '_')*
    not       '!' or '~'
    assert    'T:'            (Bochvar's assertion operator)
    and       '&'
    or        '|'
    implies   '->'            (right-associative)
    iff       '<->'           (left-associative)

Precedence from tightest to loosest: unary operators, ``&``, ``|``, ``->``,
``<->``.  The printer uses the fewest parentheses the grammar needs, except
that binary operands of ``<->`` are always bracketed.  The parser also
accepts the Unicode connectives ``¬ ∧ ∨ → ↔`` so that
``render(f, unicode=True)`` round-trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "Atom",
    "Not",
    "Assert",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Formula",
    "FormulaSyntaxError",
    "parse",
    "render",
    "atoms",
]


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not _is_identifier(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class Assert:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Not, Assert, And, Or, Implies, Iff]

UNARY = (Not, Assert)
BINARY = (And, Or, Implies, Iff)


def _is_identifier(name: str) -> bool:
    return (
        isinstance(name, str)
        and len(name) > 0
        and name[0].isascii()
        and name[0].isalpha()
        and all(c.isascii() and (c.isalnum() or c == "_") for c in name)
    )


class FormulaSyntaxError(ValueError):
    """Raised by :func:`parse`; carries the byte offset and the expected tokens."""

    def __init__(self, text: str, offset: int, expected: frozenset, found: str):
        self.text = text
        self.offset = offset
        self.expected = expected
        self.found = found
        exp = ", ".join(sorted(expected))
        super().__init__(f"syntax error at byte {offset}: expected one of {{{exp}}}, found {found}")


# ---------------------------------------------------------------------------
# Lexer

_SYMBOLS = [
    ("<->", "IFF"),
    ("->", "IMPLIES"),
    ("T:", "ASSERT"),
    ("!", "NOT"),
    ("~", "NOT"),
    ("&", "AND"),
    ("|", "OR"),
    ("(", "LPAREN"),
    (")", "RPAREN"),
    ("¬", "NOT"),
    ("∧", "AND"),
    ("∨", "OR"),
    ("→", "IMPLIES"),
    ("↔", "IFF"),
]

_PRIMARY_START = frozenset({"atom", "'!'", "'T:'", "'('"})
_AFTER_OPERAND = frozenset({"'&'", "'|'", "'->'", "'<->'", "')'", "end of input"})


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int  # byte offset into the UTF-8 encoding


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for sym, kind in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(_Token(kind, sym, _byte_offset(text, i)))
                i += len(sym)
                break
        else:
            if c.isascii() and c.isalpha():
                j = i + 1
                while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(_Token("ATOM", text[i:j], _byte_offset(text, i)))
                i = j
            else:
                after_operand = tokens and tokens[-1].kind in ("ATOM", "RPAREN")
                expected = _AFTER_OPERAND if after_operand else _PRIMARY_START
                raise FormulaSyntaxError(text, _byte_offset(text, i), expected, repr(c))
    tokens.append(_Token("EOF", "", _byte_offset(text, n)))
    return tokens


# ---------------------------------------------------------------------------
# Parser

# Cap on nesting and operator-chain length; keeps recursion in the parser,
# printer and evaluator well inside Python's default limit.
MAX_NESTING = 200

# binary kind -> (precedence, right associative, node class)
_BINOPS = {
    "IFF": (1, False, Iff),
    "IMPLIES": (2, True, Implies),
    "OR": (3, False, Or),
    "AND": (4, False, And),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, expected) -> FormulaSyntaxError:
        tok = self.peek()
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        return FormulaSyntaxError(self.text, tok.offset, frozenset(expected), found)

    def parse(self) -> Formula:
        f = self.expression(1)
        if self.peek().kind != "EOF":
            raise self.error({"'&'", "'|'", "'->'", "'<->'", "end of input"})
        return f

    def nest(self, extra: int = 0) -> None:
        if self.depth + extra > MAX_NESTING:
            tok = self.peek()
            raise FormulaSyntaxError(self.text, tok.offset, frozenset({"shallower nesting"}), repr(tok.text))

    def expression(self, min_prec: int) -> Formula:
        left = self.unary()
        chain = 0
        while True:
            kind = self.peek().kind
            if kind not in _BINOPS:
                return left
            prec, right_assoc, cls = _BINOPS[kind]
            if prec < min_prec:
                return left
            # left-associative chains deepen the tree too; cap both directions
            chain += 1
            self.nest(chain)
            self.advance()
            self.depth += 1
            try:
                self.nest()
                right = self.expression(prec if right_assoc else prec + 1)
            finally:
                self.depth -= 1
            left = cls(left, right)

    def unary(self) -> Formula:
        tok = self.peek()
        self.depth += 1
        try:
            self.nest()
            return self._unary(tok)
        finally:
            self.depth -= 1

    def _unary(self, tok: _Token) -> Formula:
        if tok.kind == "NOT":
            self.advance()
            return Not(self.unary())
        if tok.kind == "ASSERT":
            self.advance()
            return Assert(self.unary())
        if tok.kind == "ATOM":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.expression(1)
            if self.peek().kind != "RPAREN":
                raise self.error({"'&'", "'|'", "'->'", "'<->'", "')'"})
            self.advance()
            return inner
        raise self.error(_PRIMARY_START)


def parse(text: str) -> Formula:
    """Parse formula text into a tree.

    Raises :class:`FormulaSyntaxError` (a ``ValueError``) on malformed or
    empty input.

    >>> parse("p -> q -> r")
    Implies(left=Atom(name='p'), right=Implies(left=Atom(name='q'), right=Atom(name='r')))
    """
    if not isinstance(text, str):
        raise TypeError("formula text must be a str")
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printer

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Assert: 5, Atom: 6}
_ASCII = {Iff: "<->", Implies: "->", Or: "|", And: "&", Not: "!", Assert: "T:"}
_UNICODE = {Iff: "↔", Implies: "→", Or: "∨", And: "∧", Not: "¬", Assert: "T:"}


def render(f: Formula, unicode: bool = False) -> str:
    """Print ``f`` as formula text; ``parse(render(f)) == f`` for every tree."""
    ops = _UNICODE if unicode else _ASCII
    return _render(f, ops)


def _render(f: Formula, ops) -> str:
    cls = type(f)
    if cls is Atom:
        return f.name
    if cls in UNARY:
        inner = _render(f.arg, ops)
        if _PREC[type(f.arg)] < _PREC[cls]:
            inner = f"({inner})"
        return ops[cls] + inner
    prec = _PREC[cls]
    right_assoc = cls is Implies
    lp, rp = _PREC[type(f.left)], _PREC[type(f.right)]
    left = _render(f.left, ops)
    right = _render(f.right, ops)
    # binary operands of <-> are always bracketed for readability
    iff = cls is Iff
    if lp < prec or (lp == prec and right_assoc) or (iff and lp < 5):
        left = f"({left})"
    if rp < prec or (rp == prec and not right_assoc) or (iff and rp < 5):
        right = f"({right})"
    return f"{left} {ops[cls]} {right}"


def atoms(f: Formula) -> tuple[Atom, ...]:
    """Distinct atoms of ``f`` in first-occurrence (left-to-right) order."""
    seen: dict[Atom, None] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            seen.setdefault(node, None)
        elif isinstance(node, UNARY):
            stack.append(node.arg)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return tuple(seen)
