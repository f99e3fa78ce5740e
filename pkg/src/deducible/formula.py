"""Propositional formulas: AST, parser, canonical printer, substitution.

Surface syntax (ASCII, Unicode aliases in brackets)::

    formula := impl
    impl    := or ("->" impl)?          [⊃ →]
    or      := and ("|" and)*           [∨]
    and     := neg ("&" neg)*           [∧]
    neg     := "~" neg | atom           [¬]
    atom    := VAR | "(" formula ")"

Variables are an uppercase letter followed by letters or digits (``A``,
``B1``, ``An``).  Implication is right-associative, conjunction and
disjunction are left-associative.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

__all__ = [
    "Formula",
    "Var",
    "Not",
    "And",
    "Or",
    "Impl",
    "FormulaSyntaxError",
    "parse",
    "render",
    "conj_n",
    "disj_n",
    "substitute",
    "variables",
    "is_variable_name",
]


class Formula:
    """Base class of the five formula constructors.

    Operators build formulas: ``a & b``, ``a | b``, ``~a`` and ``a >> b``
    (implication).
    """

    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __rshift__(self, other: Formula) -> Formula:
        return Impl(self, other)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Var(Formula):
    name: str

    def __post_init__(self):
        if not is_variable_name(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")


@dataclass(frozen=True, slots=True)
class Not(Formula):
    inner: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Impl(Formula):
    antecedent: Formula
    consequent: Formula


def is_variable_name(name: str) -> bool:
    return (
        isinstance(name, str)
        and len(name) > 0
        and name[0].isascii()
        and name[0].isupper()
        and all(c.isascii() and c.isalnum() for c in name)
    )


# ---------------------------------------------------------------- parsing

class FormulaSyntaxError(ValueError):
    """Malformed formula text.  ``position`` is 1-based; end of input is
    reported as ``len(text) + 1``."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position
        self.reason = message


_SYMBOLS = {
    "->": "->", "⊃": "->", "→": "->",
    "&": "&", "∧": "&",
    "|": "|", "∨": "|",
    "~": "~", "¬": "~",
    "(": "(", ")": ")",
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return (kind, value, 1-based position) triples, ending with EOF."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if text.startswith("->", i):
            tokens.append(("op", "->", i + 1))
            i += 2
            continue
        if c in _SYMBOLS:
            tokens.append(("op", _SYMBOLS[c], i + 1))
            i += 1
            continue
        if c.isascii() and c.isupper():
            j = i + 1
            while j < n and text[j].isascii() and text[j].isalnum():
                j += 1
            tokens.append(("var", text[i:j], i + 1))
            i = j
            continue
        raise FormulaSyntaxError(f"unexpected character {c!r}", i + 1)
    tokens.append(("eof", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def accept(self, op: str) -> bool:
        kind, value, _ = self.tokens[self.pos]
        if kind == "op" and value == op:
            self.pos += 1
            return True
        return False

    def fail(self, expected: str):
        kind, value, where = self.peek()
        found = "end of input" if kind == "eof" else repr(value)
        raise FormulaSyntaxError(f"expected {expected}, found {found}", where)

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Impl(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.negation()
        while self.accept("&"):
            f = And(f, self.negation())
        return f

    def negation(self) -> Formula:
        if self.accept("~"):
            return Not(self.negation())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "var":
            self.pos += 1
            return Var(value)
        if self.accept("("):
            f = self.formula()
            if not self.accept(")"):
                self.fail("')'")
            return f
        self.fail("formula")


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula.

    >>> parse("A -> (B -> A)")
    Impl(antecedent=Var(name='A'), consequent=Impl(antecedent=Var(name='B'), consequent=Var(name='A')))
    """
    if not text or not text.strip():
        raise FormulaSyntaxError("empty input", 1)
    parser = _Parser(text)
    f = parser.formula()
    if parser.peek()[0] != "eof":
        parser.fail("end of input")
    return f


# --------------------------------------------------------------- printing

# binding strength; larger binds tighter
_PREC = {Impl: 0, Or: 1, And: 2, Not: 3, Var: 4}
_OPS = {Impl: "->", Or: "|", And: "&"}


def render(f: Formula) -> str:
    """Canonical text of ``f``.

    Parentheses are the fewest the grammar needs, except that an
    implication directly under another implication is always bracketed:
    ``A -> (B -> A)`` rather than ``A -> B -> A``.
    """
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        return "~" + _wrap(f.inner, _PREC[Not] > _PREC[type(f.inner)])
    prec = _PREC[type(f)]
    if isinstance(f, Impl):
        left, right = f.antecedent, f.consequent
        # nested implications are always bracketed, on either side
        left_parens = _PREC[type(left)] <= prec
        right_parens = _PREC[type(right)] <= prec
    else:
        left, right = f.left, f.right
        left_parens = _PREC[type(left)] < prec
        right_parens = _PREC[type(right)] <= prec
    return f"{_wrap(left, left_parens)} {_OPS[type(f)]} {_wrap(right, right_parens)}"


def _wrap(f: Formula, parens: bool) -> str:
    s = render(f)
    return f"({s})" if parens else s


# ------------------------------------------------------ n-ary and helpers

def conj_n(fs: Sequence[Formula]) -> Formula:
    """Left-associated conjunction ``((f1 & f2) & f3) ...``; one element is
    returned unchanged."""
    return _fold(And, fs, "conj_n")


def disj_n(fs: Sequence[Formula]) -> Formula:
    """Left-associated disjunction, as :func:`conj_n`."""
    return _fold(Or, fs, "disj_n")


def _fold(cons, fs, name):
    fs = list(fs)
    if not fs:
        raise ValueError(f"{name} needs at least one formula")
    acc = fs[0]
    for f in fs[1:]:
        acc = cons(acc, f)
    return acc


def substitute(f: Formula, binding: Mapping[str, Formula]) -> Formula:
    """Simultaneously replace variables by formulas; unbound ones stay."""
    if isinstance(f, Var):
        return binding.get(f.name, f)
    if isinstance(f, Not):
        return Not(substitute(f.inner, binding))
    if isinstance(f, Impl):
        return Impl(substitute(f.antecedent, binding), substitute(f.consequent, binding))
    return type(f)(substitute(f.left, binding), substitute(f.right, binding))


def _walk_vars(f: Formula) -> Iterator[str]:
    if isinstance(f, Var):
        yield f.name
    elif isinstance(f, Not):
        yield from _walk_vars(f.inner)
    elif isinstance(f, Impl):
        yield from _walk_vars(f.antecedent)
        yield from _walk_vars(f.consequent)
    else:
        yield from _walk_vars(f.left)
        yield from _walk_vars(f.right)


def variables(f: Formula) -> list[str]:
    """Distinct variable names of ``f`` in order of first occurrence."""
    return list(dict.fromkeys(_walk_vars(f)))
