"""Classical truth-table semantics.

Used as the independent oracle for everything the kernel accepts: a
derivable formula must be a tautology.  Enumeration is exhaustive.
``is_tautology`` evaluates all 2**k rows at once by giving each variable
its whole truth-table column as a big-integer bitmask; row ``r`` assigns
the ``i``-th variable (sorted by name) the bit ``k - 1 - i`` of ``r``, so
row order is the lexicographic order of valuations with false < true.
"""
from __future__ import annotations

from typing import Dict, Mapping, Optional

from .formula import And, Formula, Not, Or, Var, variables

__all__ = [
    "Valuation",
    "MAX_VARIABLES",
    "UnassignedVariable",
    "TooManyVariables",
    "evaluate",
    "is_tautology",
    "find_counterexample",
    "truth_mask",
    "format_valuation",
]

Valuation = Dict[str, bool]

MAX_VARIABLES = 24


class UnassignedVariable(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"variable {self.name} is not assigned"


class TooManyVariables(ValueError):
    pass


def evaluate(f: Formula, v: Mapping[str, bool]) -> bool:
    for name in variables(f):
        if name not in v:
            raise UnassignedVariable(name)
    return _eval(f, v)


def _eval(f, v):
    if isinstance(f, Var):
        return bool(v[f.name])
    if isinstance(f, Not):
        return not _eval(f.inner, v)
    if isinstance(f, And):
        return _eval(f.left, v) and _eval(f.right, v)
    if isinstance(f, Or):
        return _eval(f.left, v) or _eval(f.right, v)
    return (not _eval(f.antecedent, v)) or _eval(f.consequent, v)


def _column(index: int, k: int) -> int:
    # rows where bit (k-1-index) of the row number is set
    half = 1 << (k - 1 - index)
    block = ((1 << half) - 1) << half
    width = 2 * half
    total = 1 << k
    while width < total:
        block |= block << width
        width *= 2
    return block


def truth_mask(f: Formula) -> tuple[list[str], int]:
    """Sorted variable names of ``f`` and its truth table as a bitmask
    (bit ``r`` set iff row ``r`` satisfies ``f``)."""
    names = sorted(variables(f))
    k = len(names)
    if k > MAX_VARIABLES:
        raise TooManyVariables(
            f"{k} variables exceeds the enumeration bound of {MAX_VARIABLES}"
        )
    full = (1 << (1 << k)) - 1
    columns = {name: _column(i, k) for i, name in enumerate(names)}
    cache: dict[int, int] = {}

    def go(g):
        key = id(g)
        if key in cache:
            return cache[key]
        if isinstance(g, Var):
            m = columns[g.name]
        elif isinstance(g, Not):
            m = full ^ go(g.inner)
        elif isinstance(g, And):
            m = go(g.left) & go(g.right)
        elif isinstance(g, Or):
            m = go(g.left) | go(g.right)
        else:
            m = (full ^ go(g.antecedent)) | go(g.consequent)
        cache[key] = m
        return m

    return names, go(f)


def is_tautology(f: Formula) -> bool:
    names, mask = truth_mask(f)
    return mask == (1 << (1 << len(names))) - 1


def find_counterexample(f: Formula) -> Optional[Valuation]:
    """First falsifying valuation in lexicographic order, or None."""
    names, mask = truth_mask(f)
    k = len(names)
    falsifying = ((1 << (1 << k)) - 1) ^ mask
    if not falsifying:
        return None
    row = (falsifying & -falsifying).bit_length() - 1
    return {name: bool(row >> (k - 1 - i) & 1) for i, name in enumerate(names)}


def format_valuation(v: Mapping[str, bool]) -> str:
    body = ", ".join(f"{name}:{str(value).lower()}" for name, value in sorted(v.items()))
    return "{" + body + "}"
