"""The trusted core.

A proof is a flat sequence of steps.  Each step is either an instance of
one of the eleven axiom schemas or a modus ponens over two earlier steps.
There is no other step kind and no hypothesis step: everything ``check``
accepts is a theorem of the calculus.

Step indices are 0-based in memory.  Diagnostics and the text format use
1-based indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Union

from .formula import Formula, Impl, Var, parse, substitute, variables

__all__ = [
    "AxiomSchema",
    "METAVARIABLES",
    "AxiomInstance",
    "ModusPonens",
    "ProofStep",
    "Proof",
    "CheckResult",
    "axiom",
    "check",
]

METAVARIABLES = ("A", "B", "C")


class AxiomSchema(Enum):
    I_a = "I.a"
    I_b = "I.b"
    II_a = "II.a"
    II_b = "II.b"
    II_c = "II.c"
    III_a = "III.a"
    III_b = "III.b"
    III_c = "III.c"
    IV_a = "IV.a"
    IV_b = "IV.b"
    IV_c = "IV.c"

    @property
    def template(self) -> Formula:
        return _TEMPLATES[self]

    @property
    def metavariables(self) -> tuple[str, ...]:
        present = variables(self.template)
        return tuple(m for m in METAVARIABLES if m in present)

    @classmethod
    def lookup(cls, ident: Union[str, "AxiomSchema"]) -> "AxiomSchema":
        if isinstance(ident, cls):
            return ident
        try:
            return cls(ident)
        except ValueError:
            raise ValueError(f"unknown axiom schema {ident!r}") from None

    def __str__(self):
        return self.value


_TEMPLATES = {
    AxiomSchema.I_a: parse("A -> (B -> A)"),
    AxiomSchema.I_b: parse("(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
    AxiomSchema.II_a: parse("A & B -> A"),
    AxiomSchema.II_b: parse("A & B -> B"),
    AxiomSchema.II_c: parse("(A -> B) -> ((A -> C) -> (A -> B & C))"),
    AxiomSchema.III_a: parse("A -> A | B"),
    AxiomSchema.III_b: parse("B -> A | B"),
    AxiomSchema.III_c: parse("(A -> C) -> ((B -> C) -> (A | B -> C))"),
    AxiomSchema.IV_a: parse("(A -> B) -> (~B -> ~A)"),
    AxiomSchema.IV_b: parse("A -> ~~A"),
    AxiomSchema.IV_c: parse("~~A -> A"),
}


@dataclass(frozen=True)
class AxiomInstance:
    """``formula`` claims to be ``schema.template`` under ``binding``.

    ``binding`` is a tuple of ``(metavariable, formula)`` pairs; a
    metavariable it leaves out stands for the formula variable of the same
    name.
    """

    schema: AxiomSchema
    binding: tuple[tuple[str, Formula], ...]
    formula: Formula

    def binding_map(self) -> dict[str, Formula]:
        return dict(self.binding)


@dataclass(frozen=True)
class ModusPonens:
    """From step ``minor`` (X) and step ``major`` (X -> Y) conclude ``formula`` (Y)."""

    minor: int
    major: int
    formula: Formula


ProofStep = Union[AxiomInstance, ModusPonens]


@dataclass(frozen=True)
class Proof:
    steps: tuple[ProofStep, ...]
    conclusion: Formula

    @classmethod
    def of(cls, steps) -> "Proof":
        steps = tuple(steps)
        if not steps:
            raise ValueError("a proof needs at least one step")
        return cls(steps, steps[-1].formula)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of :func:`check`.  Truthy iff the proof was accepted.

    On rejection ``step`` is the 1-based index of the first offending step
    (``None`` when the fault is not tied to a step) and ``rule`` names what
    was violated.
    """

    ok: bool
    step: Optional[int] = None
    rule: Optional[str] = None

    def __bool__(self):
        return self.ok

    @property
    def message(self) -> str:
        if self.ok:
            return "OK"
        if self.step is None:
            return self.rule
        return f"{self.rule} at step {self.step}"


def axiom(schema: Union[AxiomSchema, str], binding: Optional[Mapping[str, Formula]] = None) -> AxiomInstance:
    """Instantiate ``schema``; metavariables missing from ``binding`` default to themselves."""
    schema = AxiomSchema.lookup(schema)
    binding = dict(binding or {})
    for name in binding:
        if name not in METAVARIABLES:
            raise ValueError(f"{name!r} is not a metavariable (expected one of A, B, C)")
    full = {m: binding.get(m, Var(m)) for m in schema.metavariables}
    return AxiomInstance(schema, tuple(full.items()), substitute(schema.template, full))


def _check_step(step, index: int, formulas: list) -> Optional[str]:
    if isinstance(step, AxiomInstance):
        if not isinstance(step.schema, AxiomSchema):
            return "unknown axiom schema"
        binding = {}
        for name, value in step.binding:
            if name not in METAVARIABLES:
                return f"binding names non-metavariable {name}"
            if name in binding:
                return f"metavariable {name} bound twice"
            if not isinstance(value, Formula):
                return f"binding for {name} is not a formula"
            binding[name] = value
        if not isinstance(step.formula, Formula):
            return "step formula is not a formula"
        if substitute(step.schema.template, binding) != step.formula:
            return f"formula is not an instance of axiom {step.schema.value} under the binding"
        return None
    if isinstance(step, ModusPonens):
        for label, ref in (("minor", step.minor), ("major", step.major)):
            if not isinstance(ref, int) or isinstance(ref, bool):
                return f"{label} premise reference is not an index"
            if ref < 0 or ref >= index:
                return f"{label} premise does not refer to an earlier step"
        major = formulas[step.major]
        if not isinstance(major, Impl):
            return "major premise not an implication"
        if major.antecedent != formulas[step.minor]:
            return "minor premise does not match antecedent of major premise"
        if major.consequent != step.formula:
            return "formula is not the consequent of the major premise"
        return None
    return "not a kernel step"


def check(p: Proof) -> CheckResult:
    """Validate every step of ``p`` and its stated conclusion."""
    if not isinstance(p, Proof):
        return CheckResult(False, None, "not a proof")
    if not p.steps:
        return CheckResult(False, None, "empty proof")
    formulas: list = []
    for index, step in enumerate(p.steps):
        problem = _check_step(step, index, formulas)
        if problem is not None:
            return CheckResult(False, index + 1, problem)
        formulas.append(step.formula)
    if p.conclusion != formulas[-1]:
        return CheckResult(False, len(formulas), "conclusion does not match the last step")
    return CheckResult(True)
