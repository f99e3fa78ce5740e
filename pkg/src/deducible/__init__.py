"""Hilbert-style propositional calculus: a small trusted proof kernel,
proof synthesizers for n-ary conjunction/disjunction theorems, and a
truth-table oracle."""
from .formula import And, Formula, Impl, Not, Or, Var, conj_n, disj_n, parse, render, substitute
from .kernel import AxiomSchema, CheckResult, Proof, axiom, check
from .semantics import evaluate, find_counterexample, is_tautology

__all__ = [
    "Formula", "Var", "Not", "And", "Or", "Impl",
    "parse", "render", "conj_n", "disj_n", "substitute",
    "AxiomSchema", "Proof", "CheckResult", "axiom", "check",
    "evaluate", "is_tautology", "find_counterexample",
]
