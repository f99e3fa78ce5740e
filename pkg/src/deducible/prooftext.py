"""Line-oriented proof files.

::

    # optional comment lines
    1 | A -> (B -> A) | AX I.a {A:=A; B:=B}
    2 | ... | MP 1 2
    QED <formula>

Indices are 1-based and must run 1, 2, 3, ...  Parsing only reads the file
into a :class:`~deducible.kernel.Proof`; whether the steps are valid is
decided by :func:`deducible.kernel.check`, exactly as for proofs built in
memory.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from .formula import FormulaSyntaxError, parse, render
from .kernel import AxiomInstance, AxiomSchema, CheckResult, ModusPonens, Proof, check

__all__ = ["ProofTextError", "dumps", "loads", "check_text", "write", "read", "check_file"]


class ProofTextError(ValueError):
    """A proof file that cannot be read.  ``step`` is the 1-based step the
    fault belongs to; ``line`` is the 1-based line number."""

    def __init__(self, message: str, step: int, line: int):
        super().__init__(f"step {step} (line {line}): {message}")
        self.reason = message
        self.step = step
        self.line = line


_STEP = re.compile(
    r"^\s*(\d+)\s*\|(.*?)\|\s*"
    r"(?:AX\s+(\S+?)\s*\{(.*)\}|MP\s+(\d+)\s+(\d+))\s*$"
)
_QED = re.compile(r"^\s*QED\b(.*)$")
_LEADING_INDEX = re.compile(r"^\s*(\d+)\s*\|")


def dumps(p: Proof) -> str:
    lines = []
    for i, step in enumerate(p.steps, start=1):
        if isinstance(step, AxiomInstance):
            body = "; ".join(f"{name}:={render(value)}" for name, value in step.binding)
            just = f"AX {step.schema.value} {{{body}}}"
        else:
            just = f"MP {step.minor + 1} {step.major + 1}"
        lines.append(f"{i} | {render(step.formula)} | {just}")
    lines.append(f"QED {render(p.conclusion)}")
    return "\n".join(lines) + "\n"


def _formula(text: str, what: str, step: int, line: int):
    try:
        return parse(text.strip())
    except FormulaSyntaxError as e:
        raise ProofTextError(f"bad {what}: {e}", step, line) from None


def _binding(body: str, step: int, line: int):
    pairs = []
    for item in body.split(";"):
        if not item.strip():
            continue
        name, sep, value = item.partition(":=")
        if not sep:
            raise ProofTextError(f"malformed binding {item.strip()!r}", step, line)
        pairs.append((name.strip(), _formula(value, f"binding for {name.strip()}", step, line)))
    return tuple(pairs)


def loads(text: str) -> Proof:
    steps = []
    conclusion = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        last_line = lineno
        expected = len(steps) + 1
        if conclusion is not None:
            raise ProofTextError("content after QED", expected, lineno)
        qed = _QED.match(raw)
        if qed:
            if not steps:
                raise ProofTextError("QED before any step", 1, lineno)
            conclusion = _formula(qed.group(1), "QED formula", len(steps), lineno)
            continue
        m = _STEP.match(raw)
        if not m:
            lead = _LEADING_INDEX.match(raw)
            where = int(lead.group(1)) if lead else expected
            raise ProofTextError("unrecognised step line", where, lineno)
        index = int(m.group(1))
        if index != expected:
            raise ProofTextError(f"step numbered {index}, expected {expected}", expected, lineno)
        formula = _formula(m.group(2), "step formula", index, lineno)
        if m.group(3) is not None:
            try:
                schema = AxiomSchema.lookup(m.group(3))
            except ValueError as e:
                raise ProofTextError(str(e), index, lineno) from None
            steps.append(AxiomInstance(schema, _binding(m.group(4), index, lineno), formula))
        else:
            steps.append(ModusPonens(int(m.group(5)) - 1, int(m.group(6)) - 1, formula))
    if conclusion is None:
        raise ProofTextError("missing QED line", len(steps) + 1, last_line + 1)
    return Proof(tuple(steps), conclusion)


def check_text(text: str) -> CheckResult:
    """Read and check; unreadable files are reported as a failed check."""
    try:
        p = loads(text)
    except ProofTextError as e:
        return CheckResult(False, e.step, e.reason)
    return check(p)


def write(p: Proof, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(p), encoding="utf-8")


def read(path: Union[str, Path]) -> Proof:
    return loads(Path(path).read_text(encoding="utf-8"))


def check_file(path: Union[str, Path]) -> CheckResult:
    return check_text(Path(path).read_text(encoding="utf-8"))
