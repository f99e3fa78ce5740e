"""Command-line front end.

Exit status: 0 success, 1 negative result (proof rejected, formula not a
tautology), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import derived
from .formula import FormulaSyntaxError, Var, parse, render
from .kernel import Proof, check
from .prooftext import check_file, write
from .semantics import TooManyVariables, find_counterexample, format_valuation

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

TARGETS = (
    ["thm1", "thm2", "lemma"]
    + [f"cons{k}" for k in range(1, 11)]
    + ["proj", "inj", "shape", "example-i", "example-ii", "example-iii"]
)


class UsageError(Exception):
    pass


def _formulas(args) -> list:
    if args.vars:
        return [parse(s) for s in args.vars.split(",")]
    if args.var:
        return [parse(args.var)] * args.n
    return [Var(f"A{k}") for k in range(1, args.n + 1)]


def _single(args, default="A"):
    if args.var:
        return parse(args.var)
    if args.vars:
        return parse(args.vars.split(",")[0])
    return Var(default)


def synthesize(target: str, args) -> Proof:
    """Build the proof a ``synth`` invocation asks for."""
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    if target == "lemma":
        return derived.lemma_idem_disj(_single(args, "B"), n)
    if target in ("cons3", "cons4", "cons7", "cons8"):
        conn, direction = {
            "cons3": ("and", "elim"), "cons4": ("or", "elim"),
            "cons7": ("and", "intro"), "cons8": ("or", "intro"),
        }[target]
        return derived.idempotence_proof(conn, direction, _single(args), n)
    if target.startswith("example-"):
        gallery = derived.example_gallery()
        if target == "example-iii":
            return gallery["iii-M2" if args.method == "II" else "iii-M1"]
        return gallery[target.removeprefix("example-")]

    fs = _formulas(args)
    n = len(fs)
    if target in ("proj", "inj"):
        i = args.i or 1
        if not 1 <= i <= n:
            raise UsageError(f"--i must lie in 1..{n}")
        return (derived.projection if target == "proj" else derived.injection)(fs, i)
    if target == "thm1":
        return derived.theorem_conj([derived.identity(f) for f in fs])
    if target == "thm2":
        return derived.theorem_disj([derived.identity(f) for f in fs])
    if target == "cons1":
        return derived.cons_conj_to_common([derived.injection(fs, i) for i in range(1, n + 1)])
    if target == "cons2":
        return derived.cons_disj_to_common([derived.injection(fs, i) for i in range(1, n + 1)])
    if target == "cons5":
        return derived.cons_common_to_conj([derived.projection(fs, i) for i in range(1, n + 1)])
    if target == "cons6":
        return derived.cons_common_to_disj([derived.projection(fs, i) for i in range(1, n + 1)])
    if target == "cons9":
        return derived.conj_implies_disj(fs, args.method or "direct")
    if target == "cons10":
        return derived.mixed_conj_to_disj([derived.identity(f) for f in fs], args.method or "I")
    if target == "shape":
        # antecedent i bridges to the mirrored consequent n+1-i by identity
        problem = derived.ShapeProblem(
            fs, fs[::-1], args.ant, args.cons,
            {(i, n + 1 - i): derived.identity(fs[i - 1]) for i in range(1, n + 1)},
        )
        result = derived.shape_prover(problem)
        if isinstance(result, derived.ShapeFailure):
            raise UsageError(str(result))
        return result
    raise UsageError(f"unknown target {target!r}")


def gallery_proofs() -> dict[str, Proof]:
    """Everything ``gallery`` writes: the worked examples plus each
    consequence at n = 3."""
    out = {f"example-{label}": p for label, p in derived.example_gallery().items()}
    out["example-i-thm1"] = derived.example_i_via_theorem1()
    defaults = argparse.Namespace(n=3, var=None, vars=None, i=None, method=None, ant="and", cons="and")
    for target in ["thm1", "thm2", "lemma"] + [f"cons{k}" for k in range(1, 11)]:
        out[target] = synthesize(target, defaults)
    for k, (proof, _) in enumerate(derived.converse_failures(), start=1):
        out[f"remark-{k}"] = proof
    return out


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="deducible", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the canonical form of a formula")
    p.add_argument("formula")

    p = sub.add_parser("check", help="check a proof file")
    p.add_argument("file")

    p = sub.add_parser("taut", help="decide a formula by truth table")
    p.add_argument("formula")

    p = sub.add_parser("synth", help="synthesize a proof file")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--var", help="formula used for single-formula targets")
    p.add_argument("--vars", help="comma-separated formulas")
    p.add_argument("--i", type=int, help="index for proj/inj")
    p.add_argument("--method", choices=["direct", "I", "II"])
    p.add_argument("--ant", default="and", choices=["and", "or"], help="shape antecedent connective")
    p.add_argument("--cons", default="and", choices=["and", "or"], help="shape consequent connective")
    p.add_argument("--out", required=True)

    p = sub.add_parser("gallery", help="write proof files for the worked examples")
    p.add_argument("directory")
    return ap


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        if args.command == "parse":
            print(render(parse(args.formula)), file=out)
            return EXIT_OK

        if args.command == "taut":
            f = parse(args.formula)
            cex = find_counterexample(f)
            if cex is None:
                print("TAUTOLOGY", file=out)
                return EXIT_OK
            print(f"COUNTEREXAMPLE {format_valuation(cex)}", file=out)
            return EXIT_NEGATIVE

        if args.command == "check":
            path = Path(args.file)
            if not path.is_file():
                raise UsageError(f"no such file: {path}")
            result = check_file(path)
            if result:
                from .prooftext import read
                print(f"OK {render(read(path).conclusion)}", file=out)
                return EXIT_OK
            print(f"FAIL {result.message}", file=out)
            return EXIT_NEGATIVE

        if args.command == "synth":
            proof = synthesize(args.target, args)
            write(proof, args.out)
            print(f"wrote {args.out}: {len(proof)} steps, {render(proof.conclusion)}", file=out)
            return EXIT_OK

        if args.command == "gallery":
            directory = Path(args.directory)
            directory.mkdir(parents=True, exist_ok=True)
            for name, proof in gallery_proofs().items():
                assert check(proof), name
                write(proof, directory / f"{name}.prf")
                print(f"{name}.prf: {render(proof.conclusion)}", file=out)
            return EXIT_OK
    except FormulaSyntaxError as e:
        print(str(e), file=err)
        return EXIT_USAGE
    except (UsageError, TooManyVariables, derived.DerivationError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
