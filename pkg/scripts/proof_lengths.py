"""Tabulate synthesized proof lengths against n.

    python scripts/proof_lengths.py --max-n 16
"""
import argparse
from dataclasses import dataclass

from deducible import derived
from deducible.formula import Var


@dataclass
class Config:
    max_n: int = 16


def lengths(n: int) -> dict[str, int]:
    xs = [Var(f"A{k}") for k in range(1, n + 1)]
    ids = [derived.identity(x) for x in xs]
    base = sum(len(p) for p in ids)
    return {
        "thm1": len(derived.theorem_conj(ids)) - base,
        "thm2": len(derived.theorem_disj(ids)) - base,
        "lemma": len(derived.lemma_idem_disj(Var("B"), n)),
        "proj(1)": len(derived.projection(xs, 1)),
        "inj(1)": len(derived.injection(xs, 1)),
        "cons3": len(derived.idempotence_proof("and", "elim", Var("A"), n)),
        "cons4": len(derived.idempotence_proof("or", "elim", Var("A"), n)),
        "cons9": len(derived.conj_implies_disj(xs)),
        "cons9-I": len(derived.conj_implies_disj(xs, "I")),
        "cons9-II": len(derived.conj_implies_disj(xs, "II")),
    }


def main(cfg: Config) -> None:
    rows = [(n, lengths(n)) for n in range(1, cfg.max_n + 1)]
    cols = list(rows[0][1])
    print("n".rjust(3) + "".join(c.rjust(10) for c in cols))
    for n, row in rows:
        print(str(n).rjust(3) + "".join(str(row[c]).rjust(10) for c in cols))
    print("\nthm1/thm2 exclude the spliced premise proofs")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(ap.parse_args().max_n))
