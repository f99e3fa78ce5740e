"""Randomized soundness sweep: random axiom instances closed under modus
ponens, plus synthesized proofs over random bridges.  Every accepted proof
must conclude a tautology.

    python scripts/soundness_sweep.py --seeds 200 --seed 0
"""
import argparse
import random
import time
from dataclasses import dataclass

from deducible import derived
from deducible.formula import And, Impl, Not, Or, Var
from deducible.kernel import AxiomSchema, ModusPonens, Proof, axiom, check
from deducible.semantics import find_counterexample


@dataclass
class Config:
    seeds: int = 200
    seed: int = 0
    rounds: int = 25
    max_n: int = 12


def closure(rng: random.Random, rounds: int) -> Proof:
    A, B, C = Var("A"), Var("B"), Var("C")
    pool = [A, B, C, Impl(A, B), And(A, C), Or(B, C), Not(A)]
    steps, known = [], {}
    for _ in range(rounds):
        schema = rng.choice(list(AxiomSchema))
        step = axiom(schema, {m: rng.choice(pool) for m in schema.metavariables})
        if step.formula not in known:
            known[step.formula] = len(steps)
            steps.append(step)
            pool.append(step.formula)
        for f, j in list(known.items()):
            if isinstance(f, Impl) and f.antecedent in known and f.consequent not in known:
                known[f.consequent] = len(steps)
                steps.append(ModusPonens(known[f.antecedent], j, f.consequent))
                pool.append(f.consequent)
    return Proof.of(steps)


def synthesized(rng: random.Random, max_n: int):
    n = rng.randint(1, max_n)
    xs = [Var(f"X{rng.randint(0, 4)}") for _ in range(n)]
    ys = [Var(f"Y{rng.randint(0, 4)}") for _ in range(n)]
    ps = [derived.axiom_proof(rng.choice(["I.a", "II.a", "III.a", "III.b"]), {"A": x, "B": y}) for x, y in zip(xs, ys)]
    yield derived.theorem_conj(ps)
    yield derived.theorem_disj(ps)
    yield derived.mixed_conj_to_disj(ps, rng.choice(["I", "II"]))
    yield derived.conj_implies_disj(xs, rng.choice(["direct", "I", "II"]))


def main(cfg: Config) -> None:
    master = random.Random(cfg.seed)
    proofs = steps = 0
    start = time.perf_counter()
    for _ in range(cfg.seeds):
        rng = random.Random(master.getrandbits(32))
        p = closure(rng, cfg.rounds)
        candidates = [Proof.of(p.steps[:k]) for k in range(1, len(p) + 1)]
        candidates += list(synthesized(rng, cfg.max_n))
        for q in candidates:
            if not check(q):
                raise SystemExit(f"kernel rejected a generated proof: {check(q).message}")
            cex = find_counterexample(q.conclusion)
            if cex is not None:
                raise SystemExit(f"UNSOUND: {q.conclusion} fails at {cex}")
            proofs += 1
            steps += len(q)
    print(f"{proofs} proofs ({steps} steps) checked and sound in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    main(Config(**vars(ap.parse_args())))
