"""Proof synthesis for the derived rules, theorems and consequences.

Every public function returns a closed :class:`~deducible.kernel.Proof`
made only of axiom instances and modus ponens.  Premises of the form
"if |- X -> Y" are passed in as already-built proofs and spliced into the
output with their step indices shifted.

Internally constructions work on a :class:`ProofBuilder` and refer to
earlier results by step index, so a sub-proof that is needed twice (the
identity ``B -> B`` in the idempotence lemma, say) is derived once.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence, Union

from .formula import And, Formula, Impl, Or, Var, conj_n, disj_n
from .kernel import AxiomSchema, ModusPonens, Proof, axiom, check

__all__ = [
    "DerivationError",
    "ProofBuilder",
    "axiom_proof",
    "identity",
    "syllogism",
    "theorem_conj",
    "theorem_disj",
    "lemma_idem_disj",
    "projection",
    "injection",
    "cons_conj_to_common",
    "cons_disj_to_common",
    "idempotence_proof",
    "cons_common_to_conj",
    "cons_common_to_disj",
    "conj_implies_disj",
    "mixed_conj_to_disj",
    "example_i_via_theorem1",
    "converse_failures",
    "ShapeProblem",
    "ShapeFailure",
    "shape_prover",
    "example_gallery",
]


class DerivationError(ValueError):
    pass


class ProofBuilder:
    """Append-only step list used by the synthesizers.

    ``mp`` computes the conclusion itself and refuses ill-formed
    applications early; the kernel re-validates everything afterwards.
    """

    def __init__(self):
        self.steps: list = []

    def __len__(self):
        return len(self.steps)

    def formula(self, i: int) -> Formula:
        return self.steps[i].formula

    def _push(self, step) -> int:
        self.steps.append(step)
        return len(self.steps) - 1

    def axiom(self, schema: Union[AxiomSchema, str], **binding: Formula) -> int:
        return self._push(axiom(schema, binding))

    def mp(self, minor: int, major: int) -> int:
        imp = self.formula(major)
        if not isinstance(imp, Impl) or imp.antecedent != self.formula(minor):
            raise DerivationError(
                f"cannot apply modus ponens: {self.formula(minor)} with {imp}"
            )
        return self._push(ModusPonens(minor, major, imp.consequent))

    def splice(self, p: Proof) -> int:
        offset = len(self.steps)
        for step in p.steps:
            if isinstance(step, ModusPonens):
                step = ModusPonens(step.minor + offset, step.major + offset, step.formula)
            self.steps.append(step)
        return len(self.steps) - 1

    def build(self) -> Proof:
        return Proof.of(self.steps)


# ------------------------------------------------------------ validation

def _implication(p: Proof, what: str = "premise") -> Impl:
    if not isinstance(p, Proof):
        raise DerivationError(f"{what} is not a Proof")
    result = check(p)
    if not result:
        raise DerivationError(f"{what} does not check: {result.message}")
    if not isinstance(p.conclusion, Impl):
        raise DerivationError(f"{what} does not conclude an implication: {p.conclusion}")
    return p.conclusion


def _premises(ps: Sequence[Proof]) -> list[Impl]:
    ps = list(ps)
    if not ps:
        raise DerivationError("at least one premise proof is required")
    return [_implication(p, f"premise {i}") for i, p in enumerate(ps, start=1)]


def _positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DerivationError(f"n must be a positive integer, got {n!r}")


def _index(items: Sequence, i: int) -> None:
    if not 1 <= i <= len(items):
        raise DerivationError(f"index {i} out of range 1..{len(items)}")


def _run(construct: Callable[[ProofBuilder], object]) -> Proof:
    b = ProofBuilder()
    construct(b)
    return b.build()


# ------------------------------------------------- builder-level rules

def _syll(b: ProofBuilder, i: int, j: int) -> int:
    # i: X -> Y, j: Y -> Z  gives  X -> Z
    xy, yz = b.formula(i), b.formula(j)
    x, y, z = xy.antecedent, xy.consequent, yz.consequent
    if yz.antecedent != y:
        raise DerivationError(f"syllogism middle mismatch: {y} vs {yz.antecedent}")
    a = b.axiom("I.a", A=yz, B=x)
    x_yz = b.mp(j, a)
    dist = b.axiom("I.b", A=x, B=y, C=z)
    xy_xz = b.mp(x_yz, dist)
    return b.mp(i, xy_xz)


def _identity(b: ProofBuilder, a: Formula) -> int:
    s1 = b.axiom("I.b", A=a, B=Impl(a, a), C=a)
    s2 = b.axiom("I.a", A=a, B=Impl(a, a))
    s3 = b.mp(s2, s1)
    s4 = b.axiom("I.a", A=a, B=a)
    return b.mp(s4, s3)


def _two_way(b: ProofBuilder, schema: str, i: int, j: int, **binding) -> int:
    """Instance of a schema shaped (P -> (Q -> R)) and MP with i then j."""
    s = b.axiom(schema, **binding)
    return b.mp(j, b.mp(i, s))


def _conj_pair(b: ProofBuilder, i: int, j: int) -> int:
    # i: A1 -> B1, j: A2 -> B2  gives  A1 & A2 -> B1 & B2
    a1, b1 = b.formula(i).antecedent, b.formula(i).consequent
    a2, b2 = b.formula(j).antecedent, b.formula(j).consequent
    left = _syll(b, b.axiom("II.a", A=a1, B=a2), i)
    right = _syll(b, b.axiom("II.b", A=a1, B=a2), j)
    return _two_way(b, "II.c", left, right, A=And(a1, a2), B=b1, C=b2)


def _disj_pair(b: ProofBuilder, i: int, j: int) -> int:
    # i: A1 -> B1, j: A2 -> B2  gives  A1 | A2 -> B1 | B2
    a1, b1 = b.formula(i).antecedent, b.formula(i).consequent
    a2, b2 = b.formula(j).antecedent, b.formula(j).consequent
    left = _syll(b, i, b.axiom("III.a", A=b1, B=b2))
    right = _syll(b, j, b.axiom("III.b", A=b1, B=b2))
    return _two_way(b, "III.c", left, right, A=a1, B=a2, C=Or(b1, b2))


def _fold_pairs(b: ProofBuilder, idxs: Sequence[int], pair) -> int:
    acc = idxs[0]
    for k in idxs[1:]:
        acc = pair(b, acc, k)
    return acc


def _theorem_conj(b, idxs):
    return _fold_pairs(b, idxs, _conj_pair)


def _theorem_disj(b, idxs):
    return _fold_pairs(b, idxs, _disj_pair)


def _lemma(b: ProofBuilder, f: Formula, n: int) -> int:
    ident = _identity(b, f)
    acc = ident
    for _ in range(n - 1):
        acc = _two_way(b, "III.c", acc, ident, A=b.formula(acc).antecedent, B=f, C=f)
    return acc


def _projection(b: ProofBuilder, fs: Sequence[Formula], i: int) -> int:
    n = len(fs)
    if n == 1:
        return _identity(b, fs[0])
    prefix = conj_n(fs[:-1])
    if i == n:
        return b.axiom("II.b", A=prefix, B=fs[-1])
    head = b.axiom("II.a", A=prefix, B=fs[-1])
    if n == 2:
        return head
    return _syll(b, head, _projection(b, fs[:-1], i))


def _injection(b: ProofBuilder, fs: Sequence[Formula], i: int) -> int:
    n = len(fs)
    if n == 1:
        return _identity(b, fs[0])
    prefix = disj_n(fs[:-1])
    if i == n:
        return b.axiom("III.b", A=prefix, B=fs[-1])
    outer = b.axiom("III.a", A=prefix, B=fs[-1])
    if n == 2:
        return outer
    return _syll(b, _injection(b, fs[:-1], i), outer)


def _common_to_conj(b: ProofBuilder, idxs: Sequence[int]) -> int:
    def pair(b, i, j):
        a = b.formula(i).antecedent
        return _two_way(b, "II.c", i, j, A=a, B=b.formula(i).consequent, C=b.formula(j).consequent)

    return _fold_pairs(b, idxs, pair)


def _cases(b: ProofBuilder, idxs: Sequence[int]) -> int:
    # A_k -> D for each k  gives  A_1 | ... | A_n -> D, by III.c
    def pair(b, i, j):
        d = b.formula(i).consequent
        return _two_way(b, "III.c", i, j, A=b.formula(i).antecedent, B=b.formula(j).antecedent, C=d)

    return _fold_pairs(b, idxs, pair)


def _common_to_disj(b: ProofBuilder, idxs: Sequence[int]) -> int:
    if len(idxs) == 1:
        return idxs[0]
    targets = [b.formula(k).consequent for k in idxs]
    return _syll(b, idxs[0], _injection(b, targets, 1))


def _conj_to_common(b: ProofBuilder, idxs: Sequence[int]) -> int:
    if len(idxs) == 1:
        return idxs[0]
    common = b.formula(idxs[0]).consequent
    return _syll(b, _theorem_conj(b, idxs), _projection(b, [common] * len(idxs), 1))


def _disj_to_common(b: ProofBuilder, idxs: Sequence[int]) -> int:
    if len(idxs) == 1:
        return idxs[0]
    common = b.formula(idxs[0]).consequent
    return _syll(b, _theorem_disj(b, idxs), _lemma(b, common, len(idxs)))


def _conj_implies_disj(b: ProofBuilder, fs: Sequence[Formula], method: str) -> int:
    n = len(fs)
    if n == 1:
        return _identity(b, fs[0])
    if method == "direct":
        return _syll(b, _projection(b, fs, 1), _injection(b, fs, 1))
    whole_conj, whole_disj = conj_n(fs), disj_n(fs)
    if method == "I":
        # |- conj -> A_i for all i, Theorem 2, then conj -> conj | ... | conj
        lifted = _theorem_disj(b, [_projection(b, fs, i) for i in range(1, n + 1)])
        spread = _common_to_disj(b, [_identity(b, whole_conj)] * n)
        return _syll(b, spread, lifted)
    if method == "II":
        # |- A_i -> disj for all i, Theorem 1, then disj & ... & disj -> disj
        lifted = _theorem_conj(b, [_injection(b, fs, i) for i in range(1, n + 1)])
        return _syll(b, lifted, _projection(b, [whole_disj] * n, 1))
    raise DerivationError(f"unknown method {method!r}; use 'direct', 'I' or 'II'")


# ----------------------------------------------------------- public API

def axiom_proof(schema: Union[AxiomSchema, str], binding: Optional[Mapping[str, Formula]] = None) -> Proof:
    """One-step proof of an axiom instance."""
    return Proof.of([axiom(schema, binding)])


def identity(a: Formula) -> Proof:
    """Five-step proof of ``a -> a`` from I.a, I.b and modus ponens."""
    return _run(lambda b: _identity(b, a))


def syllogism(p1: Proof, p2: Proof) -> Proof:
    """From proofs of ``X -> Y`` and ``Y -> Z`` build a proof of ``X -> Z``."""
    xy = _implication(p1, "first premise")
    yz = _implication(p2, "second premise")
    if xy.consequent != yz.antecedent:
        raise DerivationError(
            f"syllogism middle mismatch: {xy.consequent} vs {yz.antecedent}"
        )

    def construct(b):
        i = b.splice(p1)
        j = b.splice(p2)
        _syll(b, i, j)

    return _run(construct)


def _splice_all(b: ProofBuilder, ps: Sequence[Proof]) -> list[int]:
    return [b.splice(p) for p in ps]


def theorem_conj(ps: Sequence[Proof]) -> Proof:
    """Given proofs of ``A_i -> B_i``, prove ``A_1 & ... & A_n -> B_1 & ... & B_n``.

    Induction on n: the two-premise case combines the II.a/II.b projections
    with each premise by syllogism and discharges the II.c instance
    ``(A1&A2 -> B1) -> ((A1&A2 -> B2) -> (A1&A2 -> B1&B2))`` by two modus
    ponens.  Each further premise is attached on the right of the result
    for the prefix.
    """
    _premises(ps)
    return _run(lambda b: _theorem_conj(b, _splice_all(b, ps)))


def theorem_disj(ps: Sequence[Proof]) -> Proof:
    """Given proofs of ``A_i -> B_i``, prove ``A_1 | ... | A_n -> B_1 | ... | B_n``."""
    _premises(ps)
    return _run(lambda b: _theorem_disj(b, _splice_all(b, ps)))


def lemma_idem_disj(f: Formula, n: int) -> Proof:
    """``f | f | ... | f -> f`` with n disjuncts."""
    _positive(n)
    return _run(lambda b: _lemma(b, f, n))


def projection(fs: Sequence[Formula], i: int) -> Proof:
    """``fs[1] & ... & fs[n] -> fs[i]`` (1-based ``i``)."""
    fs = list(fs)
    if not fs:
        raise DerivationError("projection needs at least one formula")
    _index(fs, i)
    return _run(lambda b: _projection(b, fs, i))


def injection(fs: Sequence[Formula], i: int) -> Proof:
    """``fs[i] -> fs[1] | ... | fs[n]`` (1-based ``i``)."""
    fs = list(fs)
    if not fs:
        raise DerivationError("injection needs at least one formula")
    _index(fs, i)
    return _run(lambda b: _injection(b, fs, i))


def _same(values, what):
    first = values[0]
    for k, v in enumerate(values[1:], start=2):
        if v != first:
            raise DerivationError(f"premise {k} has {what} {v}, expected {first}")


def cons_conj_to_common(ps: Sequence[Proof]) -> Proof:
    """From ``A_i -> B`` for all i, prove ``A_1 & ... & A_n -> B``."""
    imps = _premises(ps)
    _same([f.consequent for f in imps], "consequent")
    return _run(lambda b: _conj_to_common(b, _splice_all(b, ps)))


def cons_disj_to_common(ps: Sequence[Proof]) -> Proof:
    """From ``A_i -> B`` for all i, prove ``A_1 | ... | A_n -> B``."""
    imps = _premises(ps)
    _same([f.consequent for f in imps], "consequent")
    return _run(lambda b: _disj_to_common(b, _splice_all(b, ps)))


def cons_common_to_conj(ps: Sequence[Proof]) -> Proof:
    """From ``A -> B_i`` for all i, prove ``A -> B_1 & ... & B_n``."""
    imps = _premises(ps)
    _same([f.antecedent for f in imps], "antecedent")
    return _run(lambda b: _common_to_conj(b, _splice_all(b, ps)))


def cons_common_to_disj(ps: Sequence[Proof]) -> Proof:
    """From ``A -> B_i`` for all i, prove ``A -> B_1 | ... | B_n``.

    Only the first premise is needed; it is lifted through the injection
    of ``B_1``.  The others are still validated and spliced in.
    """
    imps = _premises(ps)
    _same([f.antecedent for f in imps], "antecedent")
    return _run(lambda b: _common_to_disj(b, _splice_all(b, ps)))


def idempotence_proof(connective: str, direction: str, a: Formula, n: int) -> Proof:
    """``a & ... & a -> a`` and friends.

    ``connective`` is ``"and"``/``"&"`` or ``"or"``/``"|"``; ``direction`` is
    ``"elim"`` (n-fold -> a) or ``"intro"`` (a -> n-fold).
    """
    _positive(n)
    conn = {"and": "and", "&": "and", "∧": "and", "or": "or", "|": "or", "∨": "or"}.get(connective)
    if conn is None or direction not in ("elim", "intro"):
        raise DerivationError(f"unknown idempotence form {connective!r}/{direction!r}")
    assemble = {
        ("and", "elim"): _conj_to_common,
        ("or", "elim"): _disj_to_common,
        ("and", "intro"): _common_to_conj,
        ("or", "intro"): _common_to_disj,
    }[conn, direction]

    def construct(b):
        ident = _identity(b, a)
        assemble(b, [ident] * n)

    return _run(construct)


def conj_implies_disj(fs: Sequence[Formula], method: str = "direct") -> Proof:
    """``A_1 & ... & A_n -> A_1 | ... | A_n``.

    ``method``:
      - ``"direct"``: project onto ``A_1`` then inject it.
      - ``"I"``: project onto every ``A_i``, combine with the disjunctive
        theorem, and precompose ``conj -> conj | ... | conj``.
      - ``"II"``: inject every ``A_i``, combine with the conjunctive theorem,
        and postcompose ``disj & ... & disj -> disj``.
    """
    fs = list(fs)
    if not fs:
        raise DerivationError("conj_implies_disj needs at least one formula")
    return _run(lambda b: _conj_implies_disj(b, fs, method))


def mixed_conj_to_disj(ps: Sequence[Proof], method: str = "I") -> Proof:
    """From ``A_i -> B_i`` prove ``A_1 & ... & A_n -> B_1 | ... | B_n``.

    ``"I"`` goes through ``B_1 & ... & B_n``; ``"II"`` goes through
    ``A_1 | ... | A_n``.
    """
    imps = _premises(ps)
    if method not in ("I", "II"):
        raise DerivationError(f"unknown method {method!r}; use 'I' or 'II'")

    def construct(b):
        idxs = _splice_all(b, ps)
        if len(idxs) == 1:
            return
        if method == "I":
            bs = [f.consequent for f in imps]
            _syll(b, _theorem_conj(b, idxs), _conj_implies_disj(b, bs, "direct"))
        else:
            as_ = [f.antecedent for f in imps]
            _syll(b, _conj_implies_disj(b, as_, "direct"), _theorem_disj(b, idxs))

    return _run(construct)


# ------------------------------------------------------- shape problems

_CONNECTIVES = {"and": "and", "&": "and", "∧": "and", "or": "or", "|": "or", "∨": "or"}


@dataclass
class ShapeProblem:
    """Goal ``A_1 o ... o A_p -> B_1 o' ... o' B_r`` with bridge proofs.

    ``bridges`` maps 1-based ``(i, j)`` to a proof of ``A_i -> B_j``.
    Connectives are ``"and"`` or ``"or"`` (``"&"``/``"|"`` accepted).
    """

    antecedents: Sequence[Formula]
    consequents: Sequence[Formula]
    antecedent_connective: str = "and"
    consequent_connective: str = "and"
    bridges: Mapping[tuple[int, int], Proof] = field(default_factory=dict)

    def goal(self) -> Formula:
        left = (conj_n if _conn(self.antecedent_connective) == "and" else disj_n)(self.antecedents)
        right = (conj_n if _conn(self.consequent_connective) == "and" else disj_n)(self.consequents)
        return Impl(left, right)


@dataclass(frozen=True)
class ShapeFailure:
    """Why :func:`shape_prover` could not assemble a proof."""

    condition: str
    missing: tuple[tuple[int, int], ...]
    message: str

    def __bool__(self):
        return False

    def __str__(self):
        return self.message


def _conn(c: str) -> str:
    try:
        return _CONNECTIVES[c]
    except KeyError:
        raise DerivationError(f"unknown connective {c!r}") from None


def _validate_shape(problem: ShapeProblem) -> None:
    p, r = len(problem.antecedents), len(problem.consequents)
    if p == 0 or r == 0:
        raise DerivationError("shape problem needs nonempty antecedents and consequents")
    _conn(problem.antecedent_connective)
    _conn(problem.consequent_connective)
    for (i, j), proof in problem.bridges.items():
        if not (1 <= i <= p and 1 <= j <= r):
            raise DerivationError(f"bridge ({i},{j}) out of range")
        concl = _implication(proof, f"bridge ({i},{j})")
        expected = Impl(problem.antecedents[i - 1], problem.consequents[j - 1])
        if concl != expected:
            raise DerivationError(f"bridge ({i},{j}) proves {concl}, expected {expected}")


def _first_i_for(problem, j):
    return next((i for i in range(1, len(problem.antecedents) + 1) if (i, j) in problem.bridges), None)


def _first_j_for(problem, i):
    return next((j for j in range(1, len(problem.consequents) + 1) if (i, j) in problem.bridges), None)


def _every_consequent(problem):
    """The ∀j ∃i condition: smallest i per j, or the j's lacking one."""
    r = len(problem.consequents)
    chosen = {j: _first_i_for(problem, j) for j in range(1, r + 1)}
    missing = [j for j, i in chosen.items() if i is None]
    return chosen, missing


def _every_antecedent(problem):
    p = len(problem.antecedents)
    chosen = {i: _first_j_for(problem, i) for i in range(1, p + 1)}
    missing = [i for i, j in chosen.items() if j is None]
    return chosen, missing


def shape_prover(problem: ShapeProblem) -> Union[Proof, ShapeFailure]:
    """Assemble a proof of ``problem.goal()`` from pairwise bridges.

    - ``and -> and``: needs a bridge into every consequent.
    - ``and -> or``: a bridge into every consequent, or else a bridge out of
      every antecedent.
    - ``or -> or``: needs a bridge out of every antecedent.
    - ``or -> and``: needs every bridge.

    Among several bridges the one with the smallest index is used.  When
    the condition fails a :class:`ShapeFailure` is returned.
    """
    _validate_shape(problem)
    ant, cons = _conn(problem.antecedent_connective), _conn(problem.consequent_connective)
    As, Bs = list(problem.antecedents), list(problem.consequents)
    p, r = len(As), len(Bs)
    bridges = problem.bridges

    if ant == "and":
        by_j, missing_j = _every_consequent(problem)
        if not missing_j:
            def construct(b):
                # conj(A) -> B_j through the chosen A_i, for every j
                per_j = [
                    _syll(b, _projection(b, As, by_j[j]), b.splice(bridges[by_j[j], j]))
                    if p > 1 else b.splice(bridges[1, j])
                    for j in range(1, r + 1)
                ]
                (_common_to_conj if cons == "and" else _common_to_disj)(b, per_j)

            return _run(construct)
        if cons == "and":
            return ShapeFailure(
                "forall j exists i0",
                tuple((i, j) for j in missing_j for i in range(1, p + 1)),
                "; ".join(f"no bridge for consequent j={j}" for j in missing_j),
            )
        by_i, missing_i = _every_antecedent(problem)
        if not missing_i:
            def construct(b):
                # A_i -> disj(B) through the chosen B_j, then 1° over i
                per_i = [_lift_into_disj(b, bridges[i, by_i[i]], Bs, by_i[i]) for i in range(1, p + 1)]
                _conj_to_common(b, per_i)

            return _run(construct)
        return ShapeFailure(
            "forall j exists i0, or forall i exists j0",
            tuple((i, j) for i in missing_i for j in range(1, r + 1)),
            "; ".join(
                [f"no bridge for consequent j={j}" for j in missing_j]
                + [f"no bridge for antecedent i={i}" for i in missing_i]
            ),
        )

    if cons == "or":
        by_i, missing_i = _every_antecedent(problem)
        if missing_i:
            return ShapeFailure(
                "forall i exists j0",
                tuple((i, j) for i in missing_i for j in range(1, r + 1)),
                "; ".join(f"no bridge for antecedent i={i}" for i in missing_i),
            )

        def construct(b):
            per_i = [_lift_into_disj(b, bridges[i, by_i[i]], Bs, by_i[i]) for i in range(1, p + 1)]
            _cases(b, per_i)

        return _run(construct)

    absent = tuple((i, j) for i in range(1, p + 1) for j in range(1, r + 1) if (i, j) not in bridges)
    if absent:
        return ShapeFailure(
            "forall i forall j",
            absent,
            "; ".join(f"no bridge for antecedent i={i}, consequent j={j}" for i, j in absent),
        )

    def construct(b):
        per_i = [
            _common_to_conj(b, [b.splice(bridges[i, j]) for j in range(1, r + 1)])
            for i in range(1, p + 1)
        ]
        _cases(b, per_i)

    return _run(construct)


def _lift_into_disj(b: ProofBuilder, bridge: Proof, Bs, j) -> int:
    k = b.splice(bridge)
    if len(Bs) == 1:
        return k
    return _syll(b, k, _injection(b, Bs, j))


# -------------------------------------------------------------- examples

_A, _B, _C = Var("A"), Var("B"), Var("C")


def example_i_via_theorem1() -> Proof:
    """``A -> (A | B) & (B -> A)`` through the conjunctive theorem: it gives
    ``A & A -> ...``, which is precomposed with ``A -> A & A``."""
    def construct(b):
        i = b.axiom("III.a", A=_A, B=_B)
        j = b.axiom("I.a", A=_A, B=_B)
        both = _theorem_conj(b, [i, j])
        ident = _identity(b, _A)
        dup = _common_to_conj(b, [ident, ident])
        _syll(b, dup, both)

    return _run(construct)


def example_gallery() -> dict[str, Proof]:
    """Proofs of the three worked examples; (iii) both ways."""
    return {
        # A -> (A | B) & (B -> A), from III.a and I.a
        "i": cons_common_to_conj([axiom_proof("III.a", {"A": _A, "B": _B}), axiom_proof("I.a", {"A": _A, "B": _B})]),
        # (A & B) | C -> (A | B) | C
        "ii": theorem_disj([conj_implies_disj([_A, _B]), identity(_C)]),
        # A & C -> A | C from A & C -> A and A & C -> C
        "iii-M1": cons_common_to_disj([axiom_proof("II.a", {"A": _A, "B": _C}), axiom_proof("II.b", {"A": _A, "B": _C})]),
        # A & C -> A | C from A -> A | C and C -> A | C
        "iii-M2": cons_conj_to_common([axiom_proof("III.a", {"A": _A, "B": _C}), axiom_proof("III.b", {"A": _A, "B": _C})]),
    }


def converse_failures() -> list[tuple[Proof, Formula]]:
    """Derivable formulas whose would-be factor is not a tautology.

    ``A & B -> A & A`` is derivable but ``B -> A`` is not valid; likewise
    ``A | A -> A | B`` against ``A -> B``.
    """
    def conj_case(b):
        head = b.axiom("II.a", A=_A, B=_B)
        ident = _identity(b, _A)
        _syll(b, head, _common_to_conj(b, [ident, ident]))

    def disj_case(b):
        _syll(b, _lemma(b, _A, 2), b.axiom("III.a", A=_A, B=_B))

    return [
        (_run(conj_case), Impl(_B, _A)),
        (_run(disj_case), Impl(_A, _B)),
    ]
