import pytest
from hypothesis import given, settings, strategies as st

from deducible import derived
from deducible.derived import DerivationError, axiom_proof
from deducible.formula import And, Impl, Or, Var, conj_n, disj_n, parse
from deducible.kernel import AxiomInstance, AxiomSchema, ModusPonens, Proof, check
from deducible.semantics import is_tautology

from strategies import brute_tautology

A, B, C = Var("A"), Var("B"), Var("C")


def V(name, k=None):
    return Var(name if k is None else f"{name}{k}")


def valid(p, expected=None):
    assert isinstance(p, Proof)
    result = check(p)
    assert result, result.message
    if expected is not None:
        assert p.conclusion == expected
    assert is_tautology(p.conclusion)
    return p


# bridge proofs Ai -> Bi of a few different kinds
def bridge(kind, a, b):
    """Proof of a -> <something built from a and b>, and that consequent."""
    if kind == "identity":
        return derived.identity(a)
    if kind == "weaken":
        return axiom_proof("I.a", {"A": a, "B": b})
    if kind == "inl":
        return axiom_proof("III.a", {"A": a, "B": b})
    if kind == "inr":
        return axiom_proof("III.b", {"A": b, "B": a})
    if kind == "fst":
        return axiom_proof("II.a", {"A": a, "B": b})
    raise ValueError(kind)


KINDS = ["identity", "weaken", "inl", "inr", "fst"]


def bridges(n, kinds, pool=5):
    """n bridge proofs over variables X_k, Y_k with k cycling through
    ``pool`` values, so at most 2 * pool variables occur."""
    out = []
    for i in range(n):
        kind = kinds[i % len(kinds)]
        out.append(bridge(kind, V("X", i % pool), V("Y", i % pool)))
    return out


def parts(ps):
    return [p.conclusion.antecedent for p in ps], [p.conclusion.consequent for p in ps]


# ---------------------------------------------------------- identity

def test_identity_five_steps():
    p = valid(derived.identity(A), Impl(A, A))
    assert len(p) == 5
    assert [type(s) for s in p.steps] == [AxiomInstance, AxiomInstance, ModusPonens, AxiomInstance, ModusPonens]
    assert p.steps[0].binding_map() == {"A": A, "B": Impl(A, A), "C": A}
    assert p.steps[1].binding_map() == {"A": A, "B": Impl(A, A)}
    assert p.steps[3].binding_map() == {"A": A, "B": A}


def test_identity_compound():
    valid(derived.identity(parse("B | B")), parse("B | B -> B | B"))
    assert brute_tautology(derived.identity(parse("A & C")).conclusion)


# --------------------------------------------------------- syllogism

def test_syllogism_first_theorem_step():
    A1, A2, B1 = V("A", 1), V("A", 2), V("B", 1)
    p1 = axiom_proof("II.a", {"A": A1, "B": A2})
    p2 = axiom_proof("I.a", {"A": A1, "B": B1})  # A1 -> (B1 -> A1), a stand-in hypothesis
    got = valid(derived.syllogism(p1, p2), Impl(And(A1, A2), Impl(B1, A1)))
    assert len(got) == len(p1) + len(p2) + 5


def test_syllogism_with_hypothesis_proof():
    # A1 -> B1 proved for B1 := A1 | C
    A1, A2 = V("A", 1), V("A", 2)
    b1 = Or(A1, C)
    hyp = axiom_proof("III.a", {"A": A1, "B": C})
    got = derived.syllogism(axiom_proof("II.a", {"A": A1, "B": A2}), hyp)
    valid(got, Impl(And(A1, A2), b1))


def test_syllogism_identity_identity():
    valid(derived.syllogism(derived.identity(A), derived.identity(A)), Impl(A, A))


def test_syllogism_tail_uses_only_ia_ib():
    p = derived.syllogism(derived.identity(A), axiom_proof("III.a"))
    tail = p.steps[5 + 1:]
    kinds = [(type(s).__name__, getattr(s, "schema", None)) for s in tail]
    assert kinds == [
        ("AxiomInstance", AxiomSchema.I_a), ("ModusPonens", None),
        ("AxiomInstance", AxiomSchema.I_b), ("ModusPonens", None), ("ModusPonens", None),
    ]


def test_syllogism_middle_mismatch():
    b1, b2 = V("B", 1), V("B", 2)
    with pytest.raises(DerivationError, match="middle"):
        derived.syllogism(axiom_proof("III.a", {"A": b1, "B": b2}), derived.identity(b1))


def test_syllogism_rejects_unchecked_input():
    bad = Proof((AxiomInstance(AxiomSchema.I_a, (), Impl(A, A)),), Impl(A, A))
    with pytest.raises(DerivationError, match="does not check"):
        derived.syllogism(bad, derived.identity(A))
    with pytest.raises(DerivationError, match="not a Proof"):
        derived.syllogism(derived.identity(A), "nope")


# ------------------------------------------------------ Theorem 1, 2

def test_theorem_conj_n1_returns_premise():
    p = derived.identity(A)
    assert derived.theorem_conj([p]) == p
    assert derived.theorem_disj([p]) == p


def test_theorem_conj_n2_identities():
    valid(derived.theorem_conj([derived.identity(A), derived.identity(B)]), parse("A & B -> A & B"))


def test_theorem_conj_n2_uses_the_ii_c_instance():
    A1, A2, B1, B2 = V("A", 1), V("A", 2), V("B", 1), V("B", 2)
    p1 = axiom_proof("III.a", {"A": A1, "B": B1})   # A1 -> A1 | B1
    p2 = axiom_proof("III.a", {"A": A2, "B": B2})
    p = valid(derived.theorem_conj([p1, p2]), Impl(And(A1, A2), And(Or(A1, B1), Or(A2, B2))))
    lhs = And(A1, A2)
    eq1 = Impl(Impl(lhs, Or(A1, B1)), Impl(Impl(lhs, Or(A2, B2)), Impl(lhs, And(Or(A1, B1), Or(A2, B2)))))
    assert any(isinstance(s, AxiomInstance) and s.schema is AxiomSchema.II_c and s.formula == eq1 for s in p.steps)
    # the last two steps are the two applications of modus ponens
    assert all(isinstance(s, ModusPonens) for s in p.steps[-2:])


def test_theorem_conj_n3_shape_and_instantiated_soundness():
    ps = [axiom_proof("II.a", {"A": V("A", i), "B": V("C", i)}) for i in (1, 2, 3)]
    As = [And(V("A", i), V("C", i)) for i in (1, 2, 3)]
    Bs = [V("A", i) for i in (1, 2, 3)]
    p = valid(derived.theorem_conj(ps), Impl(conj_n(As), conj_n(Bs)))
    assert p.conclusion == Impl(And(And(As[0], As[1]), As[2]), And(And(Bs[0], Bs[1]), Bs[2]))
    assert brute_tautology(p.conclusion)


def test_theorem_disj_n2():
    A1, A2, B1, B2 = V("A", 1), V("A", 2), V("B", 1), V("B", 2)
    p1 = axiom_proof("II.a", {"A": B1, "B": A1})   # B1 & A1 -> B1
    p2 = axiom_proof("II.b", {"A": A2, "B": B2})   # A2 & B2 -> B2
    p = valid(derived.theorem_disj([p1, p2]))
    assert p.conclusion == Impl(Or(And(B1, A1), And(A2, B2)), Or(B1, B2))
    eq2 = Impl(Impl(And(B1, A1), Or(B1, B2)), Impl(Impl(And(A2, B2), Or(B1, B2)), Impl(Or(And(B1, A1), And(A2, B2)), Or(B1, B2))))
    assert any(s.formula == eq2 and isinstance(s, AxiomInstance) and s.schema is AxiomSchema.III_c for s in p.steps)


def test_theorem_disj_identities():
    valid(derived.theorem_disj([derived.identity(A), derived.identity(B)]), parse("A | B -> A | B"))


def test_theorem_disj_n4_mixed():
    ps = bridges(4, KINDS)
    As, Bs = parts(ps)
    valid(derived.theorem_disj(ps), Impl(disj_n(As), disj_n(Bs)))


@pytest.mark.parametrize("fn", [derived.theorem_conj, derived.theorem_disj])
def test_theorem_errors(fn):
    with pytest.raises(DerivationError):
        fn([])
    with pytest.raises(DerivationError, match="implication"):
        fn([derived.conj_implies_disj([A]), derived.lemma_idem_disj(A, 1), Proof.of(_conj_theorem())])


def _conj_theorem():
    b = derived.ProofBuilder()
    t = derived._identity(b, A)
    tt = derived._identity(b, Impl(A, A))
    s = b.axiom("II.c", A=Impl(A, A), B=Impl(A, A), C=Impl(A, A))
    b.mp(t, b.mp(tt, b.mp(tt, s)))
    return b.steps


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 16), st.lists(st.sampled_from(KINDS), min_size=1, max_size=5))
def test_theorems_random_bridges(n, kinds):
    ps = bridges(n, kinds)
    As, Bs = parts(ps)
    valid(derived.theorem_conj(ps), Impl(conj_n(As), conj_n(Bs)))
    valid(derived.theorem_disj(ps), Impl(disj_n(As), disj_n(Bs)))


def overhead(p, ps):
    return len(p) - sum(len(q) for q in ps)


@pytest.mark.parametrize("fn", [derived.theorem_conj, derived.theorem_disj])
def test_constant_increment(fn):
    ps = bridges(17, KINDS)
    sizes = [overhead(fn(ps[:n]), ps[:n]) for n in range(2, 18)]
    diffs = {b - a for a, b in zip(sizes, sizes[1:])}
    assert diffs == {15}
    assert sizes[0] == 15


# ------------------------------------------------------------ Lemma

def test_lemma_n1_is_identity():
    assert derived.lemma_idem_disj(B, 1) == derived.identity(B)


def test_lemma_n2():
    p = valid(derived.lemma_idem_disj(B, 2), parse("B | B -> B"))
    assert p.steps[5].schema is AxiomSchema.III_c
    assert p.steps[5].formula == parse("(B -> B) -> ((B -> B) -> (B | B -> B))")


def test_lemma_n5_compound():
    f = parse("A & C")
    valid(derived.lemma_idem_disj(f, 5), Impl(disj_n([f] * 5), f))


def test_lemma_growth():
    sizes = [len(derived.lemma_idem_disj(B, n)) for n in range(1, 17)]
    assert {b - a for a, b in zip(sizes, sizes[1:])} == {3}


def test_lemma_rejects_zero():
    with pytest.raises(DerivationError):
        derived.lemma_idem_disj(B, 0)


# ------------------------------------------- projection and injection

def test_projection_small_cases():
    A1, A2 = V("A", 1), V("A", 2)
    assert derived.projection([A1], 1) == derived.identity(A1)
    p = valid(derived.projection([A1, A2], 1), Impl(And(A1, A2), A1))
    assert len(p) == 1 and p.steps[0].schema is AxiomSchema.II_a


def test_projection_n4_i2():
    As = [V("A", i) for i in range(1, 5)]
    p = valid(derived.projection(As, 2), parse("A1 & A2 & A3 & A4 -> A2"))
    used = [s.schema for s in p.steps if isinstance(s, AxiomInstance) and s.schema.value.startswith("II")]
    assert used == [AxiomSchema.II_a, AxiomSchema.II_a, AxiomSchema.II_b]


def test_injection_small_cases():
    A1, A2 = V("A", 1), V("A", 2)
    assert derived.injection([A1], 1) == derived.identity(A1)
    p = valid(derived.injection([A1, A2], 2), Impl(A2, Or(A1, A2)))
    assert len(p) == 1 and p.steps[0].schema is AxiomSchema.III_b


def test_injection_n3_i1():
    As = [V("A", i) for i in range(1, 4)]
    p = valid(derived.injection(As, 1), parse("A1 -> A1 | A2 | A3"))
    used = [s.schema for s in p.steps if isinstance(s, AxiomInstance) and s.schema.value.startswith("III")]
    assert used == [AxiomSchema.III_a, AxiomSchema.III_a]


@pytest.mark.parametrize("fn", [derived.projection, derived.injection])
def test_index_errors(fn):
    with pytest.raises(DerivationError):
        fn([A, B], 0)
    with pytest.raises(DerivationError):
        fn([A, B], 3)
    with pytest.raises(DerivationError):
        fn([], 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 16), st.data())
def test_projection_injection_all_indices(n, data):
    As = [V("P", i) for i in range(1, n + 1)]
    i = data.draw(st.integers(1, n))
    valid(derived.projection(As, i), Impl(conj_n(As), As[i - 1]))
    valid(derived.injection(As, i), Impl(As[i - 1], disj_n(As)))


# ------------------------------------------------------ consequences

def test_cons1():
    p = derived.identity(B)
    assert derived.cons_conj_to_common([p]) == p
    valid(derived.cons_conj_to_common([p, p]), parse("B & B -> B"))
    As = [V("A", i) for i in (1, 2, 3)]
    # antecedents A1 & A2 & A3, A2 & A1 and A1; common consequent A1
    ps = [derived.projection(As, 1), axiom_proof("II.b", {"A": As[1], "B": As[0]}), derived.identity(As[0])]
    got = valid(derived.cons_conj_to_common(ps))
    assert got.conclusion == Impl(conj_n([q.conclusion.antecedent for q in ps]), As[0])


def test_cons2():
    p = derived.identity(B)
    assert derived.cons_disj_to_common([p]) == p
    ac = Or(A, C)
    valid(
        derived.cons_disj_to_common([axiom_proof("III.a", {"A": A, "B": C}), axiom_proof("III.b", {"A": A, "B": C})]),
        Impl(Or(A, C), ac),
    )
    valid(derived.cons_disj_to_common([p, p, p]), parse("B | B | B -> B"))


@pytest.mark.parametrize("fn", [derived.cons_conj_to_common, derived.cons_disj_to_common])
def test_common_consequent_required(fn):
    with pytest.raises(DerivationError, match="consequent"):
        fn([derived.identity(A), derived.identity(B)])


@pytest.mark.parametrize("fn", [derived.cons_common_to_conj, derived.cons_common_to_disj])
def test_common_antecedent_required(fn):
    with pytest.raises(DerivationError, match="antecedent"):
        fn([derived.identity(A), derived.identity(B)])


@pytest.mark.parametrize("conn, direction, n, text", [
    ("and", "elim", 1, "A -> A"),
    ("or", "elim", 3, "B | B | B -> B"),
    ("and", "intro", 3, "A -> A & A & A"),
    ("or", "intro", 4, "A -> A | A | A | A"),
    ("&", "elim", 4, "A & A & A & A -> A"),
    ("|", "intro", 1, "A -> A"),
])
def test_idempotence(conn, direction, n, text):
    f = parse(text)
    a = f.consequent if direction == "elim" else f.antecedent
    valid(derived.idempotence_proof(conn, direction, a, n), f)


def test_idempotence_errors():
    with pytest.raises(DerivationError):
        derived.idempotence_proof("and", "elim", A, 0)
    with pytest.raises(DerivationError):
        derived.idempotence_proof("xor", "elim", A, 2)
    with pytest.raises(DerivationError):
        derived.idempotence_proof("and", "sideways", A, 2)


def test_idempotence_n1_is_identity():
    assert derived.idempotence_proof("and", "elim", A, 1) == derived.identity(A)


def test_cons5():
    p = derived.identity(A)
    assert derived.cons_common_to_conj([p]) == p
    ps = [axiom_proof("III.a", {"A": A, "B": B}), axiom_proof("I.a", {"A": A, "B": B})]
    valid(derived.cons_common_to_conj(ps), parse("A -> (A | B) & (B -> A)"))
    valid(derived.cons_common_to_conj([p, p, p]), parse("A -> A & A & A"))


def test_cons6():
    p = derived.identity(A)
    assert derived.cons_common_to_disj([p]) == p
    ps = [axiom_proof("II.a", {"A": A, "B": C}), axiom_proof("II.b", {"A": A, "B": C})]
    valid(derived.cons_common_to_disj(ps), parse("A & C -> A | C"))
    ac = And(A, C)
    mixed = [axiom_proof("II.a", {"A": A, "B": C}), derived.identity(ac), axiom_proof("III.a", {"A": ac, "B": B})]
    valid(derived.cons_common_to_disj(mixed), Impl(ac, disj_n([A, ac, Or(ac, B)])))


@pytest.mark.parametrize("method", ["direct", "I", "II"])
def test_cons9_methods(method):
    assert derived.conj_implies_disj([A], method) == derived.identity(A)
    valid(derived.conj_implies_disj([A, C], method), parse("A & C -> A | C"))
    As = [V("A", i) for i in (1, 2, 3)]
    valid(derived.conj_implies_disj(As, method), parse("A1 & A2 & A3 -> A1 | A2 | A3"))


def test_cons9_errors():
    with pytest.raises(DerivationError):
        derived.conj_implies_disj([])
    with pytest.raises(DerivationError, match="method"):
        derived.conj_implies_disj([A, B], "III")


@pytest.mark.parametrize("method", ["I", "II"])
def test_cons10(method):
    p = derived.identity(A)
    assert derived.mixed_conj_to_disj([p], method) == p
    valid(derived.mixed_conj_to_disj([derived.identity(A), derived.identity(B)], method), parse("A & B -> A | B"))
    ps = bridges(3, ["inl", "fst", "weaken"])
    As, Bs = parts(ps)
    valid(derived.mixed_conj_to_disj(ps, method), Impl(conj_n(As), disj_n(Bs)))


def test_cons10_bad_method():
    with pytest.raises(DerivationError):
        derived.mixed_conj_to_disj([derived.identity(A)], "direct")


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 8))
def test_method_agreement(n):
    As = [V("A", i) for i in range(1, n + 1)]
    conclusions = {derived.conj_implies_disj(As, m).conclusion for m in ("direct", "I", "II")}
    assert conclusions == {Impl(conj_n(As), disj_n(As))}
    ps = bridges(n, KINDS)
    left, right = (derived.mixed_conj_to_disj(ps, m) for m in ("I", "II"))
    assert left.conclusion == right.conclusion
    valid(left)
    valid(right)


# ---------------------------------------------------------- remarks

def test_converse_failures():
    (conj_proof, conj_factor), (disj_proof, disj_factor) = derived.converse_failures()
    valid(conj_proof, parse("A & B -> A & A"))
    valid(disj_proof, parse("A | A -> A | B"))
    assert conj_factor == parse("B -> A")
    assert disj_factor == parse("A -> B")
    assert not brute_tautology(conj_factor)
    assert not brute_tautology(disj_factor)


# ---------------------------------------------------------- builder

def test_builder_refuses_bad_modus_ponens():
    b = derived.ProofBuilder()
    i = b.axiom("I.a")
    with pytest.raises(DerivationError):
        b.mp(i, i)


def test_splice_shifts_indices():
    b = derived.ProofBuilder()
    b.axiom("II.a")
    k = b.splice(derived.identity(A))
    assert k == 5
    valid(b.build(), Impl(A, A))
