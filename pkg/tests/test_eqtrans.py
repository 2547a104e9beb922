import dataclasses

import pytest
from hypothesis import given

from coopkit.algebra import DenseModel, ScalarKind, godel_chain, lukasiewicz_chain, sample_assignments
from coopkit.eqtrans import (
    EQUATIONS,
    REARRANGE,
    ZERO_TERM,
    Arrow,
    Atom,
    ChainBuilder,
    Direction,
    EqChain,
    EqStep,
    Sum,
    ac_equal,
    ac_normalize,
    apply_step,
    atoms,
    chain_length_bound,
    chain_verdict,
    dump_chain,
    eval_term,
    formula_to_term,
    load_chain,
    parse_term,
    render_term,
    sequent_term,
    translate_proof,
    verify_chain,
)
from coopkit.exceptions import ChainFormatError, TranslationError, UnsupportedAxiom, UnsupportedConnective
from coopkit.kernel import AxiomSchema, axiom, axioms_used, corpus_entries, corpus_entry, rule
from coopkit.syntax import parse_formula, parse_sequent

from .conftest import formulas

TRANSLATABLE = [e for e in corpus_entries() if set(axioms_used(e.proof())) <= {AxiomSchema.ASM, AxiomSchema.CWC}]
UNTRANSLATABLE = [e for e in corpus_entries() if e not in TRANSLATABLE]

HOOPS = [lukasiewicz_chain(3), godel_chain(3), DenseModel(ScalarKind.DYADIC, 1), DenseModel(ScalarKind.DYADIC)]

A, B, C = Atom("A"), Atom("B"), Atom("C")


def chain_terms(chain: EqChain):
    return [chain.start] + [step.target for step in chain.steps]


class TestTerms:
    @pytest.mark.parametrize(
        "text, term",
        [
            ("0", ZERO_TERM),
            ("A + B", Sum((A, B))),
            ("A -> B -> C", Arrow(A, Arrow(B, C))),
            ("(A -> B) -> C", Arrow(Arrow(A, B), C)),
            ("A + B -> C", Arrow(Sum((A, B)), C)),
        ],
    )
    def test_parse(self, text, term):
        assert parse_term(text) == term

    @pytest.mark.parametrize("text", ["A +", "A -> ", "(A", "A $ B", "A B"])
    def test_parse_errors(self, text):
        with pytest.raises(ChainFormatError):
            parse_term(text)

    @given(formulas(with_one=False, with_half=False))
    def test_render_parse(self, f):
        t = formula_to_term(f)
        assert parse_term(render_term(t)) == t

    def test_ac_normalize_flattens_and_sorts(self):
        assert ac_normalize(parse_term("B + (0 + A)")) == Sum((A, B))
        assert ac_normalize(parse_term("(C + B) + A -> 0 + B")) == Arrow(Sum((A, B, C)), B)
        assert ac_equal(parse_term("A + (B + C)"), parse_term("(C + A) + B"))
        assert not ac_equal(parse_term("A -> B"), parse_term("B -> A"))

    def test_atoms(self):
        assert sorted(set(atoms(parse_term("(A -> B) + A -> C")))) == ["A", "B", "C"]

    def test_sequent_term(self):
        assert sequent_term(parse_sequent("|- A -o B")) == Arrow(A, B)
        assert ac_equal(sequent_term(parse_sequent("B, A |- C")), Arrow(Sum((A, B)), C))

    def test_one_has_no_term(self):
        with pytest.raises(UnsupportedConnective):
            formula_to_term(parse_formula("A -o 1"))


class TestEquations:
    def test_equations_hold_in_hoops(self):
        for model in HOOPS:
            for equation in EQUATIONS.values():
                names = equation.variables
                for assignment in sample_assignments(names, model, 100, seed=2):
                    assert eval_term(equation.left, assignment, model) == eval_term(equation.right, assignment, model)

    def test_rewrite_inside_a_sum(self):
        step = EqStep(parse_term("A + (B -> B)"), A, "Eq1", (), Direction.L2R, {"x": B})
        assert ac_equal(apply_step(step), A)

    def test_zero_read_right_to_left_adds_a_summand(self):
        step = EqStep(A, parse_term("A + (B -> B)"), "Eq1", (), Direction.R2L, {"x": B})
        assert ac_equal(apply_step(step), parse_term("A + (B -> B)"))

    def test_missing_substitution(self):
        step = EqStep(parse_term("A -> A"), ZERO_TERM, "Eq1", (), Direction.L2R, {})
        with pytest.raises(ChainFormatError):
            apply_step(step)


class TestTranslation:
    @pytest.mark.parametrize("entry", TRANSLATABLE, ids=lambda e: e.name)
    def test_corpus_chain_verifies(self, entry):
        proof = entry.proof()
        chain = translate_proof(proof)
        verdict = chain_verdict(chain)
        assert verdict.ok, verdict
        assert chain.start == sequent_term(proof.conclusion)
        assert len(chain) <= chain_length_bound(proof)

    @pytest.mark.parametrize("entry", TRANSLATABLE, ids=lambda e: e.name)
    def test_every_term_of_the_chain_is_zero_in_hoops(self, entry):
        chain = translate_proof(entry.proof())
        names = sorted(set(atoms(chain.start)))
        for model in HOOPS:
            for assignment in sample_assignments(names, model, 100, seed=4):
                values = {eval_term(t, assignment, model) for t in chain_terms(chain)}
                assert values == {model.zero}, model.name

    @pytest.mark.parametrize("entry", UNTRANSLATABLE, ids=lambda e: e.name)
    def test_other_axioms_are_refused(self, entry):
        with pytest.raises(UnsupportedAxiom):
            translate_proof(entry.proof())

    def test_assumption_with_context(self):
        chain = translate_proof(axiom("ASM", parse_sequent("B, A |- A")))
        assert len(chain) == 3
        assert verify_chain(chain)

    def test_identity(self):
        proof = rule("ImpI", parse_sequent("|- P -o P"), axiom("ASM", parse_sequent("P |- P")))
        chain = translate_proof(proof)
        assert len(chain) == 1
        assert chain.steps[0].justification == "Eq1"

    def test_contextless_cwc(self):
        chain = translate_proof(axiom("CWC", parse_sequent("A * (A -o B) |- B * (B -o A)")))
        assert [s.justification for s in chain.steps] == ["Eq5", "Eq4", "Eq1", "Eq2"]
        assert verify_chain(chain)

    def test_conclusion_is_recorded(self):
        entry = corpus_entry("modus-ponens")
        assert translate_proof(entry.proof()).conclusion == str(entry.proof().conclusion)

    def test_builder_refuses_a_restated_node_that_does_not_match(self):
        builder = ChainBuilder(parse_term("A -> A"))
        with pytest.raises(TranslationError):
            builder.rewrite("Eq1", Direction.L2R, {"x": A}, node=B)
        assert builder.steps == []

    def test_builder_refuses_a_false_rearrangement(self):
        builder = ChainBuilder(parse_term("A -> B"))
        with pytest.raises(TranslationError):
            builder.rearrange(parse_term("B -> A"))

    def test_builder_refuses_a_reversed_chain_ending_below_the_root(self):
        step = EqStep(parse_term("B + (A -> A)"), B, "Eq1", (1,), Direction.L2R, {"x": A})
        builder = ChainBuilder(C)
        with pytest.raises(TranslationError):
            builder.insert(EqChain(step.source, [step]), ())


class TestChainVerification:
    @pytest.fixture
    def chain(self):
        return translate_proof(corpus_entry("transitivity").proof())

    def test_wrong_justification_is_rejected(self, chain):
        index = next(i for i, s in enumerate(chain.steps) if s.justification == "Eq1")
        steps = list(chain.steps)
        steps[index] = dataclasses.replace(steps[index], justification="Eq3")
        verdict = chain_verdict(EqChain(chain.start, steps))
        assert not verdict.ok
        assert verdict.failed_step == index

    def test_wrong_target_is_rejected(self, chain):
        steps = list(chain.steps)
        steps[0] = dataclasses.replace(steps[0], target=Atom("Q"))
        verdict = chain_verdict(EqChain(chain.start, steps))
        assert verdict.failed_step == 0
        assert verdict.reason == "result does not match the stated term" or "AC" in verdict.reason

    def test_broken_link_is_rejected(self, chain):
        steps = list(chain.steps)
        steps[1] = dataclasses.replace(steps[1], source=A)
        verdict = chain_verdict(EqChain(chain.start, steps))
        assert verdict.failed_step == 1
        assert verdict.reason == "step does not start where the previous one ended"

    def test_chain_must_reach_zero(self, chain):
        truncated = EqChain(chain.start, chain.steps[:-1])
        verdict = chain_verdict(truncated)
        assert not verdict.ok
        assert verdict.failed_step == len(truncated.steps)

    def test_rearrangement_needs_ac_equality(self):
        good = EqStep(parse_term("A + B"), parse_term("B + A"), REARRANGE)
        bad = EqStep(parse_term("A -> B"), parse_term("B -> A"), REARRANGE)
        assert chain_verdict(EqChain(good.source, [good])).reason == "chain does not end at 0"
        assert chain_verdict(EqChain(bad.source, [bad])).reason == "terms are not AC-equal"

    def test_unknown_justification(self):
        step = EqStep(parse_term("A -> A"), ZERO_TERM, "Eq9", (), Direction.L2R, {"x": A})
        assert chain_verdict(EqChain(step.source, [step])).reason == "unknown justification 'Eq9'"

    def test_file_round_trip(self, chain):
        restored = load_chain(dump_chain(chain))
        assert chain_terms(restored) == chain_terms(chain)
        assert restored.conclusion == chain.conclusion
        assert verify_chain(restored)

    def test_malformed_file(self):
        with pytest.raises(ChainFormatError):
            load_chain('{"steps": []}')
        with pytest.raises(ChainFormatError):
            load_chain('{"start": "A -> A", "steps": [{"term": "0", "justification": "Eq1", "direction": "up"}]}')
