import pytest

from coopkit.algebra import (
    DenseModel,
    Sampled,
    ScalarKind,
    boolean_hoop,
    check_sequent,
    godel_chain,
    in_class,
    lukasiewicz_chain,
    product,
    sample_assignments,
    supports_sequent,
)
from coopkit.exceptions import CoopkitError, ProofFormatError, ShapeError
from coopkit.kernel import (
    CORPUS,
    AxiomSchema,
    LogicId,
    Shape,
    apply_deduction,
    axiom,
    check_proof,
    corpus_entries,
    corpus_entry,
    dump_proof,
    extensions,
    load_proof,
    match_axiom,
    node_at,
    non_extensions,
    parse_proof,
    proof_size,
    rule,
    weaken,
)
from coopkit.kernel.checker import AXIOM_NOT_IN_LOGIC, BAD_AXIOM, LANGUAGE_VIOLATION, MULTISET_MISMATCH, SHAPE_MISMATCH
from coopkit.syntax import Var, parse_sequent

ENTRIES = corpus_entries()
ENTRY_IDS = [entry.name for entry in ENTRIES]

CANDIDATE_MODELS = [
    lukasiewicz_chain(3),
    lukasiewicz_chain(4),
    godel_chain(3),
    boolean_hoop(),
    product(boolean_hoop(), godel_chain(3)),
    DenseModel(ScalarKind.DYADIC, 1),
    DenseModel(ScalarKind.DYADIC),
    DenseModel(ScalarKind.RATIONAL, 1),
]


class TestLattice:
    def test_alu_reaches_every_logic(self):
        assert set(extensions(LogicId.ALu)) == set(LogicId)
        assert non_extensions(LogicId.ALu) == []

    def test_extensions_are_reflexive(self):
        for logic in LogicId:
            assert logic in extensions(logic)

    def test_coop_logics_do_not_reach_intuitionistic_ones(self):
        assert LogicId.ILu not in extensions(LogicId.CLu)
        assert LogicId.CLu in extensions(LogicId.LLu)

    def test_axioms_are_inherited(self):
        assert AxiomSchema.CWC in LogicId.CLc.axioms
        assert AxiomSchema.CON in LogicId.BL.axioms
        assert AxiomSchema.CON not in LogicId.CLc.axioms

    def test_unknown_logic(self):
        with pytest.raises(CoopkitError):
            LogicId.parse("XYZ")

    def test_parse_is_case_insensitive(self):
        assert LogicId.parse("clc") is LogicId.CLc


class TestAxiomMatching:
    @pytest.mark.parametrize("schema, text", [
        ("ASM", "Q, P |- P"),
        ("EFQ", "1 |- P"),
        ("DNE", "P^^ |- P"),
        ("CWC", "P * (P -o Q) |- Q * (Q -o P)"),
        ("CSD", "(P -o Q) -o Q |- (Q -o P) -o P"),
        ("CON", "P |- P * P"),
        ("HLB", "P/2 * P/2 |- P"),
        ("HUB", "P/2 -o P |- P/2"),
    ])
    def test_instances(self, schema, text):
        assert match_axiom(parse_sequent(text), schema)

    @pytest.mark.parametrize("schema, text", [
        ("ASM", "Q |- P"),
        ("CWC", "P * (Q -o P) |- Q * (Q -o P)"),
        ("CON", "P |- P * Q"),
        ("HUB", "P -o P/2 |- P/2"),
    ])
    def test_non_instances(self, schema, text):
        assert not match_axiom(parse_sequent(text), schema)


class TestChecker:
    def test_root_failure_reported_at_empty_path(self):
        bad = axiom("ASM", parse_sequent("Q |- P"))
        report = check_proof(bad, LogicId.ALu)
        assert not report.ok
        assert report.first_failure.path == ""
        assert report.first_failure.reason == BAD_AXIOM

    def test_axiom_outside_logic(self):
        report = check_proof(CORPUS["contraction-leaf"].proof(), LogicId.CLu)
        assert report.first_failure.reason == AXIOM_NOT_IN_LOGIC

    def test_language_violation(self):
        report = check_proof(CORPUS["a5"].proof(), LogicId.LLc)
        assert LANGUAGE_VIOLATION in {f.reason for f in report.failures}

    def test_multiset_mismatch_in_premise(self):
        proof = rule("ImpE", parse_sequent("P, P, P -o Q |- Q"),
                     axiom("ASM", parse_sequent("P |- P")),
                     axiom("ASM", parse_sequent("P -o Q |- P -o Q")))
        report = check_proof(proof, LogicId.ALu)
        assert report.first_failure.reason == MULTISET_MISMATCH

    def test_shape_mismatch(self):
        proof = rule("ImpI", parse_sequent("|- P -o Q"), axiom("ASM", parse_sequent("P |- P")))
        assert check_proof(proof, "ALu").first_failure.reason == SHAPE_MISMATCH

    def test_failures_in_preorder(self):
        proof = rule("ImpE", parse_sequent("P, P -o Q |- Q"),
                     axiom("ASM", parse_sequent("R |- P")),
                     axiom("ASM", parse_sequent("S |- P -o Q")))
        report = check_proof(proof, LogicId.ALu)
        assert [f.path for f in report.failures] == ["", "0", "1"]

    def test_node_at(self):
        proof = CORPUS["transitivity"].proof()
        assert node_at(proof, "0.1").conclusion == parse_sequent("Q -o R |- Q -o R")
        with pytest.raises(ProofFormatError):
            node_at(proof, "0.5")


class TestCorpus:
    def test_corpus_is_large_enough(self):
        assert len(ENTRIES) >= 12
        assert {"a1", "a2", "a5", "a6", "cwc"} <= set(CORPUS)

    @pytest.mark.parametrize("entry", ENTRIES, ids=ENTRY_IDS)
    def test_checks_in_designated_logic_and_every_extension(self, entry):
        proof = entry.proof()
        for logic in extensions(entry.logic):
            report = check_proof(proof, logic)
            assert report.ok, f"{entry.name} in {logic.value}: {report.failures}"

    @pytest.mark.parametrize("entry", [e for e in ENTRIES if non_extensions(e.logic)], ids=lambda e: e.name)
    def test_fails_in_some_non_extension(self, entry):
        proof = entry.proof()
        assert any(not check_proof(proof, logic).ok for logic in non_extensions(entry.logic))

    @pytest.mark.parametrize("entry", ENTRIES, ids=ENTRY_IDS)
    def test_golden_file_matches_built_tree(self, entry):
        assert load_proof(entry.path) == entry.proof()

    @pytest.mark.parametrize("entry", ENTRIES, ids=ENTRY_IDS)
    def test_dump_then_parse(self, entry):
        proof = entry.proof()
        assert parse_proof(dump_proof(proof)) == proof

    def test_unknown_entry(self):
        with pytest.raises(CoopkitError):
            corpus_entry("nope")


class TestSoundness:
    @staticmethod
    def _models(entry):
        s = entry.proof().conclusion
        algebra_class = entry.logic.model_class
        return [
            m for m in CANDIDATE_MODELS
            if supports_sequent(m, s) and in_class(m, algebra_class, None if m.is_finite else Sampled(count=200))
        ]

    @pytest.mark.parametrize("entry", ENTRIES, ids=ENTRY_IDS)
    def test_conclusion_holds_in_class_models(self, entry):
        s = entry.proof().conclusion
        models = self._models(entry)
        assert models, f"no test model for {entry.logic.value}"
        names = s.variables()
        for model in models:
            if model.is_finite:
                points = [dict(zip(names, xs)) for xs in model.tuples(len(names))]
            else:
                points = sample_assignments(names, model, 1000, seed=7)
            for assignment in points:
                assert check_sequent(s, assignment, model), f"{entry.name} fails in {model.name} at {assignment}"


class TestTransforms:
    @pytest.mark.parametrize("entry", ENTRIES, ids=ENTRY_IDS)
    def test_weakening_preserves_checking(self, entry):
        weakened = weaken(entry.proof(), Var("Z"))
        assert weakened.conclusion.multiset[Var("Z")] == 1
        assert check_proof(weakened, entry.logic).ok

    @pytest.mark.parametrize("target", list(Shape))
    def test_deduction_shapes_check(self, target):
        proof = apply_deduction(CORPUS["deduction-uncurried"].proof(), target)
        assert check_proof(proof, LogicId.ALu).ok

    def test_round_trip_through_curried(self):
        original = CORPUS["deduction-uncurried"].proof()
        curried = apply_deduction(original, Shape.CURRIED)
        assert str(curried.conclusion) == "|- P -o Q -o P"
        back = apply_deduction(curried, Shape.UNCURRIED)
        assert back.conclusion == original.conclusion

    def test_round_trip_through_conj_form(self):
        original = CORPUS["deduction-uncurried"].proof()
        folded = apply_deduction(original, Shape.CONJ_FORM)
        assert str(folded.conclusion) == "|- P * Q -o P"
        back = apply_deduction(folded, Shape.UNCURRIED)
        assert back.conclusion == original.conclusion
        assert check_proof(back, LogicId.ALu).ok

    def test_partial_uncurrying(self):
        proof = apply_deduction(CORPUS["a2"].proof(), Shape.UNCURRIED, arity=1)
        assert str(proof.conclusion) == "P -o Q |- (Q -o R) -o P -o R"
        assert check_proof(proof, LogicId.ALu).ok

    def test_uncurry_needs_an_implication(self):
        with pytest.raises(ShapeError):
            apply_deduction(axiom("ASM", parse_sequent("|- P")), Shape.UNCURRIED)

    @pytest.mark.parametrize("entry", ENTRIES, ids=ENTRY_IDS)
    def test_weakening_keeps_tree_size(self, entry):
        assert proof_size(weaken(entry.proof(), Var("Z"))) == proof_size(entry.proof())
