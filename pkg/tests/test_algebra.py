import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coopkit.algebra import (
    LAWS,
    AlgebraClass,
    DenseModel,
    Dyadic,
    Exhaustive,
    FiniteAlgebra,
    Poset,
    Sampled,
    ScalarKind,
    boolean_hoop,
    canonical_form,
    check_halving_properties,
    check_laws,
    check_sequent,
    dump_algebra,
    dyadic_scale,
    embed_poset,
    embedding_indices,
    enumerate_algebras,
    eval_formula,
    find_model,
    godel_chain,
    in_class,
    is_semi_cancellative,
    load_algebra,
    lukasiewicz_chain,
    multiple,
    ordinal_sum,
    parse_algebra,
    parse_algebra_class,
    product,
    search_countermodel,
    trivial_algebra,
    violates,
)
from coopkit.exceptions import BudgetExhausted, InvalidModelError, UnsupportedConnective
from coopkit.models.reports import LawStatus
from coopkit.syntax import parse_formula, parse_sequent

from .conftest import formulas

ALGEBRAS_DIR = Path(__file__).resolve().parents[1] / "corpus" / "algebras"

DENSE_MODELS = [
    DenseModel(ScalarKind.DYADIC, 1),
    DenseModel(ScalarKind.DYADIC),
    DenseModel(ScalarKind.RATIONAL, 1),
    DenseModel(ScalarKind.RATIONAL),
]
DENSE_LAWS = ["m1", "m2", "m3", "o1", "o2", "o3", "o4", "le", "r", "cwc", "h", "ann", "inv", "csd"]


class TestScalars:
    def test_dyadic_normalises(self):
        assert Dyadic(4, 3) == Dyadic(1, 1)
        assert Dyadic(0, 5).exponent == 0

    def test_dyadic_mixes_with_fractions(self):
        assert Dyadic(3, 2) + Fraction(1, 4) == 1
        assert Dyadic(1, 1).half() == Fraction(1, 4)

    def test_non_dyadic_rejected(self):
        with pytest.raises(InvalidModelError):
            Dyadic.of(Fraction(1, 3))

    @given(st.integers(min_value=0, max_value=64), st.integers(min_value=0, max_value=6))
    def test_to_fraction_round_trip(self, numerator, exponent):
        d = Dyadic(numerator, exponent)
        assert Dyadic.of(d.to_fraction()) == d


class TestDenseModels:
    @pytest.mark.parametrize("model", DENSE_MODELS, ids=lambda m: m.name)
    def test_law_suite_at_ten_thousand_samples(self, model):
        laws = [name for name in DENSE_LAWS if LAWS[name].applies_to(model)]
        report = check_laws(model, Sampled(count=10_000, seed=11), laws)
        assert report.failed_laws == []
        assert all(report.verdicts[name].checked == 10_000 for name in laws)

    def test_not_applicable_laws(self):
        report = check_laws(DenseModel(ScalarKind.DYADIC), Sampled(count=10), ["ann", "inv"])
        assert report.status("ann") is LawStatus.NOT_APPLICABLE

    def test_idempotence_fails_with_a_witness_that_reverifies(self):
        model = DenseModel(ScalarKind.DYADIC, 1)
        verdict = check_laws(model, Sampled(count=200), ["idem"]).verdicts["idem"]
        assert verdict.status is LawStatus.FAIL
        assert violates("idem", model, verdict.witness)

    def test_parse(self):
        assert DenseModel.parse("dyadic-capped:1") == DenseModel(ScalarKind.DYADIC, 1)
        assert DenseModel.parse("rational-unbounded") == DenseModel(ScalarKind.RATIONAL)
        with pytest.raises(InvalidModelError):
            DenseModel.parse("real-capped:1")

    def test_coerce_rejects_outside_carrier(self):
        with pytest.raises(InvalidModelError):
            DenseModel(ScalarKind.DYADIC, 1).coerce("3/2")
        with pytest.raises(InvalidModelError):
            DenseModel(ScalarKind.DYADIC).coerce("1/3")

    def test_one_needs_a_cap(self):
        with pytest.raises(UnsupportedConnective):
            eval_formula(parse_formula("1"), {}, DenseModel())

    @pytest.mark.parametrize("model", DENSE_MODELS[:2], ids=lambda m: m.name)
    def test_halving_theory(self, model):
        report = check_halving_properties(model, count=500, seed=3)
        assert report.ok, report.failed

    def test_semi_cancellative(self, dyadic_capped):
        assert is_semi_cancellative(dyadic_capped, samples=500)
        assert not is_semi_cancellative(godel_chain(3))

    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=3))
    def test_dyadic_scale_matches_multiplication(self, i, n):
        model = DenseModel(ScalarKind.DYADIC)
        x = Dyadic(3, 1)
        assert dyadic_scale(Dyadic(i, n), x, model) == Dyadic(i, n) * x

    def test_multiple(self):
        assert multiple(5, Dyadic(1, 2), DenseModel(ScalarKind.DYADIC, 1)) == 1


class TestFiniteAlgebras:
    @pytest.mark.parametrize("algebra, algebra_class", [
        (lukasiewicz_chain(4), AlgebraClass.INVOLUTIVE_HOOP),
        (godel_chain(4), AlgebraClass.BOUNDED_IDEMPOTENT_POCRIM),
        (godel_chain(3), AlgebraClass.BOUNDED_HOOP),
        (boolean_hoop(), AlgebraClass.INVOLUTIVE_IDEMPOTENT_POCRIM),
        (lukasiewicz_chain(3), AlgebraClass.WAJSBERG_HOOP),
        (product(boolean_hoop(), godel_chain(3)), AlgebraClass.BOUNDED_HOOP),
    ], ids=lambda v: getattr(v, "name", getattr(v, "value", None)))
    def test_standard_algebras_in_their_class(self, algebra, algebra_class):
        assert in_class(algebra, algebra_class, Exhaustive())

    def test_godel_chain_not_involutive(self):
        assert not in_class(godel_chain(3), AlgebraClass.INVOLUTIVE_POCRIM)

    def test_ordinal_sum_is_a_hoop(self):
        h = ordinal_sum(lukasiewicz_chain(3), boolean_hoop())
        assert isinstance(h, FiniteAlgebra)
        assert h.size == 4
        assert in_class(h, AlgebraClass.BOUNDED_HOOP)

    def test_evaluation(self, l3):
        half = l3.coerce("1/2")
        assert eval_formula(parse_formula("P * P"), {"P": half}, l3) == l3.one
        assert eval_formula(parse_formula("P -o 0"), {"P": half}, l3) == l3.zero

    def test_sequent_order(self, l3):
        s = parse_sequent("P |- P * P")
        assert check_sequent(s, {"P": 0}, l3)
        assert not check_sequent(s, {"P": l3.coerce("1/2")}, l3)

    def test_coerce_by_label_or_index(self, g3):
        assert g3.coerce("a") == 1
        assert g3.coerce("2") == 2
        with pytest.raises(InvalidModelError):
            g3.coerce("7")

    def test_rejects_bad_tables(self):
        with pytest.raises(InvalidModelError):
            FiniteAlgebra(2, [[0, 1]], [[0, 0], [0, 0]])

    def test_canonical_form_identifies_relabelings(self):
        l4 = lukasiewicz_chain(4)
        shuffled = l4.permuted([0, 2, 1, 3])
        assert canonical_form(shuffled).table_key() == canonical_form(l4).table_key()

    def test_find_model(self):
        assert find_model("L5").size == 5
        assert find_model("G3").name == "G3"
        assert find_model("dyadic-capped:1") == DenseModel(ScalarKind.DYADIC, 1)
        assert find_model("nonsense") is None


class TestAlgebraFiles:
    def test_shipped_files_load(self):
        l3 = load_algebra(ALGEBRAS_DIR / "L3.json")
        assert l3.table_key() == lukasiewicz_chain(3).table_key()
        g3 = load_algebra(ALGEBRAS_DIR / "G3.json")
        assert g3.table_key() == godel_chain(3).table_key()

    def test_dump_then_parse(self):
        h = product(boolean_hoop(), boolean_hoop())
        assert parse_algebra(dump_algebra(h)).table_key() == h.table_key()

    @pytest.mark.parametrize("text", [
        '{"size": 2, "plus": [[0, 1]], "imp": [[0, 0], [0, 0]]}',
        '{"size": 2, "plus": [[0, 1], [1, 1]], "imp": [[0, 1], [0, 0]], "one": 5}',
        'not json',
    ])
    def test_malformed(self, text):
        with pytest.raises(InvalidModelError):
            parse_algebra(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidModelError):
            load_algebra(tmp_path / "absent.json")


class TestPosetEmbedding:
    def test_twenty_random_posets(self):
        rng = random.Random(5)
        for _ in range(20):
            poset = Poset.random(rng.randint(0, 5), rng)
            algebra = embed_poset(poset)
            assert in_class(algebra, AlgebraClass.INVOLUTIVE_POCRIM, Exhaustive())
            index = embedding_indices(poset)
            for a in range(poset.size):
                for b in range(poset.size):
                    assert poset.leq(a, b) == algebra.leq(index[a], index[b])

    def test_cycle_rejected(self):
        with pytest.raises(InvalidModelError):
            Poset.from_relations(2, [(0, 1), (1, 0)])


class TestEnumeration:
    def test_no_nontrivial_finite_coops(self):
        sizes = {n: len(enumerate_algebras(n, AlgebraClass.COOP)) for n in (1, 2, 3)}
        assert sizes == {1: 1, 2: 0, 3: 0}

    def test_small_hoop_counts(self):
        assert len(enumerate_algebras(1, AlgebraClass.HOOP)) == 1
        assert len(enumerate_algebras(2, AlgebraClass.HOOP)) == 1

    def test_enumerated_algebras_pass_their_laws(self):
        for algebra in enumerate_algebras(3, AlgebraClass.POCRIM):
            assert in_class(algebra, AlgebraClass.POCRIM, Exhaustive())

    def test_size_limit(self):
        with pytest.raises(InvalidModelError):
            enumerate_algebras(99)

    def test_class_aliases(self):
        assert parse_algebra_class("Bounded_Hoop") is AlgebraClass.BOUNDED_HOOP
        with pytest.raises(InvalidModelError):
            parse_algebra_class("lattice")


class TestCountermodels:
    def test_contraction_refuted_by_tables(self):
        s = parse_sequent("P |- P * P")
        witness = search_countermodel(s, AlgebraClass.HOOP, budget=3)
        assert not check_sequent(s, witness.assignment, witness.model)

    def test_contraction_refuted_on_the_dyadic_grid(self):
        s = parse_sequent("P |- P * P")
        witness = search_countermodel(s, AlgebraClass.COOP, budget=3)
        assert witness.model.has_half
        assert not check_sequent(s, witness.assignment, witness.model)

    def test_valid_sequent_exhausts_the_budget(self):
        with pytest.raises(BudgetExhausted):
            search_countermodel(parse_sequent("P, P -o Q |- Q"), AlgebraClass.POCRIM, budget=2)

    @given(formulas(names=("P", "Q"), max_leaves=4))
    def test_witness_always_reverifies(self, f):
        s = parse_sequent(f"|- {f}")
        try:
            witness = search_countermodel(s, AlgebraClass.HOOP, budget=2)
        except BudgetExhausted:
            return
        assert not check_sequent(s, witness.assignment, witness.model)

    def test_trivial_algebra(self):
        t = trivial_algebra()
        assert t.size == 1 and t.one == t.zero
