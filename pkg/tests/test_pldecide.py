import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coopkit.algebra import check_sequent, eval_formula
from coopkit.exceptions import CoopkitError, FormulaSyntaxError, UnsupportedSymbol
from coopkit.kernel import corpus_entry
from coopkit.pldecide import (
    Ambient,
    Cmp,
    Constraint,
    HornClause,
    LinearExpr,
    Not,
    Or,
    check_horn_sample,
    compile_pl,
    decide_equation,
    decide_inequation,
    decide_sequent,
    decide_universal,
    describe_verdict,
    eliminate_halving,
    eliminate_halving_with_names,
    fm_feasible,
    fm_witness,
    grid_max_abs,
    matrix_holds,
    matrix_to_text,
    parse_matrix,
    parse_term,
    simplest_between,
)
from coopkit.syntax import ONE, ZERO, Conj, Imp, Var, parse_formula, parse_sequent

from .conftest import formulas

X, Y = LinearExpr.var("x"), LinearExpr.var("y")
INTERVAL = Ambient.INTERVAL.model()


def constant(value) -> LinearExpr:
    return LinearExpr.constant(Fraction(value))


class TestLinear:
    def test_contradiction(self):
        assert not fm_feasible([Constraint.gt(X, constant(0)), Constraint.lt(X, constant(0))])

    def test_open_interval_is_empty_at_a_point(self):
        assert not fm_feasible([Constraint.gt(X, constant(1)), Constraint.leq(X, constant(1))])
        assert fm_feasible([Constraint.geq(X, constant(1)), Constraint.leq(X, constant(1))])

    def test_elimination_chains_bounds(self):
        system = [Constraint.lt(X, Y), Constraint.lt(Y, constant("1/3")), Constraint.gt(X, constant("1/4"))]
        witness = fm_witness(system)
        assert witness is not None
        assert all(c.holds(witness) for c in system)
        assert fm_witness(system + [Constraint.gt(X, constant("1/3"))]) is None

    def test_witness_prefers_simple_values(self):
        assert fm_witness([Constraint.geq(X, constant("1/3")), Constraint.leq(X, constant("2/3"))]) == {"x": Fraction(1, 2)}

    @pytest.mark.parametrize(
        "low, low_strict, high, high_strict, expected",
        [
            (None, False, None, False, Fraction(0)),
            (Fraction(1, 3), True, Fraction(1, 2), True, Fraction(2, 5)),
            (Fraction(-3, 2), False, Fraction(-1, 2), False, Fraction(-1)),
            (Fraction(3, 7), False, Fraction(3, 7), False, Fraction(3, 7)),
            (Fraction(5, 2), True, None, False, Fraction(3)),
        ],
    )
    def test_simplest_between(self, low, low_strict, high, high_strict, expected):
        assert simplest_between(low, low_strict, high, high_strict) == expected

    def test_expression_arithmetic(self):
        e = X.scale(2) - Y + constant(1)
        assert e.evaluate({"x": Fraction(1, 2), "y": Fraction(3)}) == -1
        assert str(e) == "2x - y + 1"
        assert e.substitute("x", Fraction(1)).variables == ["y"]


class TestPiecewiseForms:
    def test_piece_counts(self):
        assert len(compile_pl(parse_formula("P -o P * P"), "interval")) == 2
        assert len(compile_pl(parse_formula("P/2"), "interval")) == 1
        assert len(compile_pl(parse_formula("P * P"), "nonneg")) == 1

    def test_identically_zero(self):
        assert compile_pl(parse_formula("(P/2 -o P) -o P/2"), "interval").is_identically(0)
        assert not compile_pl(parse_formula("P -o P * P"), "interval").is_identically(0)

    def test_values_in_range(self):
        assert compile_pl(parse_formula("(P -o Q) * R/2"), "interval").values_in_range()
        assert compile_pl(parse_formula("P * Q -o R"), "nonneg").values_in_range()

    def test_one_needs_the_interval(self):
        with pytest.raises(UnsupportedSymbol):
            compile_pl(parse_formula("P -o 1"), "nonneg")

    def test_extra_names(self):
        assert compile_pl(parse_formula("P"), "nonneg", ["Q"]).variables == ("P", "Q")

    @settings(max_examples=30)
    @given(
        formulas(with_one=True, with_half=True, max_leaves=4),
        st.fixed_dictionaries({name: st.fractions(0, 1, max_denominator=8) for name in ("P", "Q", "R")}),
    )
    def test_agrees_with_the_interval_model(self, f, assignment):
        pl = compile_pl(f, "interval", ["P", "Q", "R"])
        assert pl.evaluate(assignment) == eval_formula(f, assignment, INTERVAL)


class TestMatrices:
    def test_parse_comparisons(self):
        assert parse_matrix("x != y") == Not(Cmp(Var("x"), "=", Var("y")))
        assert parse_matrix("x > y") == Cmp(Var("y"), "<", Var("x"))
        assert parse_matrix("x + y >= 0") == Cmp(parse_term("0"), "<=", parse_term("x + y"))

    def test_implication_nests_to_the_right(self):
        m = parse_matrix("a = b => c = d => e = f")
        assert isinstance(m, Or) and isinstance(m.parts[1], Or)

    def test_parenthesized_matrix(self):
        m = parse_matrix("(x = 0 or y = 0) and not (x = y)")
        assert matrix_holds(m, {"x": Fraction(0), "y": Fraction(1, 2)}, INTERVAL)
        assert not matrix_holds(m, {"x": Fraction(0), "y": Fraction(0)}, INTERVAL)

    def test_round_trip_through_text(self):
        m = parse_matrix("x + y = x => y = 0")
        assert parse_matrix(matrix_to_text(m)) == m

    @pytest.mark.parametrize("text", ["x =", "x and y", "x = y /3", "(x = y", "x = y z"])
    def test_syntax_errors(self, text):
        with pytest.raises(FormulaSyntaxError):
            parse_matrix(text)


class TestDecide:
    @pytest.mark.parametrize("name", ["a1", "a2", "a3", "a4", "a5", "a6", "cwc"])
    def test_theorems_hold_in_the_interval(self, name):
        conclusion = corpus_entry(name).proof().conclusion
        assert decide_sequent(conclusion, "interval").valid

    @pytest.mark.parametrize(
        "text",
        [
            "x + (x -> y) = y + (y -> x)",
            "(x -> y) -> y = (y -> x) -> x",
            "x/2 = x/2 -> x",
            "x/2 + x/2 = x",
            "x -> x = 0",
        ],
    )
    def test_identities_hold_in_both_ambients(self, text):
        assert decide_universal(parse_matrix(text), "wajsberg").valid

    def test_idempotence_fails_at_one_half(self):
        verdict = decide_universal(parse_matrix("x + x = x"), "interval")
        assert not verdict.valid
        assert verdict.assignment == {"x": Fraction(1, 2)}
        assert verdict.values["x + x"] == 1

    def test_contraction_countermodel_re_evaluates(self):
        s = parse_sequent("P |- P * P")
        verdict = decide_sequent(s, "interval")
        assert not verdict.valid
        assert not check_sequent(s, verdict.assignment, INTERVAL)

    def test_cancellation_separates_the_ambients(self):
        m = parse_matrix("x + y = x => y = 0")
        assert decide_universal(m, "nonneg").valid
        verdict = decide_universal(m, "wajsberg")
        assert verdict.ambient == "interval"
        assert verdict.assignment == {"x": Fraction(1), "y": Fraction(1)}
        assert not matrix_holds(m, verdict.assignment, INTERVAL)

    def test_equation_and_inequation(self):
        assert decide_equation(parse_term("x -> x"), parse_term("0")).valid
        assert decide_inequation(parse_term("x"), parse_term("x + y")).valid
        assert not decide_inequation(parse_term("x + y"), parse_term("x")).valid

    def test_one_in_nonneg(self):
        with pytest.raises(UnsupportedSymbol):
            decide_universal(parse_matrix("x -> 1 = 0"), "nonneg")

    def test_unknown_ambient(self):
        with pytest.raises(CoopkitError):
            decide_universal(parse_matrix("x = x"), "reals")

    def test_describe(self):
        assert describe_verdict(decide_universal(parse_matrix("x = x"))) == "valid"
        text = describe_verdict(decide_universal(parse_matrix("x + x = x"), "interval"))
        assert text.startswith("countermodel in interval")


class TestHalvingElimination:
    def test_fresh_variables(self):
        clause = HornClause.parse("x/2 = y => x = y + y")
        result = eliminate_halving_with_names(clause)
        assert result.fresh == (("v1", Var("x")),)
        assert not result.clause.has_halving()
        assert str(result.clause) == "v1 = y and v1 = v1 -> x => x = y + y"

    def test_nested_halving_is_eliminated_innermost_first(self):
        result = eliminate_halving_with_names(HornClause.parse("x/2/2 = 0"))
        assert [name for name, _ in result.fresh] == ["v1", "v2"]
        assert result.fresh[1][1] == Var("v1")

    def test_names_avoid_existing_variables(self):
        result = eliminate_halving_with_names(HornClause.parse("v1/2 = v1"))
        assert result.fresh[0][0] == "v2"

    def test_no_halving_is_unchanged(self):
        clause = HornClause.parse("x + y = y + x")
        assert eliminate_halving(clause) == clause

    def test_not_a_horn_clause(self):
        with pytest.raises(CoopkitError):
            HornClause.parse("x = 0 or y = 0")

    @pytest.mark.parametrize("text", ["x/2 = y => x = y + y", "x/2 + x/2 = x", "x = y => x/2 = y/2"])
    def test_sampled_agreement(self, text, dyadic_capped):
        assert check_horn_sample(HornClause.parse(text), dyadic_capped, samples=200, seed=3).ok

    def test_eliminated_clause_is_decided_without_halving(self):
        clause = eliminate_halving(HornClause.parse("x/2 = y => x = y + y"))
        assert decide_universal(clause.as_matrix(), "interval").valid


ORACLE_SEED = 20240601
ORACLE_TERMS = 50
ORACLE_DEPTH = 4
ORACLE_EXPONENT = 5
ORACLE_LEAVES = (Var("x"), Var("y"), Var("z"), ZERO, ONE)


def random_term(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(ORACLE_LEAVES)
    connective = rng.choice((Conj, Imp))
    return connective(random_term(rng, depth - 1), random_term(rng, depth - 1))


def oracle_terms():
    rng = random.Random(ORACLE_SEED)
    return [random_term(rng, ORACLE_DEPTH) for _ in range(ORACLE_TERMS)]


@pytest.mark.slow
@pytest.mark.parametrize("term", oracle_terms(), ids=str)
def test_decision_agrees_with_the_grid(term):
    verdict = decide_equation(term, ZERO, "interval")
    largest, where = grid_max_abs(term, ORACLE_EXPONENT)
    assert verdict.valid == (largest == 0), where
    if not verdict.valid:
        assert eval_formula(term, verdict.assignment, Ambient.INTERVAL.model()) != 0
