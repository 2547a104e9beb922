from fractions import Fraction

import pytest

from coopkit.algebra import DenseModel, ScalarKind
from coopkit.envelope import (
    DiffGroup,
    HatElement,
    HatEnvelope,
    Ordering,
    Sign,
    diff_op,
    hat_embed,
    hat_op,
    verify_envelope,
)
from coopkit.exceptions import BaseMismatch, InvalidModelError


@pytest.fixture
def hat(dyadic_capped):
    return HatEnvelope(dyadic_capped)


@pytest.fixture
def group(dyadic_unbounded):
    return DiffGroup(dyadic_unbounded)


class TestHatEnvelope:
    def test_add_lifts_past_the_common_exponent(self, hat):
        x = hat.element(0, "3/4")
        result = hat_op("add", x, x)
        assert result == hat.element(2, "3/8")
        assert hat.denote(result) == Fraction(3, 2)

    def test_imp(self, hat):
        assert hat_op("imp", hat.element(0, "1/4"), hat.element(0, "3/4")) == hat.element(0, "1/2")

    def test_compare_aligns_exponents(self, hat):
        assert hat_op("compare", hat.element(1, "1/4"), hat.element(0, "1/2")) is Ordering.EQUAL
        assert hat.compare(hat.element(1, "1/2"), hat.one) is Ordering.EQUAL
        assert hat.compare(hat.element(2, "1/2"), hat.one) is Ordering.GREATER

    def test_half(self, hat):
        assert hat_op("half", hat.element(3, "1/2")) == hat.element(3, "1/4")

    def test_sums_beyond_one_are_kept(self, hat):
        total = hat.add(hat.one, hat.one)
        assert hat.denote(total) == 2
        assert hat.capped_add(hat.one, hat.one) == hat.one

    def test_normalize(self, hat):
        x = hat.normalize(hat.element(2, "1/8"))
        assert x == hat.element(0, "1/2")
        assert hat.normalize(hat.element(1, "1/2")) == hat.element(1, "1/2")

    def test_unembed(self, hat):
        assert hat.unembed(hat.element(1, "1/4")) == Fraction(1, 2)
        with pytest.raises(InvalidModelError):
            hat.unembed(hat.element(2, "1/2"))

    def test_embedding_is_exponent_zero(self, dyadic_capped):
        assert hat_embed(dyadic_capped, "1/2") == HatElement(0, dyadic_capped.coerce("1/2"), dyadic_capped.name)

    def test_mixed_bases_are_rejected(self, hat, rational_capped):
        other = HatEnvelope(rational_capped)
        with pytest.raises(BaseMismatch):
            hat.add(hat.element(0, "1/2"), other.element(0, "1/2"))

    def test_needs_a_capped_base(self, dyadic_unbounded):
        with pytest.raises(InvalidModelError):
            HatEnvelope(dyadic_unbounded)

    def test_negative_exponent(self, hat):
        with pytest.raises(InvalidModelError):
            hat.element(-1, 0)

    def test_missing_operand(self, hat):
        with pytest.raises(InvalidModelError):
            hat.hat_op("add", hat.zero)


class TestDifferences:
    def test_from_pair(self, group):
        assert diff_op("from-pair", "3/4", "1/4") == group.element(Sign.PLUS, "1/2")
        assert diff_op("from-pair", "1/4", "3/4") == group.element(Sign.MINUS, "1/2")

    def test_negative_zero_is_zero(self, group):
        assert group.element(Sign.MINUS, 0) == group.zero
        assert group.neg(group.zero) == group.zero

    def test_add_with_opposite_signs(self, group):
        d = group.element(Sign.PLUS, "1/4")
        e = group.element(Sign.MINUS, "3/4")
        assert group.add(d, e) == group.element(Sign.MINUS, "1/2")
        assert group.to_scalar(group.add(d, e)) == Fraction(-1, 2)

    def test_compare(self, group):
        minus, plus = group.element(Sign.MINUS, 1), group.element(Sign.PLUS, "1/8")
        assert diff_op("compare", minus, plus) is Ordering.LESS
        assert group.compare(plus, minus) is Ordering.GREATER
        assert group.compare(plus, group.sub(plus, group.zero)) is Ordering.EQUAL

    def test_half_is_two_divisible(self, group):
        d = group.element(Sign.MINUS, "3/4")
        assert group.add(group.half(d), group.half(d)) == d

    def test_needs_an_unbounded_base(self, dyadic_capped):
        with pytest.raises(InvalidModelError):
            DiffGroup(dyadic_capped)

    def test_mismatched_elements(self, group):
        other = DiffGroup(DenseModel(ScalarKind.RATIONAL))
        with pytest.raises(BaseMismatch):
            group.add(group.zero, other.zero)

    def test_arity(self):
        with pytest.raises(InvalidModelError):
            diff_op("neg")


class TestVerification:
    @pytest.mark.parametrize("kind", [ScalarKind.DYADIC, ScalarKind.RATIONAL])
    def test_all_properties_hold(self, kind):
        report = verify_envelope(DenseModel(kind, 1), samples=1000, seed=9)
        assert report.ok, report.failed

    def test_report_names_every_check(self):
        report = verify_envelope(samples=20, seed=1)
        assert {"embedding-add", "oracle-compare", "group-inverse", "difference-value"} <= set(report.checks)
