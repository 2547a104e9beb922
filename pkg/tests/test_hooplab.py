import pytest

from coopkit.algebra import AlgebraClass, Exhaustive, FiniteAlgebra, boolean_hoop, godel_chain, in_class, lukasiewicz_chain, product
from coopkit.exceptions import NotAHoop
from coopkit.hooplab import (
    Ideal,
    SIDecomposition,
    all_ideals,
    check_cep,
    check_simple_lemma,
    classify,
    congruence_classes,
    congruences_by_partition,
    depth,
    enumerate_hoops,
    generate_ideal,
    is_archimedean,
    is_ideal,
    is_linear,
    is_simple,
    is_subdirectly_irreducible,
    isomorphic,
    monolith,
    monolith_and_decomposition,
    quotient_by_ideal,
    subalgebras,
    verify_decomposition,
)


def drastic_chain() -> FiniteAlgebra:
    """0 < a < b < 1 with every sum of nonzero elements at 1: a pocrim, not a hoop"""
    return FiniteAlgebra.from_operations(
        4,
        lambda x, y: y if x == 0 else x if y == 0 else 3,
        lambda x, y: 0 if x >= y else (y if x == 0 else 1),
        one=3,
        name="drastic",
    )


def _partition_of(h, ideal):
    return tuple(sorted((frozenset(c) for c in congruence_classes(h, ideal)), key=min))


class TestSmallAlgebras:
    def test_lukasiewicz_chain_is_simple(self, l3):
        record = classify(l3)
        assert record.simple and record.archimedean and record.linear and record.subdirectly_irreducible
        assert monolith(l3).is_whole

    def test_goedel_chain(self, g3):
        assert not is_simple(g3)
        assert not is_archimedean(g3)
        assert is_subdirectly_irreducible(g3)
        assert monolith(g3).labels() == ["0", "a"]

    def test_product_is_not_subdirectly_irreducible(self, boolean):
        h = product(boolean, boolean)
        assert not is_linear(h)
        assert monolith_and_decomposition(h) is None

    def test_trivial_algebra_is_not_simple(self):
        trivial = enumerate_hoops(1)[0]
        assert not is_simple(trivial)
        assert not is_archimedean(trivial)
        assert not is_subdirectly_irreducible(trivial)

    def test_depth(self, l3, g3):
        assert depth(l3, 0) == 0
        assert depth(l3, 1) == 2
        assert depth(g3, 1) == 1
        assert classify(lukasiewicz_chain(4)).depths == {"0": 0, "1/3": 3, "2/3": 2, "1": 1}

    def test_generated_ideal(self, g3):
        ideal = generate_ideal(g3, [1])
        assert ideal.labels() == ["0", "a"]
        assert is_ideal(g3, ideal.elements)
        assert not is_ideal(g3, [0, 2])

    def test_quotient(self, g3):
        ideal = generate_ideal(g3, [1])
        quotient, projection = quotient_by_ideal(g3, ideal)
        assert quotient.size == 2
        assert projection == (0, 0, 1)
        assert in_class(quotient, AlgebraClass.BOUNDED_HOOP)
        assert isomorphic(quotient, boolean_hoop())

    def test_subalgebras_of_l3(self, l3):
        assert sorted(map(sorted, subalgebras(l3))) == [[0], [0, 1, 2], [0, 2]]

    def test_non_hoop_rejected(self):
        h = drastic_chain()
        assert in_class(h, AlgebraClass.BOUNDED_POCRIM, Exhaustive())
        with pytest.raises(NotAHoop) as info:
            monolith_and_decomposition(h)
        assert "cwc" in info.value.failed_laws

    def test_ordinal_sum_property_checks_implication(self, l3):
        # {0, 1/2} below {0, 1} passes s + f = f but 1/2 -> 1 is 1/2, not 1
        split = SIDecomposition(Ideal(l3, frozenset(l3.elements())), frozenset({0, 2}), frozenset({0, 1}))
        check = verify_decomposition(l3, split).checks["x"]
        assert not check.ok
        assert tuple(check.witness) == (1, 2)


def _theorem_checks(h):
    simple = is_simple(h)
    assert simple == is_archimedean(h), h.name
    if simple:
        assert is_linear(h), h.name
        assert check_simple_lemma(h).ok, h.name
    ideals = all_ideals(h)
    congruences = congruences_by_partition(h)
    assert len(ideals) == len(congruences), h.name
    assert {_partition_of(h, ideal) for ideal in ideals} == set(congruences), h.name
    assert check_cep(h).ok, h.name
    decomposition = monolith_and_decomposition(h)
    assert (decomposition is not None) == is_subdirectly_irreducible(h), h.name
    if decomposition is not None:
        report = verify_decomposition(h, decomposition)
        assert report.ok, f"{h.name}: {report.failed}"


class TestFiniteHoopTheorems:
    @pytest.mark.parametrize("h", enumerate_hoops(3), ids=lambda h: h.name)
    def test_up_to_three_elements(self, h):
        _theorem_checks(h)

    @pytest.mark.slow
    def test_four_elements(self):
        hoops = [h for h in enumerate_hoops(4) if h.size == 4]
        assert hoops
        for h in hoops:
            _theorem_checks(h)

    def test_standard_hoops(self):
        for h in (lukasiewicz_chain(4), godel_chain(4), product(boolean_hoop(), godel_chain(3))):
            _theorem_checks(h)

    def test_isomorphism_ignores_labels(self, l3):
        assert isomorphic(l3, lukasiewicz_chain(3).renamed("copy", ["x", "y", "z"]))
        assert not isomorphic(l3, godel_chain(3))
