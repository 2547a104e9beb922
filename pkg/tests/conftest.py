import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings
from hypothesis import strategies as st

from coopkit.algebra import DenseModel, ScalarKind, boolean_hoop, godel_chain, lukasiewicz_chain
from coopkit.syntax import ONE, ZERO, Conj, Half, Imp, Var

hypothesis_settings.register_profile(
    "coopkit",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("coopkit")

VARIABLE_NAMES = ("P", "Q", "R")


def formulas(names=VARIABLE_NAMES, with_one: bool = False, with_half: bool = False, max_leaves: int = 6):
    """Formulas over the given variables in the requested sublanguage"""
    leaves = [st.sampled_from(names).map(Var), st.just(ZERO)]
    if with_one:
        leaves.append(st.just(ONE))

    def extend(children):
        options = [
            st.builds(Conj, children, children),
            st.builds(Imp, children, children),
        ]
        if with_half:
            options.append(children.map(Half))
        return st.one_of(options)

    return st.recursive(st.one_of(leaves), extend, max_leaves=max_leaves)


@pytest.fixture
def l3():
    return lukasiewicz_chain(3)


@pytest.fixture
def g3():
    return godel_chain(3)


@pytest.fixture
def boolean():
    return boolean_hoop()


@pytest.fixture
def dyadic_capped():
    return DenseModel(ScalarKind.DYADIC, 1)


@pytest.fixture
def dyadic_unbounded():
    return DenseModel(ScalarKind.DYADIC)


@pytest.fixture
def rational_capped():
    return DenseModel(ScalarKind.RATIONAL, 1)
