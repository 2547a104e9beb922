from .constructions import (
    OrdinalSum,
    Poset,
    boolean_hoop,
    cap_at,
    dyadic_scale,
    embed_poset,
    embedding_indices,
    find_model,
    godel_chain,
    lukasiewicz_chain,
    multiple,
    ordinal_sum,
    product,
    standard_dense_models,
    standard_finite_models,
    trivial_algebra,
)
from .evaluation import antecedent_value, check_sequent, eval_formula, supports, supports_sequent
from .io import dump_algebra, load_algebra, parse_algebra
from .halving import check_halving_properties, is_semi_cancellative
from .laws import LAWS, AlgebraClass, Exhaustive, Sampled, check_laws, in_class, parse_algebra_class, violates
from .models import AlgebraModel, DenseModel, FiniteAlgebra
from .scalars import Dyadic, ScalarKind, to_fraction
from .search import (
    Countermodel,
    canonical_form,
    enumerate_algebras,
    enumerate_up_to,
    sample_assignments,
    sample_scalar,
    search_countermodel,
)

__all__ = [
    'OrdinalSum', 'Poset', 'boolean_hoop', 'cap_at', 'dyadic_scale', 'embed_poset', 'embedding_indices',
    'find_model', 'godel_chain', 'lukasiewicz_chain', 'multiple', 'ordinal_sum', 'product',
    'standard_dense_models', 'standard_finite_models', 'trivial_algebra',
    'antecedent_value', 'check_sequent', 'eval_formula', 'supports', 'supports_sequent',
    'check_halving_properties', 'is_semi_cancellative', 'dump_algebra', 'load_algebra', 'parse_algebra',
    'LAWS', 'AlgebraClass', 'Exhaustive', 'Sampled', 'check_laws', 'in_class', 'parse_algebra_class', 'violates',
    'AlgebraModel', 'DenseModel', 'FiniteAlgebra', 'Dyadic', 'ScalarKind', 'to_fraction',
    'Countermodel', 'canonical_form', 'enumerate_algebras', 'enumerate_up_to', 'sample_assignments', 'sample_scalar',
    'search_countermodel',
]
