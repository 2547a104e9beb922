from .decomposition import SIDecomposition, monolith_and_decomposition, verify_decomposition
from .ideals import (
    Ideal,
    all_ideals,
    congruence_classes,
    generate_ideal,
    implicative_stabilizer,
    is_ideal,
    kernel,
    quotient_by_ideal,
    set_stabilizer,
    zero_ideal,
)
from .structure import (
    check_cep,
    check_simple_lemma,
    classify,
    congruences_by_partition,
    depth,
    enumerate_hoops,
    is_archimedean,
    is_closed,
    is_linear,
    is_simple,
    is_subdirectly_irreducible,
    isomorphic,
    monolith,
    multiples,
    restrict,
    subalgebras,
)

__all__ = [
    'SIDecomposition', 'monolith_and_decomposition', 'verify_decomposition',
    'Ideal', 'all_ideals', 'congruence_classes', 'generate_ideal', 'implicative_stabilizer', 'is_ideal',
    'kernel', 'quotient_by_ideal', 'set_stabilizer', 'zero_ideal',
    'check_cep', 'check_simple_lemma', 'classify', 'congruences_by_partition', 'depth', 'enumerate_hoops',
    'is_archimedean', 'is_closed', 'is_linear', 'is_simple', 'is_subdirectly_irreducible', 'isomorphic',
    'monolith', 'multiples', 'restrict', 'subalgebras',
]
