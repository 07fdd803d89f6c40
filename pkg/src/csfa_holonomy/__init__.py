"""Holonomy decompositions of finite automata, with closed-form checks for
circular semi-flower automata."""

__version__ = "0.1.0"

from .automaton import (
    Automaton,
    ValidationReport,
    bpis,
    export_automaton_dot,
    parse_automaton,
    serialize_automaton,
    validate,
)
from .csfa import (
    CsfaClass,
    Prediction,
    VerificationReport,
    classify,
    find_swap_word,
    predict_decomposition,
    verify,
)
from .errors import (
    HolonomyError,
    InputError,
    NotAnSFAError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    TheoremViolation,
)
from .generator import GenSpec, cycle_automaton, generate_csfa
from .holonomy import (
    HolonomyComponent,
    HolonomyGroup,
    Skeleton,
    components,
    export_skeleton_dot,
    holonomy_group,
    paving,
    skeleton_space,
    stabilizer,
)
from .monoid import (
    Monoid,
    Transformation,
    check_unique_circular,
    circular_letters,
    enumerate_monoid,
    is_circular_permutation,
    is_cyclic_group,
    transformation_of_word,
)
from .tmonoid import (
    TransformationMonoidValue,
    closure,
    divides,
    transformation_group_isomorphic,
    wreath_product,
)
