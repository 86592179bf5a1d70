"""Finite n-ary groups and fuzzy subgroup analysis with exact arithmetic."""

from .errors import (
    ArityMismatch,
    CarrierTooLarge,
    ChainViolation,
    ConsistencyViolation,
    HypothesisViolated,
    NotASubgroup,
    NotAssociative,
    NotAutomorphism,
    NotCentral,
    NotIncreasing,
    NotSolvable,
    NotUnipotent,
    NotUnique,
    ParseError,
    PolyadicError,
)
from .groups import BinaryGroup, find_isomorphism
from .membership import PowerValue, coerce, parse_membership, rational_power, render
from .nary import (
    AssociativityReport,
    Carrier,
    Homomorphism,
    HomomorphismReport,
    NaryGroup,
    NaryOp,
    SpecialElements,
    check_associativity,
    check_homomorphism,
    derive,
    enumerate_subgroups,
    evaluate,
    find_homomorphisms,
    from_table,
    hosszu_compose,
    hosszu_decompose,
    retract,
    skew,
    solve_at,
    special_elements,
    subgroup_closure,
    subgroup_witness,
    validate_group,
)
from .fuzzy import (
    FuzzySet,
    FuzzyVerdict,
    LevelComparison,
    LevelCorrespondenceReport,
    LevelFamily,
    LevelIdentityReport,
    UnipotentReport,
    check_fuzzy_binary_subgroup,
    check_fuzzy_nary_subgroup,
    check_image_level_identity,
    check_thm28,
    check_via_levels,
    compare_level_families,
    from_chain,
    from_nested,
    from_subgroup,
    image,
    image_level_correspondence,
    level_family,
    level_subset,
    levels_equal,
    preimage,
    sup_property,
    unipotent_analysis,
)
from .normal import (
    NormalityReport,
    compose_monotone,
    mu_maximal_elements,
    normality_report,
    normalize_plus,
    power,
)
from .speclang import (
    FuzzyDecl,
    GroupDecl,
    HomDecl,
    SpecDocument,
    parse_spec,
    render_document,
)
from .tableio import (
    read_fuzzy_file,
    read_table_file,
    write_fuzzy_file,
    write_table_file,
)

__version__ = "0.1.0"
