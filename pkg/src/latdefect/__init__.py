"""Exact arithmetic for definite lattices, correction terms, and filling
obstructions of plumbed 3-manifolds."""

from .defects import (
    Defects,
    characteristic_class_reps,
    defects,
    max_char_square,
    min_char_norm,
)
from .dinvariant import (
    DInvariantReport,
    POINCARE_SPHERE_D,
    QuarterPair,
    SpinCClass,
    d_invariant,
    evaluate_expression,
    label_quarter,
    reverse_pair,
    seifert_class_values,
    spinc_classes,
    sum_with_homology_spheres,
)
from .enumeration import (
    CosetProblem,
    EnumerationResult,
    enumerate_in_coset,
    rational_cholesky,
    shortest_in_coset,
)
from .errors import (
    BudgetExhaustedError,
    CongruenceViolationError,
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_SUITE,
    EXIT_USAGE,
    ExpressionParseError,
    FormatError,
    GlueFailureError,
    LabellingViolationError,
    NotBimodularError,
    NotCharacteristicError,
    NotDefiniteError,
    NotIndependentError,
    NotNegativeDefiniteError,
    NotPositiveDefiniteError,
    NotRationalHomologySphereError,
    NotRootsError,
    NotSymmetricError,
    RadiusEmptyError,
    ResidueViolationError,
    SuiteFailureError,
    TooManyBadVerticesError,
    ToolkitError,
    UnnormalizedSeifertDataError,
    UnsupportedDeterminantError,
    UnsupportedExpressionError,
    ZeroLegFramingError,
)
from .formats import (
    format_fraction,
    gram_from_json,
    gram_to_json,
    parse_fraction,
    tree_from_json,
    tree_to_json,
)
from .glue import (
    Overlattice,
    double,
    extend_covector,
    glue_overlattice,
    restrict_covector,
)
from .lattice import (
    CharClassSign,
    Covector,
    DiscriminantGroup,
    IntegralLattice,
    RootGraph,
    a1_lattice,
    base_characteristic,
    char_class_sign,
    diagonal_bimodular_lattice,
    direct_sum,
    discriminant_group,
    dual_gram,
    e7_lattice,
    e8_lattice,
    identity_lattice,
    is_bipartite,
    is_characteristic,
    is_diagonal,
    is_diagonal_bimodular,
    is_minimal,
    root_graph,
    roots,
    unit_vectors,
    validate_lattice,
)
from .obstruction import (
    FillingConclusion,
    STANDARD_PAIR,
    Verdict,
    definite_verdict,
    positive_filling_obstruction,
    report_verdict,
    sphere_definite_verdict,
    sphere_filling_obstruction,
    surgery_cobordism_obstruction,
    surgery_difference,
)
from .plumbing import (
    ConnectedSum,
    ExpressionTerm,
    NcfExpansion,
    PlumbingTree,
    PoincareAtom,
    SeifertData,
    bad_vertex_indices,
    bad_vertices,
    canonical_plumbing,
    gram,
    h1_order,
    neg_continued_fraction,
    negative_e8_tree,
    parse_expression,
    parse_seifert,
    reverse_orientation,
)
from .reduction import lll_reduce_gram
from .verify import (
    SUITE_NAMES,
    SuiteReport,
    conjugate_lattice,
    random_unimodular,
    verify_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhaustedError",
    "CharClassSign",
    "ConnectedSum",
    "CongruenceViolationError",
    "CosetProblem",
    "Covector",
    "DInvariantReport",
    "Defects",
    "DiscriminantGroup",
    "EnumerationResult",
    "EXIT_BUDGET",
    "EXIT_OK",
    "EXIT_PRECONDITION",
    "EXIT_SUITE",
    "EXIT_USAGE",
    "ExpressionParseError",
    "ExpressionTerm",
    "FillingConclusion",
    "FormatError",
    "GlueFailureError",
    "IntegralLattice",
    "LabellingViolationError",
    "NcfExpansion",
    "NotBimodularError",
    "NotCharacteristicError",
    "NotDefiniteError",
    "NotIndependentError",
    "NotNegativeDefiniteError",
    "NotPositiveDefiniteError",
    "NotRationalHomologySphereError",
    "NotRootsError",
    "NotSymmetricError",
    "Overlattice",
    "PlumbingTree",
    "PoincareAtom",
    "POINCARE_SPHERE_D",
    "QuarterPair",
    "RadiusEmptyError",
    "ResidueViolationError",
    "RootGraph",
    "STANDARD_PAIR",
    "SeifertData",
    "SpinCClass",
    "SuiteFailureError",
    "SuiteReport",
    "SUITE_NAMES",
    "TooManyBadVerticesError",
    "ToolkitError",
    "UnnormalizedSeifertDataError",
    "UnsupportedDeterminantError",
    "UnsupportedExpressionError",
    "Verdict",
    "ZeroLegFramingError",
    "a1_lattice",
    "bad_vertex_indices",
    "bad_vertices",
    "base_characteristic",
    "canonical_plumbing",
    "char_class_sign",
    "characteristic_class_reps",
    "conjugate_lattice",
    "d_invariant",
    "defects",
    "definite_verdict",
    "diagonal_bimodular_lattice",
    "direct_sum",
    "discriminant_group",
    "double",
    "dual_gram",
    "e7_lattice",
    "e8_lattice",
    "enumerate_in_coset",
    "evaluate_expression",
    "extend_covector",
    "format_fraction",
    "glue_overlattice",
    "gram",
    "gram_from_json",
    "gram_to_json",
    "h1_order",
    "identity_lattice",
    "is_bipartite",
    "is_characteristic",
    "is_diagonal",
    "is_diagonal_bimodular",
    "is_minimal",
    "label_quarter",
    "lll_reduce_gram",
    "max_char_square",
    "min_char_norm",
    "neg_continued_fraction",
    "negative_e8_tree",
    "parse_expression",
    "parse_fraction",
    "parse_seifert",
    "positive_filling_obstruction",
    "random_unimodular",
    "rational_cholesky",
    "report_verdict",
    "restrict_covector",
    "reverse_orientation",
    "reverse_pair",
    "root_graph",
    "roots",
    "seifert_class_values",
    "shortest_in_coset",
    "sphere_definite_verdict",
    "sphere_filling_obstruction",
    "spinc_classes",
    "sum_with_homology_spheres",
    "surgery_cobordism_obstruction",
    "surgery_difference",
    "tree_from_json",
    "tree_to_json",
    "unit_vectors",
    "validate_lattice",
    "verify_suite",
]
