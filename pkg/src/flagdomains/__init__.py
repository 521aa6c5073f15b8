"""Exact root-system combinatorics with numeric certificates for
pseudoconcavity of flag domains and period-domain degenerations."""

from .chevalley import (
    ChevalleyConstants,
    jacobi_violations,
    structure_constants,
    verify_bracket_identities,
)
from .concavity import (
    ConcavityReport,
    StringVerdict,
    VerdictKind,
    analyze_string_condition,
    check_pseudoconcavity,
)
from .hodge import (
    BoundaryReport,
    DegenerationSpec,
    DeligneDiamond,
    GroupDescriptor,
    HodgeNumbers,
    InfeasibleDegeneration,
    check_boundary_concavity,
    enumerate_minimal_degenerations,
    grading_values_on_V,
    group_of_period_domain,
    limit_diamond,
    period_report,
    verify_sl2_cayley_forms,
    weight_eigenvalues,
)
from .leviform import DefiningFunction, LeviReport, levi_analyze
from .matrixrep import (
    MatrixRealization,
    NumericCheck,
    cayley_matrix,
    flag_residual,
    fundamental_rep,
    verify_cayley_conjugation,
    verify_fixed_point,
)
from .realform import CompactnessTable, classify_roots, noncompact_negative_roots
from .rootsys import (
    GradingElement,
    LieType,
    ParabolicData,
    Root,
    RootString,
    RootSystem,
    build_root_system,
    cartan_integer,
    from_cartan_matrix,
    graded_pieces,
    grading,
    parabolic_data,
    root,
    root_string,
)

__version__ = "0.1.0"
