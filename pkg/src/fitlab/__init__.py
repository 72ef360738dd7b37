"""Finite permutation group engine for subgroup functorials,
generalized Fitting heights and permutable factorizations."""

from .builders import CorpusSpec, build_group, default_corpus, direct_product
from .errors import (
    DegenerateFactor,
    DegreeMismatch,
    EmptyStructure,
    FitlabError,
    InvalidParameter,
    InvalidPermutation,
    InvalidPrime,
    LatticeCapExceeded,
    NotNormal,
    OrderCapExceeded,
    ParseError,
    StepBudgetExceeded,
)
from .exprs import parse_functorial_expr
from .functorials import (
    Functorial,
    GammaSeries,
    HeightReport,
    UNBOUNDED,
    builtin_functorial,
    check_property,
    class_residual,
    gamma_series,
    hstar_height,
    htilde_height,
    lambda_height,
    named_heights,
    p_height_functorial,
    residual,
    star,
)
from .group import (
    DEFAULT_ORDER_CAP,
    Group,
    Subgroup,
    group_closure,
    make_subgroup,
)
from .groupfile import parse_group_file, read_group_file
from .lattice import (
    DEFAULT_LATTICE_CAP,
    FactorizationRecord,
    all_subgroups,
    classify_factorization,
    find_factorizations,
    frattini,
    maximal_subgroups,
)
from .perm import Permutation
from .quotients import QuotientGroup, quotient
from .report import emit_report, render_report, write_figures
from .structure import (
    chief_series,
    fitting_height,
    fitting_subgroup,
    fstar_subgroup,
    inneriser,
    is_p_soluble,
    is_quasinilpotent,
    is_soluble,
    minimal_normal_subgroups,
    normal_subgroups,
    socle_subgroup,
    soluble_radical,
)
from .theorems import (
    MUTATION_NAMES,
    THEOREM_IDS,
    TheoremVerdict,
    VerifyOptions,
    run_verify,
    verify_theorem,
)

__version__ = "0.1.0"
