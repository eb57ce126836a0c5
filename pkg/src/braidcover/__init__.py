"""Braid monodromy, Van Kampen presentations and Chern numbers of Galois covers."""

from .braid import (
    BraidWord,
    FreeWord,
    Permutation,
    artin_action,
    braids_equal,
    compose,
    full_twist,
    model_branch_monodromy,
    permutation_image,
)
from .catalog import (
    ExampleReport,
    PairSpec,
    PredictedPi1,
    build_pair,
    k3_conjectural_pair,
    pi1_order,
    pi1_predictor,
    search_pairs,
    signature_survey,
)
from .cosets import CosetEnumerationExceeded, CosetTable, todd_coxeter
from .invariants import (
    BaseSurfaceData,
    BranchCurveNumerics,
    CoverInvariants,
    HirzebruchEmbedding,
    branch_curve_numerics,
    cover_chern,
    full_pipeline,
    hirzebruch_base,
)
from .presentation import AbelianInvariants, GroupPresentation, abelianize, tietze_simplify
from .schreier import reidemeister_schreier
from .smith import smith_normal_form
from .vankampen import (
    GeometricMap,
    MonodromyFactor,
    MonodromyFactorization,
    affine_galois_pi1,
    projective_closure,
    projective_galois_pi1,
    quotient_by_generator_squares,
    validate_factorization,
    vk_presentation,
    vk_relations,
)

__version__ = "0.1.0"
