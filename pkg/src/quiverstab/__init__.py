"""Exact stability theory for modules over quivers with relations."""
from .census import (
    IsoClassCatalog,
    StrataReport,
    closed_points,
    cover_check,
    enumerate_reps,
    find_isomorphism,
    is_isomorphic,
    theta_strata,
)
from .errors import *  # noqa: F401,F403
from .ktheory import (
    GClass,
    KClass,
    canonical_gamma,
    dual_basis_matrix,
    g_class,
    gamma_length,
    minimal_cover_vector,
    pairing,
    pairing_object,
)
from .linalg import QQ, FieldSpec, Matrix
from .quiver import (
    AlgebraPresentation,
    Arrow,
    Morphism,
    Relation,
    Representation,
    Subrepresentation,
    direct_sum,
    hom_space,
    kernel,
    image,
    quotient,
)
from .stability import (
    HNFiltration,
    MuValue,
    StabilityData,
    WeightedFiltration,
    b_gamma,
    destabilizer_search,
    filtration_enumerate_max,
    hn_filtration,
    hn_type,
    is_semistable,
    mu_beta,
    slope,
)
from .structure import gr, is_semisimple, jordan_holder, length, projective, radical, simple, socle
from .subreps import subrepresentations

__version__ = "0.1.0"
