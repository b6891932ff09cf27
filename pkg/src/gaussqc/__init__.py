"""Quantum and classical codes over Gaussian integer residue fields G_pi."""

from .css import (
    CssCode,
    DistanceValue,
    ErrorCountReport,
    SingletonCheck,
    SymplecticCode,
    SymplecticParameters,
    build_css,
    build_symplectic,
    check_singleton,
    component_distance,
    correctable_count,
    pair_code,
    pair_weight,
    star_product,
    symplectic_dual,
)
from .errors import *  # noqa: F401,F403
from .gaussian_field import GaussInt, PrimeField, format_gauss, mannheim_weight, parse_gauss, reduce_mod
from .linear_codes import (
    DecodeResult,
    LinearCode,
    correction_radius,
    decode_bounded,
    decode_syndrome,
    dual,
    from_generator_matrix,
    from_generator_poly,
    is_subcode,
    min_distance,
    min_distance_search,
    nullspace,
    rref,
    vector_weight,
)
from .polynomials import Polynomial, divides, product_of_linear, quartic_root_factor, verify_global_factorizations
from .qudit_sim import (
    ProtocolTranscript,
    StateVector,
    apply_all,
    apply_single,
    character_sum,
    fidelity,
    hadamard_matrix,
    prepare_coset_state,
    run_css_protocol,
)

__version__ = "0.1.0"
