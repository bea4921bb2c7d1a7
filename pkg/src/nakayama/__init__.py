"""Homological invariants of connected Nakayama algebras from their Kupisch series."""
from .errors import *  # noqa: F401,F403
from .gorenstein import (
    GpCertificate,
    NotGP,
    NotGPReason,
    Trichotomy,
    TrichotomyClass,
    classify,
    fin_dim,
    global_dim,
    gorenstein_oracle,
    gp_modules,
    gp_test,
    is_cm_free,
    is_gorenstein,
)
from .kupisch import (
    Kind,
    KupischSeries,
    ThetaData,
    cartan,
    dual_lengths,
    is_self_injective,
    is_theta_perfect,
    normalize,
    opposite,
    parse_sequence,
    phi,
    theta,
    theta_data,
)
from .modarith import (
    INF,
    Indec,
    ResolutionStep,
    cosyzygy,
    inj_dim,
    injective_envelope,
    min_projective_resolution,
    proj_dim,
    syzygy,
    top_socle,
)
from .retraction import (
    RetractionSequence,
    RetractionStep,
    SingularityDescriptor,
    r_via_simples,
    retract_step,
    retraction_sequence,
    singularity_descriptor,
    transport_module,
)
from .zmatrix import SmithForm, determinant, smith_normal_form

__version__ = "0.1.0"
