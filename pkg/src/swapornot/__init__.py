"""Swap-or-not small-domain cipher toolkit.

A cipher over any finite domain [N] built from one-bit round functions, its
tweakable variant, a format-preserving encryption layer for radix strings,
a calculator for the construction's provable advantage bounds, and an exact
verifier that the shuffle's mixing respects those bounds on small decks.
"""

from .bounds import (
    BoundQuery,
    Model,
    cca_bound,
    cca_tweak_bound,
    min_rounds,
    ncpa_bound,
    ncpa_tweak_bound,
    thorp_bound,
)
from .cipher import (
    BitSource,
    CallableSource,
    ConstantSource,
    DerivedSource,
    IdealSource,
    RoundMaterial,
    RoundStep,
    decipher,
    encipher,
    encipher_traced,
)
from .domain import Domain, GroupLaw
from .errors import DomainError, ParameterError, RoundCapExceeded
from .fpe import (
    FormatSpec,
    decode_digits,
    encode_digits,
    fpe_decrypt,
    fpe_encrypt,
    plan_rounds,
)
from .mixing import (
    ProjectedDistribution,
    ShuffleSample,
    exact_tvd_after,
    shuffle_sample,
    step,
    tvd_to_stationary,
    validation_grid,
)
from .prf import PRF_ID, PrfKey, TweakDigest, derive_subkeys, round_bit, tweak_digest

__version__ = "0.1.0"

__all__ = [
    "BitSource",
    "BoundQuery",
    "CallableSource",
    "ConstantSource",
    "DerivedSource",
    "Domain",
    "DomainError",
    "FormatSpec",
    "GroupLaw",
    "IdealSource",
    "Model",
    "PRF_ID",
    "ParameterError",
    "PrfKey",
    "ProjectedDistribution",
    "RoundCapExceeded",
    "RoundMaterial",
    "RoundStep",
    "ShuffleSample",
    "TweakDigest",
    "cca_bound",
    "cca_tweak_bound",
    "decipher",
    "decode_digits",
    "derive_subkeys",
    "encipher",
    "encipher_traced",
    "encode_digits",
    "exact_tvd_after",
    "fpe_decrypt",
    "fpe_encrypt",
    "min_rounds",
    "ncpa_bound",
    "ncpa_tweak_bound",
    "plan_rounds",
    "round_bit",
    "shuffle_sample",
    "step",
    "thorp_bound",
    "tvd_to_stationary",
    "tweak_digest",
    "validation_grid",
]
