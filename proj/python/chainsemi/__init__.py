"""Semigroups of partial contractions on a finite chain.

Enumeration of the contraction families, starred Green's relations by a
cancellation-condition oracle and by structural characterizations,
abundance verdicts, regularity and strong regularity, and a claim
verification harness. The heavy lifting lives in the compiled extension
module; this package just re-exports it.
"""

from chainsemi._chainsemi import (  # noqa: F401
    ChainsemiError,
    PartialMap,
    abundance,
    claim_ids,
    classic_classes,
    compose,
    decode,
    enumerate_ids,
    enumerate_maps,
    identity,
    is_regular,
    is_strongly_regular,
    jstar_classes,
    member,
    regular_char_orcp,
    sreg_ids,
    star_classes,
    transversals,
    verify,
    verify_closure,
    __version__,
)

__all__ = [
    "ChainsemiError",
    "PartialMap",
    "abundance",
    "claim_ids",
    "classic_classes",
    "compose",
    "decode",
    "enumerate_ids",
    "enumerate_maps",
    "identity",
    "is_regular",
    "is_strongly_regular",
    "jstar_classes",
    "member",
    "regular_char_orcp",
    "sreg_ids",
    "star_classes",
    "transversals",
    "verify",
    "verify_closure",
]
