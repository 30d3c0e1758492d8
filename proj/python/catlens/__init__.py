"""Finite categories, functors, cofunctors and internal lenses."""

from ._core import (
    BoundaryMismatch,
    Category,
    Cofunctor,
    Document,
    Functor,
    GuardExceeded,
    InternalError,
    InvalidInput,
    Lens,
    ParseError,
    Report,
    StateLens,
    StructuralError,
    arrow_category,
    codiscrete,
    compose,
    discrete,
    dopf_to_lens,
    dumps,
    enumerate_cofunctors,
    enumerate_dopfs,
    enumerate_functors,
    enumerate_lenses,
    identity_cofunctor,
    identity_functor,
    identity_lens,
    interval,
    is_discrete_opfibration,
    lambda_category,
    load,
    loads,
    run_cli,
    state_lens_to_internal,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
