"""Declarative process enumeration and stakeholder utility comparison."""

from ._dproc import (
    DEFAULT_MAX_ALPHABET,
    AlphabetTooLarge,
    ArityError,
    DegenerateProcess,
    DuplicateActivityId,
    EmptySubset,
    Enumeration,
    Error,
    MismatchedStakeholders,
    Overflow,
    ParseError,
    ProcessSpec,
    TooManyStakeholders,
    UnknownActivity,
    check,
    compare_specs,
    compare_vectors,
    enumeration_workload,
    good_counts,
    h_distance,
    load_spec,
    parse_spec,
    unique_traces,
    utility,
    utility_vector,
    utility_vector_from_counts,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
