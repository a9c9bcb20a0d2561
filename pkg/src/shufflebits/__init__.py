"""Enumerate the shuffle product of two homogeneous sets as fixed-popcount integers."""
from shufflebits._backend import ACTIVE as BACKEND
from shufflebits.core import (
    EdgeKind,
    EnumerationEvent,
    InstanceTooLargeError,
    ShuffleSpec,
    SubtractionUnderflowError,
    collect_events,
    count_permutations,
    enumerate_events,
    initial_permutation,
    is_valid_permutation,
    permutation_values,
)

__all__ = [
    "BACKEND",
    "EdgeKind",
    "EnumerationEvent",
    "InstanceTooLargeError",
    "ShuffleSpec",
    "SubtractionUnderflowError",
    "collect_events",
    "count_permutations",
    "enumerate_events",
    "initial_permutation",
    "is_valid_permutation",
    "permutation_values",
]
