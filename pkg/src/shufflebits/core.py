"""Shift/subtract enumeration of the shuffle product of two homogeneous sets.

A permutation of ``zeros`` 0-elements and ``ones`` 1-elements is an unsigned
integer of width ``zeros + ones`` with exactly ``ones`` set bits. Starting
from the smallest such integer (all 1s on the right), two mutually recursive
loops visit every other one exactly once:

* shift: double ``p`` up to ``zeros`` times along a branch, advancing the
  subtrahend as ``v -> 2v + 1``;
* subtract: take ``p - v`` up to ``ones - 1`` times along a branch,
  advancing the subtrahend as ``v -> 2v``.

Each shift result starts a subtract run and each subtract result starts a
shift run. The traversal itself lives in a kernel module (compiled or pure
Python, see :mod:`shufflebits._backend`); this module owns the data types,
the single-step operations and the visitor contract.
"""
from __future__ import annotations

import enum
from array import array
from collections.abc import Callable
from dataclasses import dataclass
from typing import NamedTuple, Optional

from shufflebits import _backend

MAX_WIDTH = 64


class InstanceTooLargeError(ValueError):
    """The instance does not fit the width limit of the operation."""


class SubtractionUnderflowError(ArithmeticError):
    """A subtrahend larger than the permutation; only a traversal bug produces this."""


@dataclass(frozen=True)
class ShuffleSpec:
    zeros: int
    ones: int

    def __post_init__(self):
        if self.zeros < 0 or self.ones < 0:
            raise ValueError(f"set sizes must be non-negative, got ({self.zeros}, {self.ones})")
        if self.zeros + self.ones > MAX_WIDTH:
            raise InstanceTooLargeError(
                f"width {self.zeros + self.ones} exceeds the {MAX_WIDTH}-bit limit"
            )

    def width(self) -> int:
        return self.zeros + self.ones

    def full_mask(self) -> int:
        return (1 << self.width()) - 1

    def swapped(self) -> ShuffleSpec:
        return ShuffleSpec(self.ones, self.zeros)

    def binary(self, value: int) -> str:
        """Zero-padded binary rendering of ``value`` over the significant region."""
        return format(value, f"0{self.width()}b") if self.width() else ""


class EdgeKind(enum.Enum):
    ROOT = "root"
    SHIFT = "shift"
    SUBTRACT = "subtract"


EDGES = (EdgeKind.ROOT, EdgeKind.SHIFT, EdgeKind.SUBTRACT)


class EnumerationEvent(NamedTuple):
    index: int
    value: int
    parent_index: Optional[int]
    edge: EdgeKind
    subtrahend_used: Optional[int]
    shift_count: int
    subtract_count: int


Visitor = Callable[[EnumerationEvent], object]


def initial_permutation(spec: ShuffleSpec) -> int:
    return (1 << spec.ones) - 1


def shift_step(p: int) -> int:
    return p << 1


def subtract_step(p: int, v: int) -> int:
    if v > p:
        raise SubtractionUnderflowError(f"cannot subtract {v} from {p}")
    return p - v


def advance_subtrahend_on_shift(v: int) -> int:
    return (v << 1) | 1


def advance_subtrahend_on_subtract(v: int) -> int:
    return v << 1


def is_valid_permutation(p: int, spec: ShuffleSpec) -> bool:
    return 0 <= p < (1 << spec.width()) and p.bit_count() == spec.ones


def enumerate_events(spec: ShuffleSpec, visitor: Visitor, backend: str | None = None) -> int:
    """Deliver every permutation of ``spec`` to ``visitor`` in emission order.

    The first event is the root (:func:`initial_permutation`); every later
    event records the parent it was derived from, the edge kind, and for
    subtract edges the subtrahend used. Degenerate specs (either size zero)
    emit only the root. Returns the number of events delivered.
    """
    return _backend.get(backend).walk(spec.zeros, spec.ones, visitor, EnumerationEvent, EDGES)


def count_permutations(spec: ShuffleSpec, backend: str | None = None) -> int:
    """Run the traversal without a visitor and return how many nodes it visited."""
    return _backend.get(backend).count(spec.zeros, spec.ones)


def permutation_values(spec: ShuffleSpec, backend: str | None = None) -> array:
    """All emitted values in emission order, as a compact ``array('Q')``."""
    return _backend.get(backend).collect(spec.zeros, spec.ones)


def collect_events(spec: ShuffleSpec, backend: str | None = None) -> list[EnumerationEvent]:
    events: list[EnumerationEvent] = []
    enumerate_events(spec, events.append, backend)
    return events
