"""Brute-force reference enumerations used to check the traversal.

Two generators with unrelated mechanisms: an exhaustive scan of the
significant region filtered by popcount, and a same-popcount successor
walk. Neither shares code with the kernels.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from shufflebits.core import InstanceTooLargeError, ShuffleSpec, permutation_values

SCAN_MAX_WIDTH = 30
LEX_MAX_WIDTH = 40


class OracleTooLargeError(InstanceTooLargeError):
    pass


def scan_enumerate(spec: ShuffleSpec) -> list[int]:
    if spec.width() > SCAN_MAX_WIDTH:
        raise OracleTooLargeError(f"scan oracle is limited to width {SCAN_MAX_WIDTH}")
    ones = spec.ones
    lo = (1 << ones) - 1
    return [v for v in range(lo, 1 << spec.width()) if v.bit_count() == ones]


def next_same_popcount(v: int) -> int:
    """Smallest integer greater than ``v`` with the same number of set bits (``v > 0``)."""
    lowest = v & -v
    ripple = v + lowest
    return ripple | (((v ^ ripple) >> 2) // lowest)


def lex_enumerate(spec: ShuffleSpec) -> list[int]:
    if spec.width() > LEX_MAX_WIDTH:
        raise OracleTooLargeError(f"successor oracle is limited to width {LEX_MAX_WIDTH}")
    v = (1 << spec.ones) - 1
    if v == 0:
        return [0]
    stop = v << spec.zeros
    out = [v]
    while v != stop:
        v = next_same_popcount(v)
        out.append(v)
    return out


ORACLES = {"scan": scan_enumerate, "lex": lex_enumerate}


def complement_mask(spec: ShuffleSpec) -> int:
    return spec.full_mask()


def complement_all(values, spec: ShuffleSpec) -> list[int]:
    mask = complement_mask(spec)
    return [v ^ mask for v in values]


def verify_swap_isomorphism(spec: ShuffleSpec, backend: str | None = None) -> bool:
    """Check that complementing the output for ``spec`` gives the output for the swapped spec."""
    direct = permutation_values(spec, backend)
    swapped = permutation_values(spec.swapped(), backend)
    return sorted(complement_all(direct, spec)) == sorted(swapped)


@dataclass
class VerificationReport:
    spec: ShuffleSpec
    algorithm_count: int
    oracle_count: int
    missing: list[int] = field(default_factory=list)
    extra: list[int] = field(default_factory=list)
    duplicates: list[int] = field(default_factory=list)
    oracle: str = "scan"

    @property
    def passed(self) -> bool:
        return (
            not self.missing
            and not self.extra
            and not self.duplicates
            and self.algorithm_count == self.oracle_count
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{status} zeros={self.spec.zeros} ones={self.spec.ones} oracle={self.oracle}: "
            f"{self.algorithm_count} permutations (oracle {self.oracle_count})"
        ]
        for name in ("missing", "extra", "duplicates"):
            values = getattr(self, name)
            if values:
                lines.append(f"  {name}: {' '.join(map(str, values))}")
        return "\n".join(lines)


def verify_against_oracle(
    spec: ShuffleSpec, oracle: str = "scan", backend: str | None = None
) -> VerificationReport:
    expected = ORACLES[oracle](spec)
    got = permutation_values(spec, backend)
    seen = Counter(got)
    expected_set = set(expected)
    return VerificationReport(
        spec=spec,
        algorithm_count=len(got),
        oracle_count=len(expected),
        missing=sorted(expected_set.difference(seen)),
        extra=sorted(set(seen).difference(expected_set)),
        duplicates=sorted(v for v, n in seen.items() if n > 1),
        oracle=oracle,
    )
