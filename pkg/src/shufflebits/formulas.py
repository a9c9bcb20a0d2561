"""Exact result-set size and storage predictions.

All arithmetic is on Python ints, so values past 64 bits (e.g. the
``(40, 40)`` and ``(32, 80)`` instances) come out exact.
"""


def shuffle_count(x: int, y: int) -> int:
    """Number of interleavings of ``x`` and ``y`` homogeneous elements, ``(x+y)! / (x! y!)``.

    Evaluated multiplicatively over the smaller size; every intermediate
    division is exact because the running product is itself a binomial
    coefficient.
    """
    if x < 0 or y < 0:
        raise ValueError(f"set sizes must be non-negative, got ({x}, {y})")
    k = min(x, y)
    n = x + y
    result = 1
    for step in range(1, k + 1):
        result = result * (n - k + step) // step
    return result


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError(f"log2 undefined for {n}")
    return (n - 1).bit_length()


def bytes_per_permutation(x: int, y: int) -> int:
    """Bytes reserved per stored permutation: ``ceil(2**ceil(log2(x+y)) / 8)``."""
    bits = 1 << ceil_log2(x + y)
    return -(-bits // 8)


def storage_bytes(x: int, y: int) -> int:
    """Bytes needed to hold the complete shuffle product of sizes ``x`` and ``y``."""
    if x < 0 or y < 0:
        raise ValueError(f"set sizes must be non-negative, got ({x}, {y})")
    if x + y == 0:
        raise ValueError("storage is undefined for two empty sets (log2 of 0)")
    return shuffle_count(x, y) * bytes_per_permutation(x, y)
