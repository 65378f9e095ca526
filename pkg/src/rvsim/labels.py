"""Label codings that break symmetry between the two agents.

Codes are plain 0/1 strings, most significant bit first.
"""

from __future__ import annotations

import math


def prefix_free_code(label: int) -> str:
    """Each bit of the label's binary form doubled, then the suffix ``01``.

    Distinct labels yield codes where neither is a prefix of the other: the
    doubled body never contains the pattern ``01`` at an odd position, so the
    terminator is unambiguous.
    """
    if label < 1:
        raise ValueError(f"label must be >= 1, got {label}")
    return "".join(b + b for b in format(label, "b")) + "01"


def fast_phase_bits(label: int) -> str:
    """Block schedule for the delay-tolerant algorithm: a leading 1, then
    each bit of ``prefix_free_code(label)`` doubled; odd length 2m+1."""
    return "1" + "".join(b + b for b in prefix_free_code(label))


def minimal_code_length(space_size: int, weight: int) -> int:
    """Least t with C(t, weight) >= space_size."""
    if weight < 1:
        raise ValueError(f"weight must be >= 1, got {weight}")
    if space_size < 2:
        raise ValueError(f"label space must have >= 2 labels, got {space_size}")
    t = weight
    while math.comb(t, weight) < space_size:
        t += 1
    return t


def unrank_weighted_code(rank: int, length: int, weight: int) -> str:
    """The ``rank``-th smallest bit string of the given length with exactly
    ``weight`` ones, ordered lexicographically; ``rank`` is 1-based."""
    total = math.comb(length, weight)
    if not 1 <= rank <= total:
        raise ValueError(f"rank {rank} out of range 1..{total} for C({length},{weight})")
    out = []
    r, w = rank, weight
    for pos in range(length):
        remaining = length - pos - 1
        with_zero = math.comb(remaining, w) if w <= remaining else 0
        if w == 0 or r <= with_zero:
            out.append("0")
        else:
            r -= with_zero
            w -= 1
            out.append("1")
    return "".join(out)


def assign_weighted_code(label: int, space_size: int, weight: int) -> str:
    """Constant-weight relabeling: the label-th smallest weight-w code of
    the minimal length that fits the whole label space."""
    if not 1 <= label <= space_size:
        raise ValueError(f"label {label} outside space 1..{space_size}")
    t = minimal_code_length(space_size, weight)
    return unrank_weighted_code(label, t, weight)
