"""Bulk message-space enumeration shared by the oracle and decoder filters.

Messages are indexed by the odometer over coefficient vectors in the running
order v(a, b) = a*k + b, with v = 0 the most significant digit. The numpy
path is exact as long as a dot product of canonical residues fits in int64;
otherwise a plain-integer path is used.
"""

from __future__ import annotations

import numpy as np


def int64_safe(p: int, width: int) -> bool:
    return width * (p - 1) * (p - 1) < (1 << 62)


def message_digits(index: int, q: int, width: int) -> list[int]:
    """Coefficient vector of the message with the given odometer index."""
    return [(index // q ** (width - 1 - v)) % q for v in range(width)]


def _chunk_distances_np(e: np.ndarray, s: int, n: int, p: int, q: int, width: int,
                        received: np.ndarray, start: int, count: int) -> np.ndarray:
    idx = np.arange(start, start + count, dtype=np.int64)
    digits = np.stack([(idx // q ** (width - 1 - v)) % q for v in range(width)])
    words = (e @ digits) % p
    mismatch = (words != received[:, None]).reshape(n, s, count).any(axis=1)
    return mismatch.sum(axis=0)


def _chunk_distances_py(e, s, n, p, q, width, received, start, count):
    out = []
    for index in range(start, start + count):
        vec = message_digits(index, q, width)
        dist = 0
        for i in range(n):
            for j in range(s):
                row = e[i * s + j]
                if sum(a * b for a, b in zip(row, vec)) % p != received[i * s + j]:
                    dist += 1
                    break
        out.append(dist)
    return out


def near_messages(e: list[list[int]], s: int, n: int, p: int,
                  received_flat: list[int], radius: int,
                  start: int, stop: int, chunk: int = 1 << 16):
    """Yield (message_index, column_distance) for every message in
    [start, stop) whose codeword is within the radius, ascending."""
    width = len(e[0])
    q = p
    use_np = int64_safe(p, width)
    enp = np.array(e, dtype=np.int64) if use_np else None
    rnp = np.array(received_flat, dtype=np.int64) if use_np else None
    for lo in range(start, stop, chunk):
        count = min(chunk, stop - lo)
        if use_np:
            dists = _chunk_distances_np(enp, s, n, p, q, width, rnp, lo, count)
            for off in np.nonzero(dists <= radius)[0]:
                yield lo + int(off), int(dists[off])
        else:
            dists = _chunk_distances_py(e, s, n, p, q, width, received_flat, lo, count)
            for off, d in enumerate(dists):
                if d <= radius:
                    yield lo + off, d


def min_nonzero_weight(e: list[list[int]], s: int, n: int, p: int,
                       chunk: int = 1 << 16) -> int:
    """Minimum number of nonzero columns over all nonzero messages."""
    width = len(e[0])
    zero = [0] * (n * s)
    total = p ** width
    best = n
    for index, dist in near_messages(e, s, n, p, zero, n, 1, total, chunk):
        best = min(best, dist)
        if best == 0:
            break
    return best
