"""numpy-backed integer matrix products with proven-safe fallback.

The rest of the library is exact; numpy is only an accelerator.  Every call
first checks an a-priori bound on the largest possible entry of the product,
uses int64 when that bound stays below 2**62, and otherwise falls back to
plain Python integers, so overflow cannot silently occur.
"""

from __future__ import annotations

import numpy as np

_SAFE = 2**62


def _max_abs(rows) -> int:
    return max((abs(v) for row in rows for v in row), default=0)


def imatmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Exact integer product of two row-major matrices."""
    inner = len(b)
    if inner == 0 or not a:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bound = _max_abs(a) * _max_abs(b) * inner
    if bound < _SAFE:
        out = np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)
        return [[int(v) for v in row] for row in out]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def gram_product(rows: list[list[int]]) -> list[list[int]]:
    """rows @ rows^T, exact."""
    return imatmul(rows, [list(c) for c in zip(*rows)])
