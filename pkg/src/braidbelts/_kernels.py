"""Batch evaluation of braid words on doubled-integer twist vectors.

Letters are coded 0..5 for σ₁, σ₂, σ₃, σ₁⁻¹, σ₂⁻¹, σ₃⁻¹.  Word number ``i``
of length ``L`` in the enumeration is ``i`` written in base 6 with the most
significant digit as the leftmost letter, so index order is the
lexicographic order of token strings ``1 < 2 < 3 < -1 < -2 < -3``.

Two backends compute the same thing: numba-compiled loops and vectorised
numpy.  Set ``BRAIDBELTS_NO_NUMBA=1`` to force numpy; numpy is also used
when numba cannot be imported.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

__all__ = [
    "CODE_TOKENS",
    "PERM_SRC",
    "TWIST_DOUBLED",
    "MAX_ENUM_LENGTH",
    "backend",
    "available_backends",
    "evaluate_codes",
    "evaluate_index_range",
    "codes_for_indices",
]

CODE_TOKENS = (1, 2, 3, -1, -2, -3)
# new[j] = old[PERM_SRC[g, j]] + TWIST_DOUBLED[g, j]
PERM_SRC = np.array(
    [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 0, 2], [0, 2, 1], [2, 1, 0]], dtype=np.int64
)
TWIST_DOUBLED = np.array(
    [[1, 1, -1], [-1, 1, 1], [1, -1, 1], [-1, -1, 1], [1, -1, -1], [-1, 1, -1]],
    dtype=np.int64,
)
# 6**24 < 2**63; enumeration is impractically slow long before that anyway
MAX_ENUM_LENGTH = 12

_DISABLE = os.environ.get("BRAIDBELTS_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if numba is not None else ("numpy",)


def backend() -> str:
    """Backend used when none is requested explicitly."""
    if _DISABLE or numba is None:
        return "numpy"
    return "numba"


def _resolve(name):
    name = name or backend()
    if name not in available_backends():
        raise ValueError(f"unknown or unavailable backend {name!r}")
    return name


# numpy path


def _np_eval_codes(codes, start):
    n, length = codes.shape
    state = np.repeat(start[None, :], n, axis=0)
    for k in range(length - 1, -1, -1):
        g = codes[:, k]
        state = np.take_along_axis(state, PERM_SRC[g], axis=1) + TWIST_DOUBLED[g]
    return state


def _np_eval_range(length, lo, hi):
    idx = np.arange(lo, hi, dtype=np.int64)
    state = np.zeros((hi - lo, 3), dtype=np.int64)
    for _ in range(length):
        g = idx % 6
        idx //= 6
        state = np.take_along_axis(state, PERM_SRC[g], axis=1) + TWIST_DOUBLED[g]
    return state


# numba path

if numba is not None:

    @numba.njit(cache=True)
    def _nb_eval_codes(codes, start, perm, twist):
        n, length = codes.shape
        out = np.empty((n, 3), dtype=np.int64)
        cur = np.empty(3, dtype=np.int64)
        for i in range(n):
            x0 = start[0]
            x1 = start[1]
            x2 = start[2]
            for k in range(length - 1, -1, -1):
                g = codes[i, k]
                cur[0] = x0
                cur[1] = x1
                cur[2] = x2
                x0 = cur[perm[g, 0]] + twist[g, 0]
                x1 = cur[perm[g, 1]] + twist[g, 1]
                x2 = cur[perm[g, 2]] + twist[g, 2]
            out[i, 0] = x0
            out[i, 1] = x1
            out[i, 2] = x2
        return out

    @numba.njit(cache=True)
    def _nb_eval_range(length, lo, hi, perm, twist):
        out = np.empty((hi - lo, 3), dtype=np.int64)
        cur = np.empty(3, dtype=np.int64)
        for i in range(lo, hi):
            rem = i
            x0 = 0
            x1 = 0
            x2 = 0
            for _ in range(length):
                g = rem % 6
                rem //= 6
                cur[0] = x0
                cur[1] = x1
                cur[2] = x2
                x0 = cur[perm[g, 0]] + twist[g, 0]
                x1 = cur[perm[g, 1]] + twist[g, 1]
                x2 = cur[perm[g, 2]] + twist[g, 2]
            out[i - lo, 0] = x0
            out[i - lo, 1] = x1
            out[i - lo, 2] = x2
        return out


def evaluate_codes(codes, start=(0, 0, 0), backend_name=None) -> np.ndarray:
    """Doubled pure twist vectors of a batch of equal-length coded words.

    ``codes`` has shape ``(n_words, length)``; row ``i`` is evaluated
    rightmost letter first from the doubled vector ``start``.
    """
    codes = np.ascontiguousarray(codes, dtype=np.int64)
    if codes.ndim != 2:
        raise ValueError("codes must be a 2-d array")
    if codes.size and (codes.min() < 0 or codes.max() > 5):
        raise ValueError("letter codes must lie in 0..5")
    start = np.asarray(start, dtype=np.int64)
    if _resolve(backend_name) == "numba":
        return _nb_eval_codes(codes, start, PERM_SRC, TWIST_DOUBLED)
    return _np_eval_codes(codes, start)


def evaluate_index_range(length: int, lo: int, hi: int, backend_name=None) -> np.ndarray:
    """Doubled pure twist vectors of enumerated words ``lo <= i < hi`` of ``length``."""
    if length < 0 or length > MAX_ENUM_LENGTH:
        raise ValueError(f"word length must be in 0..{MAX_ENUM_LENGTH}")
    total = 6**length
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"index range [{lo}, {hi}) outside 0..{total}")
    if _resolve(backend_name) == "numba":
        return _nb_eval_range(length, lo, hi, PERM_SRC, TWIST_DOUBLED)
    return _np_eval_range(length, lo, hi)


def codes_for_indices(length: int, indices) -> np.ndarray:
    """Letter codes (leftmost letter first) of enumerated word numbers."""
    idx = np.array(indices, dtype=np.int64, ndmin=1)
    out = np.empty((idx.size, length), dtype=np.int64)
    for k in range(length - 1, -1, -1):
        out[:, k] = idx % 6
        idx = idx // 6
    return out
