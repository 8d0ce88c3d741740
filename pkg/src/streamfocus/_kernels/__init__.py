"""Hot numeric kernels with a compiled core and a pure-numpy fallback.

The compiled extension (``streamfocus._kernels._core``, built from
``_core.pyx``) is preferred; when it is missing, or when the environment
variable ``STREAMFOCUS_PURE=1`` is set, the pure backend takes over. Both
backends implement the same algorithms with the same operation order, so
their outputs are bit-identical; ``tests/test_kernels.py`` checks that.

Public entry points (`solve_assignment`, `iou_matrix`, `rgb_histogram`)
validate and normalize inputs here, then dispatch to the active backend.
"""

import os

import numpy as np

from . import pure as _pure

_backend = _pure
BACKEND = "pure"

if os.environ.get("STREAMFOCUS_PURE", "").strip().lower() not in {"1", "true", "yes"}:
    try:
        from . import _core as _compiled

        _backend = _compiled
        BACKEND = "compiled"
    except ImportError:
        pass


def backend_name() -> str:
    """Name of the active backend: 'compiled' or 'pure'."""
    return BACKEND


def get_backends():
    """All importable backends as {name: module}; used by tests and benchmarks."""
    found = {"pure": _pure}
    try:
        from . import _core as _compiled

        found["compiled"] = _compiled
    except ImportError:
        pass
    return found


def solve_assignment(cost, _impl=None):
    """Minimum-cost assignment for a rectangular cost matrix.

    Entries must be non-negative; ``inf`` marks a forbidden pair. Returns an
    int array ``row_to_col`` of length R with -1 for unassigned rows. Among
    assignments that match the maximum number of allowed pairs, the returned
    one has minimum total cost; forbidden pairs are never matched.
    """
    impl = _impl if _impl is not None else _backend
    cost = np.ascontiguousarray(cost, dtype=np.float64)
    if cost.ndim != 2:
        raise ValueError("cost matrix must be 2-dimensional")
    n_rows, n_cols = cost.shape
    if n_rows == 0 or n_cols == 0:
        return np.full(n_rows, -1, dtype=np.intp)
    if np.isnan(cost).any():
        raise ValueError("cost matrix contains NaN")
    allowed = np.isfinite(cost)
    if bool((cost[allowed] < 0).any()):
        raise ValueError("cost matrix entries must be non-negative")

    # Pad to square; forbidden entries become a big-M that dominates any
    # feasible total, so the solver both maximizes allowed matches and
    # minimizes cost among them. Dummy rows/cols cost 0 and absorb leftovers.
    n = max(n_rows, n_cols)
    big = float(cost[allowed].sum()) + 1.0
    square = np.zeros((n, n), dtype=np.float64)
    square[:n_rows, :n_cols] = np.where(allowed, cost, big)

    row_to_col = np.asarray(impl.lap_square(square), dtype=np.intp)[:n_rows]
    out = row_to_col.copy()
    for r in range(n_rows):
        c = row_to_col[r]
        if c >= n_cols or not allowed[r, c]:
            out[r] = -1
    return out


def iou_matrix(boxes_a, boxes_b, _impl=None):
    """Pairwise IoU for two arrays of (x, y, w, h) boxes; shape (len_a, len_b)."""
    impl = _impl if _impl is not None else _backend
    a = np.ascontiguousarray(boxes_a, dtype=np.float64).reshape(-1, 4)
    b = np.ascontiguousarray(boxes_b, dtype=np.float64).reshape(-1, 4)
    return impl.iou_matrix(a, b)


def rgb_histogram(pixels, bins: int, _impl=None):
    """Joint RGB histogram counts with ``bins`` levels per channel.

    ``pixels`` is an (n, 3) uint8 array; returns float64 counts of length
    ``bins**3`` indexed as ``(rb * bins + gb) * bins + bb`` where each channel
    bin is ``value * bins // 256``.
    """
    impl = _impl if _impl is not None else _backend
    if not 1 <= bins <= 256:
        raise ValueError("bins must be in [1, 256]")
    pix = np.ascontiguousarray(pixels, dtype=np.uint8).reshape(-1, 3)
    return impl.rgb_histogram(pix, bins)
