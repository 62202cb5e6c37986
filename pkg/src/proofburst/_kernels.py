"""Array kernels for the layout passes.

Proof trees are flattened to pre-order arrays (parents always precede
children, premise order preserved), after which every layout pass is a
plain scan:

  * subtree totals:   one reverse sweep accumulating into parents
  * sunburst angles:  one forward sweep with a per-parent cursor
  * gentzen geometry: reverse width sweep, forward position sweep,
                      reverse centering sweep

These scans are the only hot loops in the package.  By default they are
compiled with numba's @njit; set PROOFBURST_NUMBA=0 to run the identical
pure-Python/numpy versions (also used automatically when numba is not
importable).  benchmarks/bench_layout.py compares the two.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_wanted() -> bool:
    return os.environ.get("PROOFBURST_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


NUMBA_ENABLED = False
if _numba_wanted():
    try:
        from numba import njit  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False


def _subtree_totals(parent, own):
    """own[i] summed over each subtree; pre-order makes a reverse sweep enough."""
    total = own.copy()
    for i in range(total.shape[0] - 1, 0, -1):
        total[parent[i]] += total[i]
    return total


def _sunburst_angles(parent, premise_index, arity, total, own, theta0, span0, clockwise):
    """Angular interval per node: children split the parent's interval in
    premise order, proportionally to their subtree totals.  The last child
    is snapped to the parent's far edge so intervals partition exactly."""
    n = parent.shape[0]
    t0 = np.empty(n, np.float64)
    t1 = np.empty(n, np.float64)
    cursor = np.empty(n, np.float64)
    t0[0] = theta0
    t1[0] = theta0 + span0
    cursor[0] = t1[0] if clockwise else t0[0]
    for i in range(1, n):
        p = parent[i]
        span = (t1[p] - t0[p]) * (total[i] / (total[p] - own[p]))
        last = premise_index[i] == arity[p] - 1
        if clockwise:
            e = cursor[p]
            s = t0[p] if last else e - span
            cursor[p] = s
            cursor[i] = e
        else:
            s = cursor[p]
            e = t1[p] if last else s + span
            cursor[p] = e
            cursor[i] = s
        t0[i] = s
        t1[i] = e
    return t0, t1


def _gentzen_geometry(parent, premise_index, arity, label_w, hgap):
    """Subtree widths, subtree left edges, and box center x per node."""
    n = parent.shape[0]
    width = np.empty(n, np.float64)
    childsum = np.zeros(n, np.float64)
    for i in range(n - 1, -1, -1):
        if arity[i] == 0:
            width[i] = label_w[i]
        else:
            block = childsum[i] + hgap * (arity[i] - 1)
            width[i] = block if block > label_w[i] else label_w[i]
        if i > 0:
            childsum[parent[i]] += width[i]

    first = np.full(n, -1, np.int64)
    last = np.full(n, -1, np.int64)
    for i in range(1, n):
        p = parent[i]
        if premise_index[i] == 0:
            first[p] = i
        if premise_index[i] == arity[p] - 1:
            last[p] = i

    span_x = np.zeros(n, np.float64)
    cursor = np.zeros(n, np.float64)
    if arity[0] > 0:
        cursor[0] = (width[0] - (childsum[0] + hgap * (arity[0] - 1))) * 0.5
    for i in range(1, n):
        p = parent[i]
        span_x[i] = cursor[p]
        cursor[p] += width[i] + hgap
        if arity[i] > 0:
            cursor[i] = span_x[i] + (width[i] - (childsum[i] + hgap * (arity[i] - 1))) * 0.5
        else:
            cursor[i] = span_x[i]

    center = np.empty(n, np.float64)
    for i in range(n - 1, -1, -1):
        if arity[i] == 0:
            center[i] = span_x[i] + width[i] * 0.5
        else:
            center[i] = (center[first[i]] + center[last[i]]) * 0.5
    return width, span_x, center


if NUMBA_ENABLED:
    subtree_totals = njit(cache=True)(_subtree_totals)
    sunburst_angles = njit(cache=True)(_sunburst_angles)
    gentzen_geometry = njit(cache=True)(_gentzen_geometry)
else:
    subtree_totals = _subtree_totals
    sunburst_angles = _sunburst_angles
    gentzen_geometry = _gentzen_geometry

# the uncompiled versions stay importable for benchmarks and tests
PY_KERNELS = {
    "subtree_totals": _subtree_totals,
    "sunburst_angles": _sunburst_angles,
    "gentzen_geometry": _gentzen_geometry,
}


def warmup():
    """Trigger JIT compilation on tiny inputs (no-op without numba)."""
    parent = np.array([-1, 0, 0], np.int64)
    pidx = np.array([0, 0, 1], np.int64)
    ar = np.array([2, 0, 0], np.int64)
    own = np.ones(3, np.float64)
    total = subtree_totals(parent, own)
    sunburst_angles(parent, pidx, ar, total, own, 0.0, 2 * np.pi, False)
    gentzen_geometry(parent, pidx, ar, np.full(3, 10.0), 14.0)
