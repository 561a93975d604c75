"""Compiled Sturm-count kernel for zero-diagonal tridiagonal matrices."""

import os

import numba
import numpy as np
from numba import prange

# the bundled TBB is often too old; try OpenMP first to keep imports quiet
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

# the running pair (delta_s, delta_{s-1}) is rescaled by 2**-512 past 2**512
RESCALE_ABOVE = 2.0**512
RESCALE_BELOW = 2.0**-512
RESCALE_BY = 2.0**-512
RESCALE_UP = 2.0**512
# stands in for an exact zero of delta_s; sign copied from delta_{s-1}
NUDGE = 1e-300
BLOCK = 512


@numba.njit(cache=True)
def _counts_block(h2, probes, out):
    P = probes.shape[0]
    prev = np.ones(P)
    cur = probes.copy()
    for p in range(P):
        out[p] = 0
        if cur[p] == 0.0:
            cur[p] = NUDGE
        if cur[p] > 0.0:
            out[p] = 1
    for s in range(h2.shape[0]):
        b = h2[s]
        for p in range(P):
            x = cur[p]
            v = probes[p] * x - b * prev[p]
            if v == 0.0:
                v = NUDGE if x > 0.0 else -NUDGE
            ax = abs(v)
            if ax > RESCALE_ABOVE:
                v *= RESCALE_BY
                x *= RESCALE_BY
            elif ax < RESCALE_BELOW and abs(x) < RESCALE_BELOW:
                v *= RESCALE_UP
                x *= RESCALE_UP
            if (v > 0.0) == (x > 0.0):
                out[p] += 1
            prev[p] = x
            cur[p] = v


@numba.njit(cache=True, parallel=True)
def _counts_parallel(h2, probes):
    P = probes.shape[0]
    out = np.zeros(P, np.int64)
    nblocks = (P + BLOCK - 1) // BLOCK
    for blk in prange(nblocks):
        lo = blk * BLOCK
        hi = min(P, lo + BLOCK)
        _counts_block(h2, probes[lo:hi], out[lo:hi])
    return out


def _thread_cap() -> int:
    raw = os.environ.get("QES_THREADS", "0").strip() or "0"
    try:
        want = int(raw)
    except ValueError:
        raise ValueError(f"QES_THREADS must be an integer, got {raw!r}") from None
    if want < 0:
        raise ValueError("QES_THREADS must be >= 0")
    available = numba.config.NUMBA_NUM_THREADS
    return available if want == 0 else min(want, available)


def sturm_counts(h2: np.ndarray, probes: np.ndarray) -> np.ndarray:
    """Eigenvalue counts below each probe.

    Runs delta_{s+1} = e delta_s - h2[s] delta_{s-1} for every probe and
    counts sign agreements between consecutive terms.  An exact zero
    delta_s takes the sign of delta_{s-1}, which is the limit of moving the
    probe upward by an infinitesimal amount.  Probe blocks run in parallel,
    capped by the QES_THREADS environment variable (0 = all cores).
    """
    h2 = np.ascontiguousarray(h2, dtype=np.float64)
    probes = np.ascontiguousarray(probes, dtype=np.float64)
    if probes.size <= BLOCK:
        out = np.zeros(probes.size, np.int64)
        _counts_block(h2, probes, out)
        return out
    numba.set_num_threads(_thread_cap())
    return _counts_parallel(h2, probes)
