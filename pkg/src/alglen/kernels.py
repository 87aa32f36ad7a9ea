"""Backend dispatch for the prime-field span sweep.

The hot loop of exact-length computation (one span ladder per subspace)
runs through numba-compiled kernels when available.  Setting the
environment variable ``ALGLEN_NUMBA=0`` selects the vectorized numpy
fallback instead; results are identical either way.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernel_numpy
from .errors import ResourceLimit
from .field import PrimeField

_DISABLED = os.environ.get("ALGLEN_NUMBA", "1").lower() in ("0", "false", "no")

if not _DISABLED:
    try:
        from numba import njit
        from . import _kernel_core

        # jit the call chain leaf-first, rebinding the module globals so
        # each caller compiles against the jitted callees
        for _name in ("_modinv", "_mul_into", "_reduce_inplace", "_is_zero",
                      "_insert", "subspace_length_run", "batch_run"):
            setattr(_kernel_core, _name,
                    njit(cache=True, nogil=True)(getattr(_kernel_core, _name)))
        _jit_batch = _kernel_core.batch_run
    except ImportError:  # pragma: no cover - numba is an optional dependency
        _jit_batch = None
else:
    _jit_batch = None


def backend_name() -> str:
    return "numpy" if _jit_batch is None else "numba"


def kernel_ok(algebra) -> bool:
    """Whether the int64 kernels can run this algebra exactly."""
    f = algebra.field
    if not isinstance(f, PrimeField):
        return False
    n = algebra.dim
    # the numpy path sums n^2 unreduced p^3-sized terms inside one einsum
    return n * n * (f.p - 1) ** 3 < 2**62 and n <= 32


def dense_sc(algebra) -> np.ndarray:
    n = algebra.dim
    sc = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), terms in algebra.sc.items():
        for k, c in terms:
            sc[i - 1, j - 1, k - 1] = int(c)
    return sc


def batch_subspace_lengths(algebra, candidates, mode: str, threads: int = 1,
                           max_level: int | None = None, backend: str = "auto"):
    """(length, generating) per candidate subspace row tuple, in order.

    ``backend`` forces "numba" or "numpy" (used by the benchmark); "auto"
    follows the ALGLEN_NUMBA environment switch.
    """
    n = algebra.dim
    p = algebra.field.p
    sc = dense_sc(algebra)
    mixing = 1 if mode == "mixing" else 0
    cap = max_level if max_level is not None else max(64, n + 2)
    has_unity = algebra.unity is not None
    unity = np.zeros(n, dtype=np.int64)
    if has_unity:
        unity[:] = [int(c) for c in algebra.unity]

    total = len(candidates)
    rows_pad = np.zeros((total, n, n), dtype=np.int64)
    sizes = np.zeros(total, dtype=np.int64)
    for t, rows in enumerate(candidates):
        sizes[t] = len(rows)
        for r, row in enumerate(rows):
            rows_pad[t, r, :] = [int(c) for c in row]

    out_len = np.zeros(total, dtype=np.int64)
    out_gen = np.zeros(total, dtype=np.int64)
    out_status = np.zeros(total, dtype=np.int64)
    if backend == "numba":
        if _jit_batch is None:
            raise RuntimeError("numba backend unavailable or disabled")
        run = _jit_batch
    elif backend == "numpy":
        run = _kernel_numpy.batch_run
    else:
        run = _jit_batch if _jit_batch is not None else _kernel_numpy.batch_run

    if threads > 1 and total > 1:
        bounds = np.linspace(0, total, threads + 1).astype(int)
        spans = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]

        def work(span):
            a, b = span
            run(sc, p, rows_pad[a:b], sizes[a:b], unity, has_unity, mixing,
                cap, out_len[a:b], out_gen[a:b], out_status[a:b])

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, spans))
    else:
        run(sc, p, rows_pad, sizes, unity, has_unity, mixing, cap,
            out_len, out_gen, out_status)

    if out_status.any():
        raise ResourceLimit(f"span sweep exceeded {cap} levels on some subspace")
    return [(int(l), bool(g)) for l, g in zip(out_len, out_gen)]
