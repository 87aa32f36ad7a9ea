"""Vectorized numpy fallback for the prime-field span sweep.

Same contract as _kernel_core.batch_run, selected when numba is disabled
or unavailable.  Products go through einsum, row reduction through whole-row
vector operations; results are bit-for-bit identical to the jit path.
"""

import numpy as np


def _subspace_run(sc, p, rows, k, unity, has_unity, mixing, max_level):
    n = sc.shape[0]
    basis = np.zeros((0, n), dtype=np.int64)
    piv: list[int] = []
    reps: list[np.ndarray] = []
    rep_level: list[int] = []
    d = [0]

    def reduce(v):
        for r in range(len(piv)):
            c = v[piv[r]]
            if c:
                v = (v - c * basis[r]) % p
        return v

    def insert(vec):
        nonlocal basis
        v = reduce(vec % p)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return None
        lead = int(nz[0])
        v = v * int(pow(int(v[lead]), -1, p)) % p
        col = basis[:, lead].copy()
        if col.any():
            basis = (basis - np.outer(col, v)) % p
        pos = int(np.searchsorted(np.asarray(piv, dtype=np.int64), lead))
        basis = np.insert(basis, pos, v, axis=0)
        piv.insert(pos, lead)
        return v

    def mul(a, b):
        return np.einsum("i,j,ijk->k", a, b, sc) % p

    if has_unity:
        v = insert(unity.astype(np.int64))
        if v is not None:
            reps.append(v)
            rep_level.append(0)
            d[0] = 1

    pend: list[tuple[int, int]] = []
    paired = 0
    level = 0
    status = 0
    while True:
        if mixing == 0:
            if len(reps) > paired:
                for i in range(len(reps)):
                    for j in range(len(reps)):
                        if i >= paired or j >= paired:
                            pend.append((i, j))
                paired = len(reps)
            closed = True
            if level == 0:
                for r in range(k):
                    if reduce(rows[r] % p).any():
                        closed = False
                        break
            if closed:
                pend = [(i, j) for i, j in pend if reduce(mul(reps[i], reps[j])).any()]
                if not pend:
                    break
            if level >= max_level:
                status = 1
                break
        elif level >= max_level:
            status = 1
            break

        m = level + 1
        new = 0
        if m == 1:
            for r in range(k):
                v = insert(rows[r].astype(np.int64))
                if v is not None:
                    reps.append(v)
                    rep_level.append(1)
                    new += 1
        elif mixing == 1:
            prev = [reps[t] for t in range(len(reps)) if rep_level[t] == m - 1]
            for u in prev:
                for side in range(2):
                    for r in range(k):
                        prod = mul(u, rows[r]) if side == 0 else mul(rows[r], u)
                        v = insert(prod)
                        if v is not None:
                            reps.append(v)
                            rep_level.append(m)
                            new += 1
        else:
            for i in range(1, m):
                lefts = [t for t in range(len(reps)) if rep_level[t] == i]
                rights = [t for t in range(len(reps)) if rep_level[t] == m - i]
                for t in lefts:
                    for u in rights:
                        v = insert(mul(reps[t], reps[u]))
                        if v is not None:
                            reps.append(v)
                            rep_level.append(m)
                            new += 1
        d.append(new)
        level = m
        if mixing == 1 and new == 0:
            break

    length = max((t for t, dt in enumerate(d) if dt), default=0)
    return length, 1 if len(piv) == n else 0, status


def batch_run(sc, p, rows_pad, sizes, unity, has_unity, mixing, max_level,
              out_len, out_gen, out_status):
    for t in range(sizes.shape[0]):
        length, generating, status = _subspace_run(
            sc, p, rows_pad[t], int(sizes[t]), unity, has_unity, mixing, max_level)
        out_len[t] = length
        out_gen[t] = generating
        out_status[t] = status
