"""Loop kernels for prime-field span sweeps, written to compile under numba.

Everything here works on int64 numpy arrays holding residues mod p.  The
same source runs interpreted when numba is disabled; the vectorized numpy
fallback lives in _kernel_numpy.py.  All arithmetic is exact integer
arithmetic; callers guarantee (p-1)^2 * dim^2 fits in int64.
"""

import numpy as np


def _modinv(a, p):
    # Fermat inverse a^(p-2) mod p; a must be nonzero mod p
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def _mul_into(sc, a, b, out, p):
    n = a.shape[0]
    for k in range(n):
        out[k] = 0
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n):
            bj = b[j]
            if bj == 0:
                continue
            c = ai * bj % p
            if c == 0:
                continue
            for k in range(n):
                s = sc[i, j, k]
                if s != 0:
                    out[k] = (out[k] + c * s) % p


def _reduce_inplace(basis, piv, nrows, v, p):
    n = v.shape[0]
    for r in range(nrows):
        c = v[piv[r]] % p
        if c != 0:
            for j in range(n):
                v[j] = (v[j] - c * basis[r, j]) % p


def _is_zero(v):
    for j in range(v.shape[0]):
        if v[j] != 0:
            return False
    return True


def _insert(basis, piv, nrows, v, p):
    """Reduce v, normalize, back-eliminate; returns new row count.

    On success v holds the normalized residue row that was appended.
    """
    n = v.shape[0]
    _reduce_inplace(basis, piv, nrows, v, p)
    lead = -1
    for j in range(n):
        if v[j] != 0:
            lead = j
            break
    if lead < 0:
        return nrows
    inv = _modinv(v[lead], p)
    for j in range(n):
        v[j] = v[j] * inv % p
    for r in range(nrows):
        c = basis[r, lead]
        if c != 0:
            for j in range(n):
                basis[r, j] = (basis[r, j] - c * v[j]) % p
    pos = nrows
    for r in range(nrows):
        if piv[r] > lead:
            pos = r
            break
    for r in range(nrows, pos, -1):
        for j in range(n):
            basis[r, j] = basis[r - 1, j]
        piv[r] = piv[r - 1]
    for j in range(n):
        basis[pos, j] = v[j]
    piv[pos] = lead
    return nrows + 1


def subspace_length_run(sc, p, rows, k, unity, has_unity, mixing, max_level):
    """Length and generating flag for the span ladder of one subspace basis.

    Returns (length, generating, status); status 0 ok, 1 level cap hit.
    General mode (mixing=0) terminates on closure of the span; mixing mode
    stops at the first zero difference.
    """
    n = sc.shape[0]
    basis = np.zeros((n, n), dtype=np.int64)
    piv = np.zeros(n, dtype=np.int64)
    nrows = 0
    reps = np.zeros((n + 1, n), dtype=np.int64)
    rep_level = np.zeros(n + 1, dtype=np.int64)
    nreps = 0
    d = np.zeros(max_level + 2, dtype=np.int64)
    scratch = np.zeros(n, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)

    if has_unity:
        for j in range(n):
            v[j] = unity[j] % p
        new_nrows = _insert(basis, piv, nrows, v, p)
        if new_nrows > nrows:
            for j in range(n):
                reps[nreps, j] = v[j]
            rep_level[nreps] = 0
            nreps = nreps + 1
            nrows = new_nrows
            d[0] = 1

    # closure bookkeeping: pending spanning-set pairs not yet known absorbed
    pend_i = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    pend_j = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    npend = 0
    paired = 0

    level = 0
    status = 0
    while True:
        if mixing == 0:
            # refresh pending pairs with newly added spanning members
            if nreps > paired:
                for i in range(nreps):
                    for j in range(nreps):
                        if i >= paired or j >= paired:
                            pend_i[npend] = i
                            pend_j[npend] = j
                            npend += 1
                paired = nreps
            closed = True
            if level == 0:
                for r in range(k):
                    for j in range(n):
                        v[j] = rows[r, j] % p
                    _reduce_inplace(basis, piv, nrows, v, p)
                    if not _is_zero(v):
                        closed = False
                        break
            if closed:
                keep = 0
                for t in range(npend):
                    _mul_into(sc, reps[pend_i[t]], reps[pend_j[t]], scratch, p)
                    for j in range(n):
                        v[j] = scratch[j]
                    _reduce_inplace(basis, piv, nrows, v, p)
                    if not _is_zero(v):
                        pend_i[keep] = pend_i[t]
                        pend_j[keep] = pend_j[t]
                        keep += 1
                npend = keep
                if npend == 0:
                    break
            if level >= max_level:
                status = 1
                break
        else:
            if level >= max_level:
                status = 1
                break

        m = level + 1
        new = 0
        if m == 1:
            for r in range(k):
                for j in range(n):
                    v[j] = rows[r, j] % p
                new_nrows = _insert(basis, piv, nrows, v, p)
                if new_nrows > nrows:
                    for j in range(n):
                        reps[nreps, j] = v[j]
                    rep_level[nreps] = 1
                    nreps += 1
                    nrows = new_nrows
                    new += 1
        elif mixing == 1:
            for t in range(nreps):
                if rep_level[t] != m - 1:
                    continue
                for side in range(2):
                    for r in range(k):
                        if side == 0:
                            _mul_into(sc, reps[t], rows[r], scratch, p)
                        else:
                            _mul_into(sc, rows[r], reps[t], scratch, p)
                        for j in range(n):
                            v[j] = scratch[j]
                        new_nrows = _insert(basis, piv, nrows, v, p)
                        if new_nrows > nrows:
                            for j in range(n):
                                reps[nreps, j] = v[j]
                            rep_level[nreps] = m
                            nreps += 1
                            nrows = new_nrows
                            new += 1
        else:
            for i in range(1, m):
                for t in range(nreps):
                    if rep_level[t] != i:
                        continue
                    for u in range(nreps):
                        if rep_level[u] != m - i:
                            continue
                        _mul_into(sc, reps[t], reps[u], scratch, p)
                        for j in range(n):
                            v[j] = scratch[j]
                        new_nrows = _insert(basis, piv, nrows, v, p)
                        if new_nrows > nrows:
                            for j in range(n):
                                reps[nreps, j] = v[j]
                            rep_level[nreps] = m
                            nreps += 1
                            nrows = new_nrows
                            new += 1
        d[m] = new
        level = m
        if mixing == 1 and new == 0:
            break

    length = 0
    for t in range(level + 1):
        if d[t] != 0 and t > length:
            length = t
    generating = 1 if nrows == n else 0
    return length, generating, status


def batch_run(sc, p, rows_pad, sizes, unity, has_unity, mixing, max_level,
              out_len, out_gen, out_status):
    """Run subspace_length_run over a padded batch of subspace bases."""
    for t in range(sizes.shape[0]):
        length, generating, status = subspace_length_run(
            sc, p, rows_pad[t], sizes[t], unity, has_unity, mixing, max_level)
        out_len[t] = length
        out_gen[t] = generating
        out_status[t] = status
