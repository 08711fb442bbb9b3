# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Gaussian elimination over GF(p) on dense int64 matrices."""


cdef long long _inv_mod(long long a, long long p) nogil:
    cdef long long t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(long long[:, ::1] a, long long p):
    """Rank of ``a`` over GF(p); ``a`` is reduced in place.

    Entries must already lie in ``[0, p)`` and ``p`` must be below 2**31.5 so
    that products of two residues fit in a signed 64-bit integer.
    """
    cdef Py_ssize_t n = a.shape[0], m = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    with nogil:
        for c in range(m):
            if r == n:
                break
            piv = -1
            for i in range(r, n):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, m):
                    t = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = t
            inv = _inv_mod(a[r, c], p)
            for j in range(c, m):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(r + 1, n):
                f = a[i, c]
                if f == 0:
                    continue
                for j in range(c, m):
                    if a[r, j] != 0:
                        t = a[i, j] - (f * a[r, j]) % p
                        if t < 0:
                            t += p
                        a[i, j] = t
            r += 1
    return r
