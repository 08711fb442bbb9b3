"""Pure-Python GF(p) elimination, used when the compiled kernel is unavailable."""

from __future__ import annotations


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) of a dense matrix given as a list of rows (mutated)."""
    a = [[x % p for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return 0
    m = len(a[0])
    r = 0
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][c]), -1)
        if piv < 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        prow = [(x * inv) % p for x in a[r]]
        a[r] = prow
        nz = [j for j in range(c, m) if prow[j]]
        for i in range(r + 1, n):
            f = a[i][c]
            if f:
                row = a[i]
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
        r += 1
    return r
