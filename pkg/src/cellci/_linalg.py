"""Exact integer linear algebra: fraction-free rank and integer row echelon form."""

from __future__ import annotations


def rank(rows: list[list[int]]) -> int:
    """Rank over Q via Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((k for k in range(r, len(m)) if m[k][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for k in range(r + 1, len(m)):
            f = m[k][col]
            row = m[k]
            top = m[r]
            # Bareiss step: exact division by the previous pivot
            for c in range(col, ncols):
                row[c] = (p * row[c] - f * top[c]) // prev
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Integer row echelon form H with a unimodular U such that U @ rows == H.

    Only unimodular row operations are used, so the rows of H span the same
    lattice as the input. Zero rows of H are dropped along with their rows of U.
    """
    n = len(rows)
    if n == 0:
        return [], []
    h = [list(r) for r in rows]
    u = [[int(i == k) for k in range(n)] for i in range(n)]
    ncols = len(h[0])
    r = 0
    for col in range(ncols):
        if r == n:
            break
        # Euclid on column `col` among rows r..n-1
        while True:
            nz = [k for k in range(r, n) if h[k][col] != 0]
            if not nz:
                break
            k0 = min(nz, key=lambda k: abs(h[k][col]))
            h[r], h[k0] = h[k0], h[r]
            u[r], u[k0] = u[k0], u[r]
            done = True
            for k in range(r + 1, n):
                if h[k][col]:
                    q = h[k][col] // h[r][col]
                    h[k] = [x - q * y for x, y in zip(h[k], h[r])]
                    u[k] = [x - q * y for x, y in zip(u[k], u[r])]
                    if h[k][col]:
                        done = False
            if done:
                break
        if any(h[k][col] for k in range(r, n)):
            if h[r][col] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            r += 1
    return h[:r], u[:r]


def solve_integer(rows: list[list[int]], target: list[int]) -> list[int] | None:
    """Integer coefficients c with sum c_k rows[k] == target, or None if none exist."""
    if not rows:
        return [] if not any(target) else None
    h, u = echelon(rows)
    residual = list(target)
    coeffs_h = []
    for hr in h:
        col = next(c for c, x in enumerate(hr) if x)
        if any(residual[:col]):
            return None
        q, rem = divmod(residual[col], hr[col])
        if rem:
            return None
        coeffs_h.append(q)
        if q:
            residual = [x - q * y for x, y in zip(residual, hr)]
    if any(residual):
        return None
    out = [0] * len(rows)
    for q, ur in zip(coeffs_h, u):
        for k, x in enumerate(ur):
            out[k] += q * x
    return out
