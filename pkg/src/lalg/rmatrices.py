"""Symmetric 0/1 matrices with zero diagonal, up to simultaneous relabeling.

These split the diamond-poset search; as combinatorial objects they are
exactly the simple graphs on m vertices up to isomorphism.
"""

from itertools import combinations

import numpy as np

from .posets import _perm_array

RMatrix = tuple  # tuple[tuple[int, ...], ...], symmetric, zero diagonal


def as_rmatrix(rows) -> RMatrix:
    R = tuple(tuple(int(x) for x in row) for row in rows)
    m = len(R)
    if any(len(row) != m for row in R):
        raise ValueError("R-matrix must be square")
    for i in range(m):
        if R[i][i] != 0:
            raise ValueError("R-matrix diagonal must be zero")
        for j in range(m):
            if R[i][j] not in (0, 1) or R[i][j] != R[j][i]:
                raise ValueError("R-matrix must be symmetric 0/1")
    return R


def _edges(m: int):
    return list(combinations(range(m), 2))


def _mask_to_matrix(mask: int, m: int) -> RMatrix:
    rows = [[0] * m for _ in range(m)]
    for b, (i, j) in enumerate(_edges(m)):
        if mask >> b & 1:
            rows[i][j] = rows[j][i] = 1
    return tuple(tuple(r) for r in rows)


def _matrix_to_mask(R: RMatrix) -> int:
    mask = 0
    for b, (i, j) in enumerate(_edges(len(R))):
        if R[i][j]:
            mask |= 1 << b
    return mask


def canonical_rmatrix(R: RMatrix) -> RMatrix:
    """Lex-least upper triangle over all simultaneous relabelings."""
    m = len(R)
    if m == 1:
        return R
    edges = _edges(m)
    mask = _matrix_to_mask(R)
    best = mask
    # lex-least upper triangle = smallest mask with bit 0 as the most
    # significant position, so compare reversed bit weights
    rev = _reversed_bits(mask, len(edges))
    best_rev = rev
    for perm in _perm_array(m):
        pm = 0
        for b, (i, j) in enumerate(edges):
            a, c = perm[i], perm[j]
            if a > c:
                a, c = c, a
            src = edges.index((a, c))
            if mask >> src & 1:
                pm |= 1 << b
        r = _reversed_bits(pm, len(edges))
        if r < best_rev:
            best_rev, best = r, pm
    return _mask_to_matrix(best, m)


def _reversed_bits(mask: int, nbits: int) -> int:
    out = 0
    for b in range(nbits):
        if mask >> b & 1:
            out |= 1 << (nbits - 1 - b)
    return out


_RMATRIX_CACHE: dict = {}


def enumerate_rmatrices(m: int) -> list:
    """One canonical representative per relabeling class, sorted."""
    if m < 1:
        raise ValueError("size must be at least 1")
    if m == 1:
        return [((0,),)]
    if m in _RMATRIX_CACHE:
        return list(_RMATRIX_CACHE[m])
    edges = _edges(m)
    nb = len(edges)
    perms = _perm_array(m)
    # bit b of every mask, as columns of a (2^nb, nb) array
    masks = np.arange(1 << nb, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(nb)) & 1
    eindex = {e: i for i, e in enumerate(edges)}
    # canonical = lex-greatest *reversed* weighting so that bit 0 is most
    # significant: weight bit b by 2^(nb-1-b) and take the minimum.
    weights = 1 << np.arange(nb - 1, -1, -1, dtype=np.int64)
    best = None
    for perm in perms:
        src = np.empty(nb, dtype=np.int64)
        for b, (i, j) in enumerate(edges):
            a, c = int(perm[i]), int(perm[j])
            if a > c:
                a, c = c, a
            src[b] = eindex[(a, c)]
        key = bits[:, src] @ weights
        best = key if best is None else np.minimum(best, key)
    own = bits @ weights
    reps = np.flatnonzero(own == best)
    out = [_mask_to_matrix(int(masks[r]), m) for r in reps]
    _RMATRIX_CACHE[m] = out
    return list(out)
