"""Finite posets up to isomorphism: enumeration, automorphisms, shapes.

A poset on k elements is a k x k tuple matrix ``P`` of 0/1 with
``P[i][j] = 1`` iff i <= j.  These describe the natural order of an
L-algebra below its unit, so k = n - 1 for tables of size n.
"""

from itertools import permutations

import numpy as np

PosetMatrix = tuple  # tuple[tuple[int, ...], ...] of 0/1

_PERMS_CACHE: dict = {}


def _perm_array(k: int) -> np.ndarray:
    """All permutations of range(k) as one (k!, k) array, lex order."""
    if k not in _PERMS_CACHE:
        _PERMS_CACHE[k] = np.array(list(permutations(range(k))), dtype=np.int64).reshape(-1, k)
    return _PERMS_CACHE[k]


def as_poset(rows) -> PosetMatrix:
    P = tuple(tuple(int(x) for x in row) for row in rows)
    k = len(P)
    if k == 0 or any(len(row) != k for row in P):
        raise ValueError("poset matrix must be square and non-empty")
    if any(x not in (0, 1) for row in P for x in row):
        raise ValueError("poset matrix entries must be 0/1")
    if not is_poset(P):
        raise ValueError("matrix is not reflexive, antisymmetric and transitive")
    return P


def is_poset(P) -> bool:
    k = len(P)
    for i in range(k):
        if not P[i][i]:
            return False
        for j in range(k):
            if i != j and P[i][j] and P[j][i]:
                return False
            if P[i][j]:
                for l in range(k):
                    if P[j][l] and not P[i][l]:
                        return False
    return True


def _relabel_all(P: PosetMatrix) -> np.ndarray:
    """All relabelings of P as a (k!, k, k) array."""
    k = len(P)
    A = np.array(P, dtype=np.uint8)
    perms = _perm_array(k)
    return A[perms[:, :, None], perms[:, None, :]]


def canonical_poset(P: PosetMatrix) -> PosetMatrix:
    """Lex-least relabeling of the relation matrix, row-major."""
    k = len(P)
    flat = _relabel_all(P).reshape(-1, k * k)
    # iterative column filtering finds the lex-least row without a sort
    rows = flat
    for col in range(k * k):
        m = rows[:, col].min()
        rows = rows[rows[:, col] == m]
        if len(rows) == 1:
            break
    best = rows[0]
    return tuple(tuple(int(x) for x in best[i * k:(i + 1) * k]) for i in range(k))


def poset_automorphisms(P: PosetMatrix) -> list:
    """All bijections g of {1..k} with P[i][j] = P[g(i)][g(j)] (1-based images)."""
    k = len(P)
    A = np.array(P, dtype=np.uint8)
    perms = _perm_array(k)
    Q = A[perms[:, :, None], perms[:, None, :]]
    hits = np.all(Q.reshape(-1, k * k) == A.reshape(k * k), axis=1)
    return [tuple(int(x) + 1 for x in perms[i]) for i in np.flatnonzero(hits)]


def antichain(k: int) -> PosetMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def chain(k: int) -> PosetMatrix:
    """The total order 1 < 2 < ... < k."""
    return tuple(tuple(1 if i <= j else 0 for j in range(k)) for i in range(k))


def diamond(k: int) -> PosetMatrix:
    """Bottom element k under an antichain of k-1 elements."""
    if k < 3:
        raise ValueError("diamond needs at least 3 elements")
    return tuple(
        tuple(1 if (i == j or i == k - 1) else 0 for j in range(k))
        for i in range(k)
    )


def is_antichain(P: PosetMatrix) -> bool:
    k = len(P)
    return all(P[i][j] == (1 if i == j else 0) for i in range(k) for j in range(k))


def is_diamond(P: PosetMatrix) -> bool:
    """One bottom element under an antichain of >= 2 elements."""
    k = len(P)
    if k < 3:
        return False
    bottoms = [i for i in range(k) if all(P[i][j] for j in range(k))]
    if len(bottoms) != 1:
        return False
    b = bottoms[0]
    for i in range(k):
        for j in range(k):
            if i == b:
                continue
            if P[i][j] != (1 if i == j else 0):
                return False
    return True


def _upward_closed_subsets(P: PosetMatrix):
    """All up-closed subsets of P, as bitmasks."""
    k = len(P)
    ups = []
    for mask in range(1 << k):
        ok = True
        for x in range(k):
            if mask >> x & 1:
                for y in range(k):
                    if P[x][y] and not mask >> y & 1:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            ups.append(mask)
    return ups


_POSETS_CACHE: dict = {}


def enumerate_posets(k: int) -> list:
    """One canonical representative per isomorphism class of k-posets.

    Built by repeatedly adjoining a new minimal element below an
    up-closed subset of a smaller poset, canonicalizing at each level.
    Returned sorted by matrix encoding.
    """
    if k < 1:
        raise ValueError("poset size must be at least 1")
    if k in _POSETS_CACHE:
        return list(_POSETS_CACHE[k])
    level = {((1,),)}
    for size in range(1, k):
        nxt = set()
        for P in level:
            for up in _upward_closed_subsets(P):
                rows = [list(row) + [0] for row in P]
                newrow = [1 if up >> j & 1 else 0 for j in range(size)] + [1]
                rows.append(newrow)
                nxt.add(canonical_poset(tuple(tuple(r) for r in rows)))
        level = nxt
    out = sorted(level)
    _POSETS_CACHE[k] = out
    return list(out)


def poset_to_text(P: PosetMatrix) -> str:
    """File format: first line k, then k rows of 0/1 digits."""
    k = len(P)
    lines = [str(k)]
    lines += [" ".join(str(x) for x in row) for row in P]
    return "\n".join(lines) + "\n"


def poset_from_text(text: str) -> PosetMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    k = int(lines[0])
    if len(lines) != k + 1:
        raise ValueError(f"expected {k} rows, got {len(lines) - 1}")
    return as_poset([ln.split() for ln in lines[1:]])
