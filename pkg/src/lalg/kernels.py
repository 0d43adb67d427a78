"""Numba search kernel for table enumeration.

Tables are int8 matrices with 0-based entries, value n-1 the unit and
-1 unassigned.  A single driver covers the four search modes; mode
constants match search.py.  The solver keeps a trail of assignments,
propagates equalities implied by the cycloid equation and the active
mode, and prunes branches that a case symmetry proves non-minimal.
Each emitted table passes a full verification at the leaf, so the
in-search propagation only needs to be sound, not complete.
"""

import numpy as np
from numba import njit

MODE_GENERAL = 0
MODE_POSET = 1
MODE_DISCRETE = 2
MODE_DIAMOND = 3


@njit(cache=True)
def _assign(M, trail, state, no_u, n, cell, v):
    r = cell // n
    c = cell % n
    cur = M[r, c]
    if cur >= 0:
        return cur == v
    if v == n - 1 and no_u[cell] == 1:
        return False
    M[r, c] = v
    trail[state[0]] = cell
    state[0] += 1
    return True


@njit(cache=True)
def _undo(M, trail, state, n, mark):
    t = state[0]
    while t > mark:
        t -= 1
        cell = trail[t]
        M[cell // n, cell % n] = -1
    state[0] = mark
    state[1] = mark


@njit(cache=True)
def _check_cycloid(M, trail, state, no_u, n, i, j, k):
    """Propagate M[M_ij, M_ik] = M[M_ji, M_jk] once the inner cells exist."""
    la = M[i, j]
    lb = M[i, k]
    if la < 0 or lb < 0:
        return True
    ra = M[j, i]
    rb = M[j, k]
    if ra < 0 or rb < 0:
        return True
    v1 = M[la, lb]
    v2 = M[ra, rb]
    if v1 >= 0:
        if v2 >= 0:
            return v1 == v2
        return _assign(M, trail, state, no_u, n, ra * n + rb, v1)
    if v2 >= 0:
        return _assign(M, trail, state, no_u, n, la * n + lb, v2)
    return True


@njit(cache=True)
def _eq_cells(M, trail, state, no_u, n, r1, c1, r2, c2):
    """Propagate equality between two cells."""
    v1 = M[r1, c1]
    v2 = M[r2, c2]
    if v1 >= 0:
        if v2 >= 0:
            return v1 == v2
        return _assign(M, trail, state, no_u, n, r2 * n + c2, v1)
    if v2 >= 0:
        return _assign(M, trail, state, no_u, n, r1 * n + c1, v2)
    return True


@njit(cache=True)
def _poset_subst(M, trail, state, no_u, n, i, j, k):
    """With i <= j in the case order, propagate M[i,k] = M[M_ji, M_jk]."""
    a = M[j, i]
    b = M[j, k]
    if a < 0 or b < 0:
        return True
    return _eq_cells(M, trail, state, no_u, n, i, k, a, b)


@njit(cache=True)
def _propagate(M, trail, state, no_u, n, mode, ucell, Prel, sp, R, mm, hilbert):
    u = n - 1
    while state[1] < state[0]:
        cell = trail[state[1]]
        state[1] += 1
        r = cell // n
        c = cell % n
        v = M[r, c]
        if r >= u or c >= u or r == c:
            continue
        # antisymmetry of the natural order
        if v == u and M[c, r] == u:
            return False
        # cycloid triples having (r, c) among their inner cells
        for k in range(u):
            if k != r and k != c:
                if not _check_cycloid(M, trail, state, no_u, n, r, c, k):
                    return False
                if not _check_cycloid(M, trail, state, no_u, n, r, k, c):
                    return False
                if not _check_cycloid(M, trail, state, no_u, n, k, r, c):
                    return False
        if mode == MODE_POSET or mode == MODE_DIAMOND:
            # monotonicity: P[j,k] = 1 forces M[i,j] <= M[i,k]
            for k in range(u):
                if k != c:
                    if Prel[c, k] == 1:
                        b = M[r, k]
                        if b >= 0 and ucell[v, b] == 0:
                            return False
                    if Prel[k, c] == 1:
                        a = M[r, k]
                        if a >= 0 and ucell[a, v] == 0:
                            return False
            # substitution: P[i,j] = 1 forces M[i,k] = M[M_ji, M_jk]
            if c != r and Prel[c, r] == 1:
                for k in range(u):
                    if k != c and k != r:
                        if not _poset_subst(M, trail, state, no_u, n, c, r, k):
                            return False
            for i2 in range(u):
                if i2 != r and i2 != c and Prel[i2, r] == 1:
                    if not _poset_subst(M, trail, state, no_u, n, i2, r, c):
                        return False
            for j2 in range(u):
                if j2 != r and j2 != c and Prel[r, j2] == 1:
                    if not _poset_subst(M, trail, state, no_u, n, r, j2, c):
                        return False
        if mode == MODE_DISCRETE:
            for t in range(u):
                if t == c or t == r:
                    continue
                w = M[r, t]
                if sp[r, c, t] == 1:
                    if w >= 0:
                        if w != v:
                            return False
                    else:
                        if not _assign(M, trail, state, no_u, n, r * n + t, v):
                            return False
                else:
                    if w >= 0 and w == v:
                        return False
        if mode == MODE_DIAMOND and r < mm and c < mm:
            if R[r, c] == 1:
                for k in range(mm):
                    b = M[r, k]
                    if b >= 0 and ucell[v, b] == 0:
                        return False
            for j2 in range(mm):
                if j2 != c and R[r, j2] == 1:
                    a = M[r, j2]
                    if a >= 0 and ucell[a, v] == 0:
                        return False
        if hilbert == 1:
            # x*(y*z) = (x*y)*(x*z), propagated through three trigger shapes
            for i2 in range(u):
                a = M[i2, r]
                b = M[i2, c]
                if a >= 0 and b >= 0:
                    if not _eq_cells(M, trail, state, no_u, n, i2, v, a, b):
                        return False
            for k in range(n):
                w = M[c, k]
                if w >= 0:
                    b = M[r, k]
                    if b >= 0:
                        if not _eq_cells(M, trail, state, no_u, n, r, w, v, b):
                            return False
                w = M[k, c]
                if w >= 0:
                    a = M[r, k]
                    if a >= 0:
                        if not _eq_cells(M, trail, state, no_u, n, r, w, a, v):
                            return False
    return True


@njit(cache=True)
def _lex_ok(M, order, group, ginv, n):
    """M <= M^g on the decided prefix, for every case symmetry g."""
    G = group.shape[0]
    F = order.shape[0]
    for g in range(G):
        for t in range(F):
            cell = order[t]
            r = cell // n
            c = cell % n
            a = M[r, c]
            if a < 0:
                break
            braw = M[group[g, r], group[g, c]]
            if braw < 0:
                break
            b = ginv[g, braw]
            if a < b:
                break
            if a > b:
                return False
    return True


@njit(cache=True)
def _final_check(M, n, mode, ucell, Prel, sp, st, R, mm, hilbert):
    u = n - 1
    # cycloid and antisymmetry over the full table
    for i in range(u):
        for j in range(i + 1, u):
            if M[i, j] == u and M[j, i] == u:
                return False
            for k in range(u):
                if M[M[i, j], M[i, k]] != M[M[j, i], M[j, k]]:
                    return False
    if mode == MODE_POSET or mode == MODE_DIAMOND:
        for i in range(u):
            for j in range(u):
                want = 1 if Prel[i, j] == 1 else 0
                have = 1 if M[i, j] == u else 0
                if want != have:
                    return False
    if mode == MODE_DISCRETE:
        for i in range(u):
            for j in range(u):
                if (M[i, j] == u) != (i == j):
                    return False
        for i in range(u):
            for j in range(u):
                if i == j:
                    continue
                for k in range(u):
                    have = 1 if (M[i, j] == M[i, k] or i == k) else 0
                    if have != sp[i, j, k]:
                        return False
                for k in range(j + 1, u):
                    if k == i:
                        continue
                    a = M[i, j]
                    for l in range(u):
                        eq1 = M[a, M[i, k]] == M[a, M[i, l]]
                        have = 1 if (eq1 or M[i, j] == M[i, l] or i == l) else 0
                        if have != st[i, j, k, l]:
                            return False
    if mode == MODE_DIAMOND:
        for i in range(mm):
            for j in range(mm):
                if i == j:
                    continue
                allu = 1
                for k in range(mm):
                    if ucell[M[i, j], M[i, k]] == 0:
                        allu = 0
                        break
                if allu != R[i, j]:
                    return False
    if hilbert == 1:
        for i in range(u):
            for j in range(u):
                for k in range(n):
                    if M[i, M[j, k]] != M[M[i, j], M[i, k]]:
                        return False
    return True


@njit(cache=True)
def run_case_kernel(n, init, order, no_u, group, ginv, mode, ucell, Prel,
                    sp, st, R, mm, hilbert, max_solutions, max_nodes):
    """Depth-first search over the free cells; returns (tables, count, aborted)."""
    u = n - 1
    F = order.shape[0]
    M = init.copy()
    trail = np.empty(n * n, dtype=np.int64)
    state = np.zeros(2, dtype=np.int64)  # trail length, queue head
    cap = 1024
    out = np.empty((cap, n * n), dtype=np.int8)
    count = 0
    nodes = 0
    aborted = 0

    # seed the propagation queue with the forced cells
    for r in range(n):
        for c in range(n):
            if M[r, c] >= 0:
                trail[state[0]] = r * n + c
                state[0] += 1
    if not _propagate(M, trail, state, no_u, n, mode, ucell, Prel, sp, R, mm, hilbert):
        return out[:0], 0, 0

    nextval = np.zeros(F + 1, dtype=np.int64)
    marks = np.zeros(F + 1, dtype=np.int64)
    passed = np.zeros(F + 1, dtype=np.int64)
    d = 0
    entering = True
    while d >= 0:
        if d == F:
            if entering:
                if _final_check(M, n, mode, ucell, Prel, sp, st, R, mm, hilbert):
                    if count == cap:
                        cap *= 2
                        grown = np.empty((cap, n * n), dtype=np.int8)
                        grown[:count] = out
                        out = grown
                    for r in range(n):
                        for c in range(n):
                            out[count, r * n + c] = M[r, c]
                    count += 1
                    if max_solutions >= 0 and count >= max_solutions:
                        return out[:count], count, 0
            d -= 1
            entering = False
            continue
        cell = order[d]
        if entering:
            if M[cell // n, cell % n] >= 0:
                passed[d] = 1
                d += 1
                continue
            passed[d] = 0
            nextval[d] = 0
        else:
            if passed[d] == 1:
                d -= 1
                continue
            _undo(M, trail, state, n, marks[d])
        v = nextval[d]
        if v == u and no_u[cell] == 1:
            v += 1
        if v > u:
            d -= 1
            entering = False
            continue
        nextval[d] = v + 1
        marks[d] = state[0]
        nodes += 1
        if max_nodes >= 0 and nodes > max_nodes:
            aborted = 1
            break
        if (_assign(M, trail, state, no_u, n, cell, v)
                and _propagate(M, trail, state, no_u, n, mode, ucell, Prel, sp, R, mm, hilbert)
                and _lex_ok(M, order, group, ginv, n)):
            d += 1
            entering = True
        else:
            _undo(M, trail, state, n, marks[d])
            entering = False
    return out[:count], count, aborted
