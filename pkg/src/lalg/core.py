"""Finite L-algebra multiplication tables: axioms, predicates, isomorphism.

A table of size n is a tuple of n tuples with entries in 1..n, where
entry ``M[i-1][j-1]`` is the product i*j and element n is the logical
unit e.  All functions here are pure; tables and permutations are plain
tuples and can be hashed, shared and compared freely.
"""

from itertools import permutations
from typing import NamedTuple, Optional

Table = tuple  # tuple[tuple[int, ...], ...], entries 1..n, unit = n
Perm = tuple   # tuple[int, ...], images of 1..n-1; the unit n is fixed


class ShapeError(ValueError):
    """Input is not an n x n array over 1..n (distinct from axiom failure)."""


class VerifyReport(NamedTuple):
    valid: bool
    condition: Optional[int] = None        # violated condition in 1..5
    witness: Optional[tuple] = None        # indices of the first violation


def as_table(rows) -> Table:
    """Validate shape and freeze ``rows`` into a Table.

    Raises ShapeError when rows is not square or has entries outside 1..n.
    """
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(rows)
    if n == 0:
        raise ShapeError("empty table")
    for row in rows:
        if len(row) != n:
            raise ShapeError(f"table is not {n}x{n}")
        for x in row:
            if not 1 <= x <= n:
                raise ShapeError(f"entry {x} outside 1..{n}")
    return rows


def mul(M: Table, x: int, y: int) -> int:
    """The product x*y read from the table (1-based elements)."""
    return M[x - 1][y - 1]


def leq(M: Table, x: int, y: int) -> bool:
    """Natural order: x <= y iff x*y = e."""
    return M[x - 1][y - 1] == len(M)


def verify_l_algebra(M) -> VerifyReport:
    """Check table conditions (1)-(5); report the first violation.

    Conditions are scanned in increasing id, witnesses in index order,
    so the report is deterministic.  Condition 4 is the cycloid equation,
    condition 5 antisymmetry of the natural order.
    """
    M = as_table(M)
    n = len(M)
    for j in range(1, n + 1):                      # (1) unit row acts as identity
        if M[n - 1][j - 1] != j:
            return VerifyReport(False, 1, (j,))
    for i in range(1, n + 1):                      # (2) x*e = e
        if M[i - 1][n - 1] != n:
            return VerifyReport(False, 2, (i,))
    for k in range(1, n + 1):                      # (3) x*x = e
        if M[k - 1][k - 1] != n:
            return VerifyReport(False, 3, (k,))
    for i in range(1, n + 1):                      # (4) cycloid equation
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                lhs = M[M[i - 1][j - 1] - 1][M[i - 1][k - 1] - 1]
                rhs = M[M[j - 1][i - 1] - 1][M[j - 1][k - 1] - 1]
                if lhs != rhs:
                    return VerifyReport(False, 4, (i, j, k))
    for i in range(1, n + 1):                      # (5) antisymmetry
        for j in range(1, n + 1):
            if i != j and M[i - 1][j - 1] == n and M[j - 1][i - 1] == n:
                return VerifyReport(False, 5, (i, j))
    return VerifyReport(True)


def is_l_algebra(M) -> bool:
    return verify_l_algebra(M).valid


def verify_hilbert(M: Table) -> bool:
    """True iff x*(y*z) = (x*y)*(x*z) for all triples."""
    n = len(M)
    r = range(1, n + 1)
    for x in r:
        for y in r:
            for z in r:
                if mul(M, x, mul(M, y, z)) != mul(M, mul(M, x, y), mul(M, x, z)):
                    return False
    return True


def natural_order(M: Table):
    """The order below the unit as an (n-1)x(n-1) 0/1 matrix.

    P[i-1][j-1] = 1 iff i <= j.  The order axioms hold by the table
    axioms; transitivity is asserted rather than assumed.
    """
    n = len(M)
    k = n - 1
    P = tuple(tuple(1 if M[i][j] == n else 0 for j in range(k)) for i in range(k))
    for i in range(k):
        assert P[i][i] == 1, "natural order not reflexive"
        for j in range(k):
            if P[i][j] and i != j:
                assert not P[j][i], "natural order not antisymmetric"
            for l in range(k):
                if P[i][j] and P[j][l]:
                    assert P[i][l], "natural order not transitive"
    return P


def is_discrete(M: Table) -> bool:
    """x <= y only when x = y or y = e."""
    n = len(M)
    return all(
        M[i][j] != n
        for i in range(n - 1)
        for j in range(n - 1)
        if i != j
    )


def is_linear(M: Table) -> bool:
    """The natural order is total."""
    n = len(M)
    return all(
        M[i][j] == n or M[j][i] == n
        for i in range(n)
        for j in range(n)
    )


def wedge_dot(M: Table, xs, z: int) -> int:
    """Evaluate (x1 ^ ... ^ xk) * z through the nested product rewriting.

    For one factor this is x1*z; for two, (x1*x2)*(x1*z); longer meets
    recurse on the leading k-1 factors.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("wedge_dot needs at least one factor")
    if len(xs) == 1:
        return mul(M, xs[0], z)
    head = xs[:-1]
    return mul(M, wedge_dot(M, head, xs[-1]), wedge_dot(M, head, z))


def identity_perm(n: int) -> Perm:
    """Identity on {1..n-1} for tables of size n."""
    return tuple(range(1, n))


def perm_inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x - 1] = i + 1
    return tuple(inv)


def perm_compose(g: Perm, h: Perm) -> Perm:
    """The map x -> g(h(x)), so that (M^g)^h = M^compose(g, h)."""
    return tuple(g[h[i] - 1] for i in range(len(g)))


def apply_perm(M: Table, g: Perm) -> Table:
    """Relabel by g: (M^g)_{i,j} = g^{-1}(M_{g(i),g(j)}), with g(n) = n."""
    n = len(M)
    if sorted(g) != list(range(1, n)):
        raise ValueError("permutation must be a bijection on 1..n-1")
    gg = list(g) + [n]
    inv = [0] * (n + 1)
    for i, x in enumerate(gg):
        inv[x] = i + 1
    return tuple(
        tuple(inv[M[gg[i] - 1][gg[j] - 1]] for j in range(n))
        for i in range(n)
    )


def all_perms(n: int):
    """All permutations of {1..n-1}, in lexicographic order."""
    return permutations(range(1, n))


def canonical_form(M: Table) -> Table:
    """Lex-least relabeling of M over all permutations fixing the unit.

    Row-major comparison over the full table; constant on isomorphism
    classes and idempotent.
    """
    n = len(M)
    best = None
    for g in all_perms(n):
        cand = apply_perm(M, g)
        if best is None or cand < best:
            best = cand
    return best


def are_isomorphic(A: Table, B: Table) -> Optional[Perm]:
    """A witnessing relabeling g with A^g = B, or None.

    Returns the lexicographically least witness for reproducibility.
    """
    if len(A) != len(B):
        raise ValueError("tables differ in size")
    for g in all_perms(len(A)):
        if apply_perm(A, g) == B:
            return g
    return None


def automorphism_group(M: Table) -> list:
    """All relabelings fixing M; always contains the identity."""
    return [g for g in all_perms(len(M)) if apply_perm(M, g) == M]


def is_semiregular(M: Table) -> bool:
    """((x*y)*z) * ((y*x)*z) = ((x*y)*z) * z for all triples."""
    n = len(M)
    r = range(1, n + 1)
    for x in r:
        for y in r:
            xy_ = mul(M, x, y)
            yx_ = mul(M, y, x)
            for z in r:
                a = mul(M, xy_, z)
                if mul(M, a, mul(M, yx_, z)) != mul(M, a, z):
                    return False
    return True


def is_regular(M: Table) -> bool:
    """Semiregular, and every x <= y is reached as z*x with z >= x."""
    if not is_semiregular(M):
        return False
    n = len(M)
    r = range(1, n + 1)
    for x in r:
        for y in r:
            if leq(M, x, y):
                if not any(leq(M, x, z) and mul(M, z, x) == y for z in r):
                    return False
    return True


def dense_elements(M: Table) -> set:
    """Elements x admitting some y <= x with x*y = y."""
    n = len(M)
    r = range(1, n + 1)
    return {x for x in r if any(leq(M, y, x) and mul(M, x, y) == y for y in r)}


def smallest_invariant(M: Table) -> int:
    """Least element p in the natural order with y*p = p for all y > p.

    Only defined on linear tables; the unit is invariant, so the result
    always exists.
    """
    if not is_linear(M):
        raise ValueError("smallest_invariant requires a linear table")
    n = len(M)
    # ascending natural order; for the canonical linear labeling this is 1..n
    elems = sorted(range(1, n + 1), key=lambda x: sum(leq(M, x, y) for y in range(1, n + 1)), reverse=True)
    for x in elems:
        if all(mul(M, y, x) == x for y in range(1, n + 1) if leq(M, x, y) and y != x):
            return x
    raise AssertionError("unit must be invariant")
