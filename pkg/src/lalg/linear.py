"""Linear L-algebras: recursive construction, Bell counts, decomposition.

A linear table of size n lives on the chain x0 > x1 > ... > x_{n-1},
labeled so that x_i is element n - i.  The natural order then coincides
with the numeric order of the labels, the unit is n, and the bottom is
element 1.  Total orders are rigid, so distinct tables in this labeling
are automatically non-isomorphic.
"""

from .core import (
    Table,
    as_table,
    is_l_algebra,
    is_linear,
    leq,
    mul,
    smallest_invariant,
)


def _check_chain_labeling(T: Table):
    n = len(T)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if leq(T, i, j) != (i <= j):
                raise ValueError("linear table must be labeled along the chain")


def extend_linear(T: Table, c: int) -> Table:
    """The unique extension by a new bottom with p * bottom = c.

    T has size n, the result size n+1 with all old labels shifted up by
    one and the new bottom labeled 1.  c is given in the labels of the
    extended algebra and must satisfy c < p * x_{n-1} (computed in the
    old algebra), where p is the smallest invariant element.
    """
    T = as_table(T)
    _check_chain_labeling(T)
    n = len(T)
    p = smallest_invariant(T)
    bound = mul(T, p, 1)  # p * (old bottom); admissible c lie strictly below
    if not 1 <= c <= bound:
        raise ValueError(
            f"extension value {c} not admissible: need c <= {bound} "
            f"(strictly below p*x_(n-1) = {bound + 1} in new labels)"
        )
    m = n + 1
    rows = [[0] * m for _ in range(m)]
    for a in range(2, m + 1):
        for b in range(2, m + 1):
            rows[a - 1][b - 1] = mul(T, a - 1, b - 1) + 1
    for b in range(1, m + 1):
        rows[0][b - 1] = m  # bottom is below everything
    for a in range(2, m + 1):
        olda = a - 1
        if c == 1:
            rows[a - 1][0] = 1
        elif olda <= p:
            q = mul(T, p, olda)
            rows[a - 1][0] = mul(T, q, c - 1) + 1
        else:
            rows[a - 1][0] = 1
    out = tuple(tuple(r) for r in rows)
    assert is_l_algebra(out) and is_linear(out)
    assert out[p][0] == c, "extension must satisfy p * x_n = c"
    return out


def admissible_extensions(T: Table) -> range:
    """All values c (new labels) valid for extend_linear."""
    T = as_table(T)
    p = smallest_invariant(T)
    return range(1, mul(T, p, 1) + 1)


def enumerate_linear(n: int) -> list:
    """All linear tables of size n in the chain labeling; B(n-1) of them."""
    if n < 1:
        raise ValueError("size must be at least 1")
    level = [((1,),)]
    for _ in range(n - 1):
        level = [
            extend_linear(T, c)
            for T in level
            for c in admissible_extensions(T)
        ]
    return level


def bell(m: int) -> int:
    """Bell number by the triangle recursion, exact arithmetic."""
    if m < 0:
        raise ValueError("bell is defined for m >= 0")
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def decompose_linear(T: Table):
    """Split T into (top restriction, trace set) at the smallest invariant.

    With p = smallest invariant at chain position m, the first component
    is the table induced on the m elements above p and the second is
    {p * x_j : j > m}, written in the labels of the one-smaller chain.
    The assignment is injective and recompose_linear inverts it.
    """
    T = as_table(T)
    _check_chain_labeling(T)
    n = len(T)
    if n < 2:
        raise ValueError("decomposition needs size at least 2")
    p = smallest_invariant(T)
    top = tuple(
        tuple(mul(T, a, b) - p for b in range(p + 1, n + 1))
        for a in range(p + 1, n + 1)
    )
    trace = frozenset(mul(T, p, b) - 1 for b in range(1, p))
    return top, trace


def recompose_linear(top: Table, trace) -> Table:
    """Inverse of decompose_linear."""
    m = len(top)
    T = extend_linear(top, 1)  # adjoin an invariant bottom x_m
    n = m + 1 + len(trace)
    for i, w in enumerate(sorted(trace, reverse=True), start=1):
        c = w + m + i + 2 - n
        T = extend_linear(T, c)
    return T
