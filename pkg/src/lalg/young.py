"""Infinite-dimensional Young diagrams and finite regular L-algebras.

A diagram is a finite, non-empty, upward-closed set of integer vectors
with nonpositive coordinates; only the finitely many active coordinates
are stored.  Conjugacy is coordinate permutation.  Diagrams and finite
regular tables determine each other: the table operation on points is
x * y = (x ^ y) - x, computed coordinatewise.
"""

from itertools import permutations

from .core import (
    Table,
    dense_elements,
    is_l_algebra,
    is_regular,
    is_semiregular,
    leq,
    mul,
)

YoungDiagram = tuple  # sorted tuple of equal-length tuples of ints <= 0


def as_diagram(points) -> YoungDiagram:
    """Validate and normalize a point set into a diagram.

    Points must be equal-length vectors of nonpositive integers; the set
    must be upward-closed (hence contain the origin) and have no
    coordinate that is zero in every point.
    """
    pts = {tuple(int(c) for c in p) for p in points}
    if not pts:
        raise ValueError("diagram must be non-empty")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise ValueError("points must share one dimension")
    m = dims.pop()
    if any(c > 0 for p in pts for c in p):
        raise ValueError("coordinates must be nonpositive")
    for p in pts:
        for i in range(m):
            if p[i] < 0:
                up = p[:i] + (p[i] + 1,) + p[i + 1:]
                if up not in pts:
                    raise ValueError(f"not upward-closed: {up} missing above {p}")
    for i in range(m):
        if all(p[i] == 0 for p in pts):
            raise ValueError(f"coordinate {i} is inactive; trim it")
    return tuple(sorted(pts))


def _trim(pts: set) -> YoungDiagram:
    """Drop coordinates that are zero everywhere, then sort."""
    if not pts:
        raise ValueError("diagram must be non-empty")
    m = len(next(iter(pts)))
    active = [i for i in range(m) if any(p[i] < 0 for p in pts)]
    return tuple(sorted(tuple(p[i] for i in active) for p in pts))


def dimension(D: YoungDiagram) -> int:
    return len(D[0]) if D else 0


def young_canonical(D: YoungDiagram) -> YoungDiagram:
    """Lex-least point-set encoding over all coordinate permutations.

    Columns are pre-sorted by (height profile) so the exhaustive search
    over coordinate permutations stays cheap at small dimension.
    """
    D = as_diagram(D)
    m = dimension(D)
    if m <= 1:
        return D
    cols = sorted(range(m), key=lambda i: sorted(p[i] for p in D))
    base = tuple(sorted(tuple(p[i] for i in cols) for p in D))
    best = base
    for pi in permutations(range(m)):
        cand = tuple(sorted(tuple(p[i] for i in pi) for p in base))
        if cand < best:
            best = cand
    return best


def young_to_lalgebra(D: YoungDiagram) -> Table:
    """The table on the points of D, unit = origin at the last index.

    The operation is x * y = (x ^ y) - x with coordinatewise minimum;
    upward-closedness keeps every product inside D.
    """
    D = as_diagram(D)
    pts = sorted(D, key=lambda p: (sum(p), p))
    index = {p: i + 1 for i, p in enumerate(pts)}
    n = len(pts)
    assert pts[-1] == tuple([0] * dimension(D)), "origin must be the unit"
    rows = []
    for x in pts:
        row = []
        for y in pts:
            prod = tuple(min(a, b) - a for a, b in zip(x, y))
            assert prod in index, "diagram not closed under the operation"
            row.append(index[prod])
        rows.append(tuple(row))
    M = tuple(rows)
    assert is_l_algebra(M) and is_semiregular(M) and is_regular(M)
    assert dense_elements(M) == {n}
    return M


def lalgebra_to_young(M: Table) -> YoungDiagram:
    """Coordinates of a finite regular table inside the cone of Z^m.

    Each maximal element below the unit spans one coordinate; every
    element y gets vec(y) = vec(x*y) - e_x for the least maximal x above
    it.  Independence of the choice of x is asserted, as is
    upward-closedness of the resulting point set.
    """
    n = len(M)
    if not is_l_algebra(M):
        raise ValueError("input is not an L-algebra table")
    if not is_regular(M):
        raise ValueError("input is not regular")
    if dense_elements(M) != {n}:
        raise ValueError("only the unit may be dense")
    if n == 1:
        return ((),)
    below = [x for x in range(1, n) ]
    maxima = [
        x for x in below
        if not any(leq(M, x, z) and x != z for z in below)
    ]
    axis = {x: i for i, x in enumerate(sorted(maxima))}
    m = len(maxima)
    vec = {n: tuple([0] * m)}

    def coords(y):
        if y in vec:
            return vec[y]
        x = min(x for x in maxima if leq(M, y, x))
        up = mul(M, x, y)
        assert up != y, "x*y must climb strictly"
        v = list(coords(up))
        v[axis[x]] -= 1
        vec[y] = tuple(v)
        return vec[y]

    for y in range(1, n + 1):
        coords(y)
    for y in range(1, n + 1):
        for x in maxima:
            if leq(M, y, x):
                up = coords(mul(M, x, y))
                want = list(up)
                want[axis[x]] -= 1
                assert tuple(want) == vec[y], "vector must not depend on the axis choice"
    pts = set(vec.values())
    assert len(pts) == n, "elements must receive distinct vectors"
    out = as_diagram(pts)  # also asserts upward-closedness
    return out


def _minimal_extensions(D: YoungDiagram):
    """All diagrams obtained by adding one minimal point to D."""
    D = as_diagram(D)
    m = dimension(D)
    pts = set(D)
    seen = set()
    for p in D:
        for i in range(m):
            v = p[:i] + (p[i] - 1,) + p[i + 1:]
            if v in pts or v in seen:
                continue
            seen.add(v)
            ok = all(
                v[:j] + (v[j] + 1,) + v[j + 1:] in pts
                for j in range(m)
                if v[j] < 0
            )
            if ok:
                yield tuple(sorted(pts | {v}))
    fresh = tuple([0] * m + [-1])
    yield tuple(sorted({p + (0,) for p in pts} | {fresh}))


def enumerate_young(p: int) -> list:
    """Canonical representatives of all p-point diagrams, up to conjugacy."""
    if p < 1:
        raise ValueError("need at least one point")
    level = {((),)}
    for _ in range(p - 1):
        level = {
            young_canonical(ext)
            for D in level
            for ext in _minimal_extensions(D)
        }
    return sorted(level)


def young_to_text(D: YoungDiagram) -> str:
    """File format: point count, then one line of coordinates per point."""
    D = as_diagram(D)
    lines = [str(len(D))]
    lines += [" ".join(str(c) for c in pt) for pt in D]
    return "\n".join(lines) + "\n"


def young_from_text(text: str) -> YoungDiagram:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    p = int(lines[0])
    if len(lines) != p + 1:
        raise ValueError(f"expected {p} points, got {len(lines) - 1}")
    return as_diagram([tuple(int(c) for c in ln.split()) for ln in lines[1:]])
