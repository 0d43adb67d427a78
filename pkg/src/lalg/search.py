"""Search cases and enumeration streams for L-algebra tables.

The enumeration of all tables of size n splits into independent cases,
one per splitting structure: a separating 3-approximate semilattice for
the discrete (antichain) part, an R-matrix for the diamond part, and a
poset for everything else.  Each case is searched separately with
lex-leader symmetry breaking over the stabilizer of its structure, so
the union over cases hits every isomorphism class exactly once.

Cases run eagerly in a numba kernel; the public functions wrap them in
generators that may be stopped early.  Case-level parallelism never
changes the output: results are concatenated in the fixed case order.
"""

import os
from dataclasses import dataclass, field
from itertools import permutations
from multiprocessing import Pool
from typing import Optional

import numpy as np

from . import kernels
from .core import Table
from .posets import (
    PosetMatrix,
    as_poset,
    canonical_poset,
    chain,
    enumerate_posets,
    is_antichain,
    is_diamond,
    poset_automorphisms,
)
from .rmatrices import as_rmatrix, enumerate_rmatrices
from .semilattices import (
    ClosureMap,
    closure_from_text,
    conjugacy_stabilizer,
    enumerate_3approx,
)

CLASSES = ("all", "hilbert", "discrete", "linear", "regular")


@dataclass(frozen=True)
class SearchCase:
    """One independent search job: size, mode, splitting payload."""

    n: int
    mode: str                       # general | poset | discrete | diamond
    payload: object = None          # PosetMatrix | ClosureMap | RMatrix | None
    hilbert: bool = False

    def to_text(self) -> str:
        h = 1 if self.hilbert else 0
        if self.mode == "general":
            return f"general {self.n} {h}"
        if self.mode == "poset":
            rows = "/".join("".join(str(x) for x in row) for row in self.payload)
            return f"poset {self.n} {h} {rows}"
        if self.mode == "discrete":
            bits = "".join(str(b) for b in self.payload.encoding())
            return f"discrete {self.n} {h} {bits}"
        if self.mode == "diamond":
            R = self.payload
            m = len(R)
            bits = "".join(str(R[i][j]) for i in range(m) for j in range(i + 1, m))
            return f"diamond {self.n} {h} {m} {bits}"
        raise ValueError(f"unknown mode {self.mode}")

    @staticmethod
    def from_text(line: str) -> "SearchCase":
        parts = line.split()
        mode = parts[0]
        n = int(parts[1])
        h = bool(int(parts[2]))
        if mode == "general":
            return SearchCase(n, "general", None, h)
        if mode == "poset":
            rows = tuple(tuple(int(ch) for ch in row) for row in parts[3].split("/"))
            return SearchCase(n, "poset", as_poset(rows), h)
        if mode == "discrete":
            S = _closure_from_bits(n - 1, parts[3])
            return SearchCase(n, "discrete", S, h)
        if mode == "diamond":
            m = int(parts[3])
            bits = parts[4] if len(parts) > 4 else ""
            rows = [[0] * m for _ in range(m)]
            pos = 0
            for i in range(m):
                for j in range(i + 1, m):
                    rows[i][j] = rows[j][i] = int(bits[pos])
                    pos += 1
            return SearchCase(n, "diamond", as_rmatrix(rows), h)
        raise ValueError(f"unknown case mode {mode!r}")


def _closure_from_bits(k: int, bits: str) -> ClosureMap:
    from itertools import combinations_with_replacement

    cl = {}
    pos = 0
    for a, b, c in combinations_with_replacement(range(1, k + 1), 3):
        members = set()
        for y in range(1, k + 1):
            if bits[pos] == "1":
                members.add(y)
            pos += 1
        cl[frozenset((a, b, c))] = frozenset(members)
    return ClosureMap(k, cl)


def _row_major_order(n, init):
    u = n - 1
    return [i * n + j for i in range(u) for j in range(u) if i != j and init[i, j] < 0]


def _square_order(n, init):
    u = n - 1
    cells = []
    for k in range(u):
        for i in range(k + 1):
            cells.append((i, k))
        for j in range(k - 1, -1, -1):
            cells.append((k, j))
    return [i * n + j for i, j in cells if i != j and init[i, j] < 0]


def _base_init(n) -> np.ndarray:
    u = n - 1
    M = np.full((n, n), -1, dtype=np.int8)
    for j in range(n):
        M[u, j] = j
    for i in range(n):
        M[i, u] = u
        M[i, i] = u
    return M


def _group_arrays(n, perms0):
    """Pack 0-based permutations of {0..n-2} into kernel arrays, identity dropped."""
    u = n - 1
    ident = tuple(range(u))
    rows = [p for p in perms0 if tuple(p) != ident]
    G = len(rows)
    group = np.empty((G, n), dtype=np.int64)
    ginv = np.empty((G, n), dtype=np.int64)
    for g, p in enumerate(rows):
        for i in range(u):
            group[g, i] = p[i]
        group[g, u] = u
        for i in range(u):
            ginv[g, p[i]] = i
        ginv[g, u] = u
    return group, ginv


def _empty(shape):
    return np.zeros(shape, dtype=np.int8)


def build_kernel_args(case: SearchCase) -> dict:
    """Everything run_case_kernel needs, derived from the case payload."""
    n = case.n
    u = n - 1
    init = _base_init(n)
    no_u = np.zeros(n * n, dtype=np.int8)
    ucell = _empty((1, 1))
    Prel = _empty((1, 1))
    sp = _empty((1, 1, 1))
    st = _empty((1, 1, 1, 1))
    R = _empty((1, 1))
    mm = 0
    square = case.mode == "discrete" or n >= 8

    if case.mode == "general":
        mode = kernels.MODE_GENERAL
        perms0 = list(permutations(range(u)))
    elif case.mode == "poset":
        mode = kernels.MODE_POSET
        P = case.payload
        if len(P) != u:
            raise ValueError(f"poset of size {len(P)} does not fit n={n}")
        Prel = np.array(P, dtype=np.int8)
        ucell = _ucell_from_poset(n, Prel)
        for i in range(u):
            for j in range(u):
                if i != j:
                    if Prel[i, j]:
                        init[i, j] = u
                    else:
                        no_u[i * n + j] = 1
        perms0 = [tuple(x - 1 for x in g) for g in poset_automorphisms(P)]
    elif case.mode == "discrete":
        mode = kernels.MODE_DISCRETE
        S = case.payload
        if S.k != u:
            raise ValueError(f"closure map on {S.k} points does not fit n={n}")
        Prel = np.array([[1 if i == j else 0 for j in range(u)] for i in range(u)], dtype=np.int8)
        sp = np.zeros((u, u, u), dtype=np.int8)
        st = np.zeros((u, u, u, u), dtype=np.int8)
        for i in range(u):
            for j in range(u):
                for k in range(u):
                    sp[i, j, k] = S.S(i + 1, j + 1, j + 1, k + 1)
                    for l in range(u):
                        st[i, j, k, l] = S.S(i + 1, j + 1, k + 1, l + 1)
        for i in range(u):
            for j in range(u):
                for k in range(u):
                    if i != j and i != k and j != k:
                        assert sp[i, j, k] == sp[i, k, j], "closure map lacks exchange"
        for i in range(u):
            for j in range(u):
                if i != j:
                    no_u[i * n + j] = 1
        perms0 = [tuple(x - 1 for x in g) for g in conjugacy_stabilizer(S)]
    elif case.mode == "diamond":
        mode = kernels.MODE_DIAMOND
        Rm = case.payload
        mm = len(Rm)
        if mm != n - 2:
            raise ValueError(f"R-matrix of size {mm} does not fit n={n}")
        R = np.array(Rm, dtype=np.int8)
        Prel = np.array(
            [[1 if (i == j or i == u - 1) else 0 for j in range(u)] for i in range(u)],
            dtype=np.int8,
        )
        ucell = _ucell_from_poset(n, Prel)
        for i in range(u):
            for j in range(u):
                if i != j:
                    if Prel[i, j]:
                        init[i, j] = u
                    else:
                        no_u[i * n + j] = 1
        mids = list(permutations(range(mm)))
        perms0 = []
        for p in mids:
            if all(Rm[p[i]][p[j]] == Rm[i][j] for i in range(mm) for j in range(mm)):
                perms0.append(tuple(p) + (u - 1,))
    else:
        raise ValueError(f"unknown mode {case.mode!r}")

    group, ginv = _group_arrays(n, perms0)
    order = np.array(
        _square_order(n, init) if square else _row_major_order(n, init),
        dtype=np.int64,
    )
    return dict(
        n=n, init=init, order=order, no_u=no_u, group=group, ginv=ginv,
        mode=mode, ucell=ucell, Prel=Prel, sp=sp, st=st, R=R, mm=mm,
        hilbert=1 if case.hilbert else 0,
    )


def _ucell_from_poset(n, Prel) -> np.ndarray:
    u = n - 1
    ucell = np.zeros((n, n), dtype=np.int8)
    for a in range(n):
        ucell[a, u] = 1
    for a in range(u):
        for b in range(u):
            if Prel[a, b]:
                ucell[a, b] = 1
    ucell[u, u] = 1
    for b in range(u):
        ucell[u, b] = 0
    return ucell


def run_case(case: SearchCase, limit: Optional[int] = None,
             node_budget: Optional[int] = None):
    """Run one case; returns (array of 0-based flat tables, aborted flag)."""
    args = build_kernel_args(case)
    out, count, aborted = kernels.run_case_kernel(
        args["n"], args["init"], args["order"], args["no_u"],
        args["group"], args["ginv"], args["mode"], args["ucell"],
        args["Prel"], args["sp"], args["st"], args["R"], args["mm"],
        args["hilbert"],
        -1 if limit is None else limit,
        -1 if node_budget is None else node_budget,
    )
    return out[:count], bool(aborted)


def row_to_table(row, n) -> Table:
    """Flat 0-based kernel output to a 1-based Table."""
    return tuple(
        tuple(int(row[i * n + j]) + 1 for j in range(n))
        for i in range(n)
    )


def table_to_row(M: Table) -> np.ndarray:
    n = len(M)
    return np.array([M[i][j] - 1 for i in range(n) for j in range(n)], dtype=np.int8)


def _unit_table(n=1) -> Table:
    return ((1,),) if n == 1 else None


def search_cases(n: int, cls: str = "all", hilbert: Optional[bool] = None) -> list:
    """The fixed, ordered case list for one enumeration run.

    Order: discrete cases (by closure map), diamond cases (by R-matrix),
    then the remaining posets.  n = 1 needs no search and returns [].
    """
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    h = cls == "hilbert" if hilbert is None else hilbert
    if n < 1:
        raise ValueError("size must be at least 1")
    if n == 1:
        return []
    if cls == "linear":
        return [SearchCase(n, "poset", canonical_poset(chain(n - 1)), h)]
    cases = [SearchCase(n, "discrete", S, h) for S in enumerate_3approx(n - 1)]
    if cls == "discrete":
        return cases
    if n >= 4:
        cases += [SearchCase(n, "diamond", R, h) for R in enumerate_rmatrices(n - 2)]
    for P in enumerate_posets(n - 1):
        if not is_antichain(P) and not (n >= 4 and is_diamond(P)):
            cases.append(SearchCase(n, "poset", P, h))
    return cases


def _run_case_text(args):
    line, limit = args
    case = SearchCase.from_text(line)
    out, aborted = run_case(case, limit=limit)
    if aborted:
        raise RuntimeError(f"case aborted: {line}")
    return out


def iter_case_results(cases, jobs: int = 1, limit: Optional[int] = None):
    """Arrays of results per case, in case order, optionally in parallel."""
    if jobs <= 1 or len(cases) <= 1:
        for case in cases:
            out, aborted = run_case(case, limit=limit)
            if aborted:
                raise RuntimeError(f"case aborted: {case.to_text()}")
            yield out
        return
    payload = [(case.to_text(), limit) for case in cases]
    with Pool(processes=jobs) as pool:
        yield from pool.imap(_run_case_text, payload, chunksize=1)


def enumerate_class(n: int, cls: str = "all", jobs: int = 1,
                    limit: Optional[int] = None):
    """One table per isomorphism class of the given class, streamed."""
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if n == 1:
        yield ((1,),)
        return
    from .core import is_regular

    cases = search_cases(n, cls)
    emitted = 0
    for out in iter_case_results(cases, jobs=jobs, limit=limit):
        for row in out:
            T = row_to_table(row, n)
            if cls == "regular" and not is_regular(T):
                continue
            yield T
            emitted += 1
            if limit is not None and emitted >= limit:
                return


def enumerate_general(n: int, limit: Optional[int] = None):
    """Global lex-min representatives via one whole-space search."""
    if n == 1:
        yield ((1,),)
        return
    out, aborted = run_case(SearchCase(n, "general"), limit=limit)
    if aborted:
        raise RuntimeError("general search aborted")
    for row in out:
        yield row_to_table(row, n)


def enumerate_on_poset(P: PosetMatrix, n: int, limit: Optional[int] = None):
    """Tables whose natural order below the unit equals P."""
    P = as_poset(P)
    if len(P) != n - 1:
        raise ValueError(f"poset size {len(P)} does not match n={n}")
    out, aborted = run_case(SearchCase(n, "poset", P), limit=limit)
    if aborted:
        raise RuntimeError("poset search aborted")
    for row in out:
        yield row_to_table(row, n)


def enumerate_discrete(n: int, limit: Optional[int] = None):
    """All discrete classes, split over closure maps."""
    if n == 1:
        yield ((1,),)
        return
    for case in search_cases(n, "discrete"):
        out, aborted = run_case(case, limit=limit)
        if aborted:
            raise RuntimeError("discrete search aborted")
        for row in out:
            yield row_to_table(row, n)


def enumerate_diamond(n: int, limit: Optional[int] = None):
    """All classes over the diamond poset, split over R-matrices."""
    if n < 4:
        raise ValueError("the diamond poset needs size at least 4")
    for R in enumerate_rmatrices(n - 2):
        out, aborted = run_case(SearchCase(n, "diamond", R), limit=limit)
        if aborted:
            raise RuntimeError("diamond search aborted")
        for row in out:
            yield row_to_table(row, n)


def default_jobs() -> int:
    env = os.environ.get("LALG_JOBS")
    if env:
        return max(1, int(env))
    return 1
