"""Separating 3-approximate semilattices: verification and enumeration.

A closure map assigns to every subset A of {1..k} with |A| <= 3 a set
cl(A) of elements known to lie above the meet of A.  Multisets of size
up to three are read through their support, so the defining function
S(x1,x2,x3,y) is symmetric by construction.  These maps split the
search for discrete tables, where every ground element sits directly
below the unit and singleton closures are trivial.
"""

from itertools import combinations, combinations_with_replacement, permutations

import numpy as np


def _support(xs) -> frozenset:
    return frozenset(xs)


class ClosureMap:
    """Immutable closure table over subsets of size <= 3 of {1..k}."""

    __slots__ = ("k", "cl", "_enc")

    def __init__(self, k: int, cl: dict):
        self.k = k
        self.cl = {frozenset(a): frozenset(b) for a, b in cl.items()}
        for a in _subsets(k):
            if a not in self.cl:
                raise ValueError(f"closure of {sorted(a)} missing")
        self._enc = None

    def S(self, x1: int, x2: int, x3: int, y: int) -> int:
        return 1 if y in self.cl[_support((x1, x2, x3))] else 0

    def closure(self, xs) -> frozenset:
        return self.cl[_support(xs)]

    def conjugate(self, pi) -> "ClosureMap":
        """Relabel by pi (1-based images): cl'(pi A) = pi(cl(A))."""
        out = {}
        for a, b in self.cl.items():
            out[frozenset(pi[x - 1] for x in a)] = frozenset(pi[y - 1] for y in b)
        return ClosureMap(self.k, out)

    def encoding(self) -> tuple:
        """Truth table in the fixed linearization (x1<=x2<=x3, then y)."""
        if self._enc is None:
            self._enc = tuple(
                self.S(a, b, c, y)
                for a, b, c in combinations_with_replacement(range(1, self.k + 1), 3)
                for y in range(1, self.k + 1)
            )
        return self._enc

    def __eq__(self, other):
        return isinstance(other, ClosureMap) and self.k == other.k and self.cl == other.cl

    def __hash__(self):
        return hash((self.k, self.encoding()))

    def __repr__(self):
        return f"ClosureMap(k={self.k})"


def _subsets(k: int):
    elems = range(1, k + 1)
    for size in (1, 2, 3):
        yield from map(frozenset, combinations(elems, size))


def trivial_closure(k: int) -> ClosureMap:
    """cl(A) = A for every A."""
    return ClosureMap(k, {a: a for a in _subsets(k)})


def verify_closure(S: ClosureMap) -> bool:
    """Extensivity, transitivity and separation of points.

    Symmetry in the first three arguments holds structurally because
    closures are stored per support set.
    """
    subs = list(_subsets(S.k))
    for a in subs:
        if not a <= S.cl[a]:
            return False
        if not S.cl[a] <= frozenset(range(1, S.k + 1)):
            return False
    for a in subs:
        ca = S.cl[a]
        for b in subs:
            if b <= ca and not S.cl[b] <= ca:
                return False
    singles = [S.cl[frozenset((x,))] for x in range(1, S.k + 1)]
    return len(set(singles)) == S.k


def has_restricted_semimodularity(S: ClosureMap) -> bool:
    """y in cl(B+x)\\cl(B) and z in cl(B+x) imply z in cl(B+y)."""
    elems = range(1, S.k + 1)
    bases = [frozenset((x,)) for x in elems]
    bases += [frozenset(p) for p in combinations(elems, 2)]
    for b in bases:
        cb = S.cl[b]
        for x in elems:
            if x in b:
                continue
            t = b | {x}
            ct = S.cl[t]
            for y in ct - cb:
                cby = S.cl[b | {y}]
                if not ct <= cby:
                    return False
    return True


def conjugacy_stabilizer(S: ClosureMap) -> list:
    """All relabelings pi (1-based image tuples) with pi . S = S."""
    return [
        pi
        for pi in permutations(range(1, S.k + 1))
        if S.conjugate(pi) == S
    ]


# --- enumeration ----------------------------------------------------------

class _Enum:
    """Backtracking enumeration of closure maps, lex-greatest per class.

    Bits are branched in the linearization order, value 1 first; a
    branch dies as soon as some relabeling provably beats the current
    prefix.  Singleton closures are pinned to {x}: these maps split the
    discrete search, where the ground set is an antichain.
    """

    def __init__(self, k: int, free_singletons: bool = False):
        self.k = k
        self.free_singletons = free_singletons
        self.masks = []                      # support masks, popcount 1..3
        for a in _subsets(k):
            self.masks.append(sum(1 << (x - 1) for x in a))
        self.sid = {m: i for i, m in enumerate(self.masks)}
        self.nsup = len(self.masks)
        quads = []
        for a, b, c in combinations_with_replacement(range(k), 3):
            m = (1 << a) | (1 << b) | (1 << c)
            for y in range(k):
                quads.append((self.sid[m], y))
        self.quads = quads
        self.L = len(quads)
        self.pos_of = [[] for _ in range(self.nsup * k)]
        for q, (s, y) in enumerate(quads):
            self.pos_of[s * k + y].append(q)
        self.perm_idx = self._perm_index()
        # branch variables in linearization order, deduplicated
        seen = set()
        self.branch_vars = []
        for s, y in quads:
            if (s, y) in seen:
                continue
            seen.add((s, y))
            self.branch_vars.append((s, y))

    def _perm_index(self) -> np.ndarray:
        k = self.k
        qindex = {}
        for q, (s, y) in enumerate(self.quads):
            qindex.setdefault((s, y), q)
        maps = []
        for pi in permutations(range(k)):
            if pi == tuple(range(k)):
                continue
            inv = [0] * k
            for i, K in enumerate(pi):
                inv[K] = i
            row = np.empty(self.L, dtype=np.int32)
            for q, (s, y) in enumerate(self.quads):
                m = self.masks[s]
                pm = 0
                for x in range(k):
                    if m >> x & 1:
                        pm |= 1 << inv[x]
                row[q] = qindex[(self.sid[pm], inv[y])]
            maps.append(row)
        if not maps:
            return np.empty((0, self.L), dtype=np.int32)
        return np.stack(maps)

    def run(self):
        k = self.k
        self.val = np.full((self.nsup, k), -1, dtype=np.int8)
        self.vec = np.full(self.L, -1, dtype=np.int8)
        self.trail = []
        self.out = []
        # static bits: extensivity, and pinned singletons
        for i, m in enumerate(self.masks):
            for y in range(k):
                if m >> y & 1:
                    self._set_static(i, y, 1)
                elif bin(m).count("1") == 1 and not self.free_singletons:
                    self._set_static(i, y, 0)
        if not self._propagate(0):
            return []
        self._dfs(0)
        return self.out

    def _set_static(self, s, y, v):
        self.val[s, y] = v
        for q in self.pos_of[s * self.k + y]:
            self.vec[q] = v

    def _assign(self, s, y, v) -> bool:
        cur = self.val[s, y]
        if cur >= 0:
            return cur == v
        self.val[s, y] = v
        for q in self.pos_of[s * self.k + y]:
            self.vec[q] = v
        self.trail.append((s, y))
        return True

    def _undo(self, mark):
        while len(self.trail) > mark:
            s, y = self.trail.pop()
            self.val[s, y] = -1
            for q in self.pos_of[s * self.k + y]:
                self.vec[q] = -1

    def _propagate(self, _depth) -> bool:
        k = self.k
        masks, sid, val = self.masks, self.sid, self.val
        changed = True
        while changed:
            changed = False
            one = [0] * self.nsup
            zero = [0] * self.nsup
            for i in range(self.nsup):
                row = val[i]
                o = z = 0
                for y in range(k):
                    if row[y] == 1:
                        o |= 1 << y
                    elif row[y] == 0:
                        z |= 1 << y
                one[i], zero[i] = o, z
            # transitivity: B <= cl(A) forces cl(B) <= cl(A)
            for ia, ma in enumerate(self.masks):
                oa, za = one[ia], zero[ia]
                for ib, mb in enumerate(self.masks):
                    if mb & ~oa:
                        continue
                    ob, zb = one[ib], zero[ib]
                    up = ob & ~oa
                    down = za & ~zb
                    if up & za or down & ob:
                        return False
                    for y in range(k):
                        if up >> y & 1:
                            if not self._assign(ia, y, 1):
                                return False
                            changed = True
                        if down >> y & 1:
                            if not self._assign(ib, y, 0):
                                return False
                            changed = True
            if changed:
                continue
            # restricted semimodularity, forward direction
            for ib, mb in enumerate(self.masks):
                if bin(mb).count("1") > 2:
                    continue
                ob, zb = one[ib], zero[ib]
                for x in range(k):
                    if mb >> x & 1:
                        continue
                    it = sid[mb | (1 << x)]
                    ot = one[it]
                    cand = ot & zb
                    if not cand:
                        continue
                    for y in range(k):
                        if cand >> y & 1:
                            iby = sid[mb | (1 << y)]
                            add = ot & ~one[iby]
                            for z in range(k):
                                if add >> z & 1:
                                    if not self._assign(iby, z, 1):
                                        return False
                                    changed = True
        return True

    def _beaten(self) -> bool:
        """True when some relabeling is already lex-greater than vec."""
        if len(self.perm_idx) == 0:
            return False
        vec = self.vec
        cand = vec[self.perm_idx]                       # (P, L)
        a = vec[None, :]
        unk = (a < 0) | (cand < 0)
        diff = (a != cand) & ~unk
        stop = unk | diff
        hit = stop.any(axis=1)
        first = np.where(hit, stop.argmax(axis=1), self.L)
        rows = np.flatnonzero(hit)
        if len(rows) == 0:
            return False
        f = first[rows]
        decided = diff[rows, f]
        losing = decided & (vec[f] < cand[rows, f])
        return bool(losing.any())

    def _dfs(self, start):
        if self._beaten():
            return
        var = None
        for idx in range(start, len(self.branch_vars)):
            s, y = self.branch_vars[idx]
            if self.val[s, y] < 0:
                var = idx
                break
        if var is None:
            self._leaf()
            return
        s, y = self.branch_vars[var]
        for v in (1, 0):
            mark = len(self.trail)
            if self._assign(s, y, v) and self._propagate(0):
                self._dfs(var + 1)
            self._undo(mark)

    def _leaf(self):
        cm = ClosureMap(self.k, {
            frozenset(x + 1 for x in range(self.k) if self.masks[i] >> x & 1):
            frozenset(y + 1 for y in range(self.k) if self.val[i, y] == 1)
            for i in range(self.nsup)
        })
        if not verify_closure(cm) or not has_restricted_semimodularity(cm):
            return
        if len(self.perm_idx):
            cand = self.vec[self.perm_idx]
            a = self.vec[None, :]
            gt = np.flatnonzero((cand != a).any(axis=1))
            for r in gt:
                d = int((cand[r] != self.vec).argmax())
                if cand[r][d] > self.vec[d]:
                    return
        self.out.append(cm)


_APPROX_CACHE: dict = {}


def enumerate_3approx(k: int, free_singletons: bool = False) -> list:
    """One lex-greatest representative per conjugacy class.

    By default singleton closures are pinned to cl({x}) = {x}, matching
    the discrete search where the ground set is an antichain under the
    natural order.
    """
    if k < 1:
        raise ValueError("ground set size must be at least 1")
    key = (k, free_singletons)
    if key not in _APPROX_CACHE:
        _APPROX_CACHE[key] = _Enum(k, free_singletons).run()
    return list(_APPROX_CACHE[key])


# --- serialization --------------------------------------------------------

def closure_to_text(S: ClosureMap) -> str:
    """Format: k, then one line 'x1 x2 x3 : y1 y2 ...' per subset."""
    lines = [str(S.k)]
    for a in _subsets(S.k):
        xs = sorted(a)
        while len(xs) < 3:
            xs.insert(0, xs[0])
        ys = " ".join(str(y) for y in sorted(S.cl[a]))
        lines.append(f"{xs[0]} {xs[1]} {xs[2]} : {ys}".rstrip())
    return "\n".join(lines) + "\n"


def closure_from_text(text: str) -> ClosureMap:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    k = int(lines[0])
    cl = {}
    for ln in lines[1:]:
        left, _, right = ln.partition(":")
        xs = frozenset(int(x) for x in left.split())
        ys = frozenset(int(y) for y in right.split())
        if xs in cl and cl[xs] != ys:
            raise ValueError(f"conflicting closures for {sorted(xs)}")
        cl[xs] = ys
    return ClosureMap(k, cl)
