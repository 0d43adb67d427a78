"""Line-oriented table serialization and streaming database tooling.

One record per line, ``n:e11 e12 ... enn`` with entries row-major.
Database operations stream records and keep only O(1) state, except
dedup which holds one canonical form per distinct class.
"""

from typing import Callable, NamedTuple, Optional

from .core import (
    Table,
    ShapeError,
    as_table,
    canonical_form,
    is_discrete,
    is_linear,
    is_regular,
    is_semiregular,
    verify_hilbert,
    verify_l_algebra,
)


class ParseError(ValueError):
    pass


def serialize(M: Table) -> str:
    """Newline-terminated record of a table."""
    n = len(M)
    flat = " ".join(str(M[i][j]) for i in range(n) for j in range(n))
    return f"{n}:{flat}\n"


def _parse_shape(line: str) -> Table:
    body = line.strip()
    head, sep, rest = body.partition(":")
    if not sep:
        raise ParseError("missing ':' separator")
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"bad size field {head!r}") from None
    entries = rest.split()
    if len(entries) != n * n:
        raise ParseError(f"expected {n * n} entries, got {len(entries)}")
    try:
        flat = [int(x) for x in entries]
    except ValueError:
        raise ParseError("non-integer entry") from None
    try:
        return as_table(tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n)))
    except ShapeError as exc:
        raise ParseError(str(exc)) from None


def parse(line: str, raw: bool = False) -> Table:
    """Parse one record; validates the table axioms unless raw."""
    M = _parse_shape(line)
    if not raw:
        report = verify_l_algebra(M)
        if not report.valid:
            raise ParseError(
                f"table violates condition {report.condition} at {report.witness}"
            )
    return M


def _find_unit(M: Table) -> Optional[int]:
    """The element whose row is the identity, if unique."""
    n = len(M)
    units = [
        e for e in range(1, n + 1)
        if all(M[e - 1][j] == j + 1 for j in range(n))
        and all(M[i][e - 1] == e for i in range(n))
    ]
    return units[0] if len(units) == 1 else None


def parse_record(line: str):
    """Parse with unit normalization.

    Returns (table, renumbering): tables whose unit is not the last
    element are relabeled so it is, and the applied old->new map is
    returned (None when no renumbering was needed).
    """
    M = _parse_shape(line)
    n = len(M)
    e = _find_unit(M)
    if e is None:
        raise ParseError("no unit element found")
    renumbering = None
    if e != n:
        old_order = [x for x in range(1, n + 1) if x != e] + [e]
        newlab = {old: new + 1 for new, old in enumerate(old_order)}
        M = tuple(
            tuple(newlab[M[old_order[i] - 1][old_order[j] - 1]] for j in range(n))
            for i in range(n)
        )
        renumbering = tuple(newlab[x] for x in range(1, n + 1))
    report = verify_l_algebra(M)
    if not report.valid:
        raise ParseError(
            f"table violates condition {report.condition} at {report.witness}"
        )
    return M, renumbering


PREDICATES: dict = {
    "all": lambda M: True,
    "hilbert": verify_hilbert,
    "discrete": is_discrete,
    "linear": is_linear,
    "semiregular": is_semiregular,
    "regular": is_regular,
}


class DbResult(NamedTuple):
    count: int
    skipped: int
    skipped_lines: tuple


def _iter_records(path: str):
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                yield lineno, line


def db_count(path: str, predicate: str = "all") -> DbResult:
    """Count records matching the class predicate; invalid lines skip."""
    pred = PREDICATES[predicate]
    count = 0
    skipped = []
    for lineno, line in _iter_records(path):
        try:
            M, _ = parse_record(line)
        except ParseError:
            skipped.append(lineno)
            continue
        if pred(M):
            count += 1
    return DbResult(count, len(skipped), tuple(skipped))


def db_filter(path: str, predicate: str, out_path: str) -> DbResult:
    """Copy matching records to out_path, preserving order."""
    pred = PREDICATES[predicate]
    count = 0
    skipped = []
    with open(out_path, "w", encoding="ascii") as out:
        for lineno, line in _iter_records(path):
            try:
                M, _ = parse_record(line)
            except ParseError:
                skipped.append(lineno)
                continue
            if pred(M):
                out.write(serialize(M))
                count += 1
    return DbResult(count, len(skipped), tuple(skipped))


def db_dedup(path: str, out_path: str) -> DbResult:
    """Keep the first record of every isomorphism class, keyed by canonical form."""
    seen = set()
    count = 0
    skipped = []
    with open(out_path, "w", encoding="ascii") as out:
        for lineno, line in _iter_records(path):
            try:
                M, _ = parse_record(line)
            except ParseError:
                skipped.append(lineno)
                continue
            key = canonical_form(M)
            if key not in seen:
                seen.add(key)
                out.write(serialize(M))
                count += 1
    return DbResult(count, len(skipped), tuple(skipped))
