"""Exact dense linear algebra over a :class:`~liecomplete.fields.Field`.

Vectors are tuples of field elements and matrices are tuples of row tuples.
Elimination works internally on sparse ``{column: value}`` rows, which keeps
the Leibniz systems (thousands of rows, a handful of nonzeros each) cheap.

All results are canonical: the reduced row echelon form of a matrix is
unique, and nullspace bases use the free-variable unit pattern with pivots
chosen left to right.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ShapeError
from .fields import Field, Scalar

Vector = tuple
Matrix = tuple


class _Echelon:
    """Incrementally maintained reduced row echelon form.

    Pivot rows are kept fully reduced against each other, so reducing a new
    row against them never re-introduces a pivot column.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Scalar]] = {}

    def reduce(self, row: dict[int, Scalar]) -> dict[int, Scalar]:
        norm = self.field.norm
        row = dict(row)
        for c in [c for c in row if c in self.pivots]:
            f = row.get(c)
            if not f:
                continue
            for k, v in self.pivots[c].items():
                nv = norm(row.get(k, 0) - f * v)
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict[int, Scalar]) -> bool:
        """Insert ``row``; return True when it increased the rank."""
        F = self.field
        norm = F.norm
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        s = F.inv(row[lead])
        row = {k: norm(v * s) for k, v in row.items()}
        for prow in self.pivots.values():
            f = prow.get(lead)
            if not f:
                continue
            for k, v in row.items():
                nv = norm(prow.get(k, 0) - f * v)
                if nv:
                    prow[k] = nv
                else:
                    prow.pop(k, None)
        self.pivots[lead] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> list[int]:
        return sorted(self.pivots)

    def rows(self) -> list[Vector]:
        zero = self.field.zero
        out = []
        for c in self.pivot_columns():
            r = [zero] * self.ncols
            for k, v in self.pivots[c].items():
                r[k] = v
            out.append(tuple(r))
        return out

    def nullspace(self) -> list[Vector]:
        F = self.field
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            v = [F.zero] * self.ncols
            v[f] = F.one
            for c, prow in self.pivots.items():
                x = prow.get(f)
                if x:
                    v[c] = F.neg(x)
            basis.append(tuple(v))
        return basis


def _sparse(row: Sequence[Scalar], field: Field) -> dict[int, Scalar]:
    out = {}
    for k, v in enumerate(row):
        if v:
            v = field(v)
            if v:
                out[k] = v
    return out


def _check_lengths(rows: Iterable[Sequence], ncols: int) -> None:
    for r in rows:
        if len(r) != ncols:
            raise ShapeError(f"row of length {len(r)} in a matrix with {ncols} columns")


def echelon(rows: Sequence[Sequence[Scalar]], ncols: int, field: Field) -> _Echelon:
    _check_lengths(rows, ncols)
    ech = _Echelon(field, ncols)
    for r in rows:
        ech.add(_sparse(r, field))
    return ech


def echelon_sparse(rows: Iterable[dict[int, Scalar]], ncols: int, field: Field) -> _Echelon:
    """Like :func:`echelon` for rows already given as ``{col: value}`` dicts."""
    ech = _Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return ech


def rref(rows: Sequence[Sequence[Scalar]], ncols: int, field: Field) -> tuple[list[int], list[Vector]]:
    """Return ``(pivot_columns, nonzero_rref_rows)``."""
    ech = echelon(rows, ncols, field)
    return ech.pivot_columns(), ech.rows()


def rref_nullspace(rows: Sequence[Sequence[Scalar]], ncols: int, field: Field) -> tuple[int, list[Vector]]:
    """Rank and canonical nullspace basis of the matrix with the given rows.

    >>> from liecomplete.fields import QQ
    >>> rank, basis = rref_nullspace([[1, 2], [2, 4]], 2, QQ)
    >>> rank, [tuple(map(int, v)) for v in basis]
    (1, [(-2, 1)])
    """
    ech = echelon(rows, ncols, field)
    return ech.rank, ech.nullspace()


def span_union_rank(vs: Sequence[Sequence[Scalar]], ws: Sequence[Sequence[Scalar]], field: Field,
                    length: int | None = None) -> tuple[int, list[Vector]]:
    """Rank and RREF basis of ``span(vs ∪ ws)``."""
    allv = list(vs) + list(ws)
    if length is None:
        if not allv:
            return 0, []
        length = len(allv[0])
    ech = echelon(allv, length, field)
    return ech.rank, ech.rows()


def rank(rows: Sequence[Sequence[Scalar]], ncols: int, field: Field) -> int:
    return echelon(rows, ncols, field).rank


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int, field: Field) -> Vector | None:
    """One solution of ``A x = rhs`` (free variables set to zero), or None."""
    if len(rows) != len(rhs):
        raise ShapeError("right-hand side length does not match row count")
    aug = [tuple(r) + (field(b),) for r, b in zip(rows, rhs)]
    ech = echelon(aug, ncols + 1, field)
    if ncols in ech.pivots:
        return None
    x = [field.zero] * ncols
    for c, prow in ech.pivots.items():
        x[c] = prow.get(ncols, field.zero)
    return tuple(x)


def coordinates(basis: Sequence[Vector], pivots: Sequence[int], v: Sequence[Scalar], field: Field) -> Vector | None:
    """Coordinates of ``v`` in an RREF basis, or None when ``v`` is outside its span."""
    coords = tuple(v[p] for p in pivots)
    if combine(coords, basis, field, len(v)) != tuple(field(x) for x in v):
        return None
    return coords


# ---------------------------------------------------------------------------
# dense helpers
# ---------------------------------------------------------------------------

def zeros(r: int, c: int, field: Field) -> Matrix:
    return tuple((field.zero,) * c for _ in range(r))


def identity(n: int, field: Field) -> Matrix:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def combine(coeffs: Sequence[Scalar], vectors: Sequence[Sequence[Scalar]], field: Field, length: int) -> Vector:
    norm = field.norm
    out = [field.zero] * length
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] = out[k] + c * x
    return tuple(norm(x) for x in out)


def matmul(a: Matrix, b: Matrix, field: Field) -> Matrix:
    norm = field.norm
    if not a:
        return ()
    if len(a[0]) != len(b):
        raise ShapeError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero] * ncols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(tuple(norm(v) for v in acc))
    return tuple(out)


def matvec(a: Matrix, v: Sequence[Scalar], field: Field) -> Vector:
    norm = field.norm
    return tuple(norm(sum((x * y for x, y in zip(row, v) if x and y), field.zero)) for row in a)


def mat_add(a: Matrix, b: Matrix, field: Field) -> Matrix:
    norm = field.norm
    return tuple(tuple(norm(x + y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix, field: Field) -> Matrix:
    norm = field.norm
    return tuple(tuple(norm(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Scalar, a: Matrix, field: Field) -> Matrix:
    norm = field.norm
    return tuple(tuple(norm(c * x) for x in r) for r in a)


def commutator(a: Matrix, b: Matrix, field: Field) -> Matrix:
    return mat_sub(matmul(a, b, field), matmul(b, a, field), field)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def trace(a: Matrix, field: Field) -> Scalar:
    return field.norm(sum((a[i][i] for i in range(len(a))), field.zero))


def flatten(a: Matrix) -> Vector:
    """Row-major flattening ``a[r][c] -> index r*ncols + c``."""
    return tuple(x for row in a for x in row)


def unflatten(v: Sequence[Scalar], n: int) -> Matrix:
    return tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n))


def is_zero(v) -> bool:
    if v and isinstance(v[0], tuple):
        return all(not x for row in v for x in row)
    return all(not x for x in v)
