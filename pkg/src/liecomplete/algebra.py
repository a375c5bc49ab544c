"""Lie algebras given by structure constants, and their elementary invariants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .certificate import Certificate
from .errors import AxiomError, NotAnIdealError, ShapeError
from .fields import Field, Scalar

Vector = tuple


class LieAlgebra:
    """Finite-dimensional Lie algebra ``[e_i, e_j] = sum_k c_ij^k e_k``.

    Only pairs ``i < j`` are stored; the rest of the table follows from
    antisymmetry.  ``brackets`` may list a pair in either order.  A pair with
    ``i == j`` and a nonzero value, or a pair listed both ways with values
    that are not negatives of each other, raises :class:`AxiomError`.

    Instances are immutable.  The constructor does not check the Jacobi
    identity; use :func:`validate` or :func:`checked` for that.
    """

    __slots__ = ("field", "dim", "labels", "name", "_table", "_c")

    def __init__(self, field: Field, dim: int, brackets: Mapping[tuple[int, int], Sequence] | None = None,
                 labels: Sequence[str] | None = None, name: str | None = None):
        if dim < 0:
            raise ShapeError("dimension must be nonnegative")
        labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(labels) != dim:
            raise ShapeError(f"{len(labels)} labels for dimension {dim}")
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), vec in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ShapeError(f"bracket index ({i}, {j}) out of range for dimension {dim}")
            if len(vec) != dim:
                raise ShapeError(f"bracket ({i}, {j}) has {len(vec)} coefficients, expected {dim}")
            vec = tuple(field(x) for x in vec)
            if i == j:
                if any(vec):
                    raise AxiomError(f"[{labels[i]}, {labels[i]}] must vanish", witness=(i, i))
                continue
            if i > j:
                i, j = j, i
                vec = tuple(field.neg(x) for x in vec)
            if (i, j) in table and table[(i, j)] != vec:
                raise AxiomError(f"bracket of {labels[i]}, {labels[j]} is not antisymmetric", witness=(i, j))
            if any(vec):
                table[(i, j)] = vec
        self.field = field
        self.dim = dim
        self.labels = labels
        self.name = name
        self._table = table
        zero = (field.zero,) * dim
        c = [[zero] * dim for _ in range(dim)]
        for (i, j), vec in table.items():
            c[i][j] = vec
            c[j][i] = tuple(field.neg(x) for x in vec)
        self._c = tuple(tuple(row) for row in c)

    # -- structure constants ------------------------------------------------

    @property
    def table(self) -> dict[tuple[int, int], Vector]:
        """Nonzero brackets ``{(i, j): coefficients}`` for ``i < j``."""
        return dict(self._table)

    def structure(self, i: int, j: int) -> Vector:
        return self._c[i][j]

    def basis_vector(self, i: int) -> Vector:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def zero_vector(self) -> Vector:
        return (self.field.zero,) * self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.field, self.dim, self._table) == (other.field, other.dim, other._table)

    def __hash__(self):
        return hash((self.field, self.dim, tuple(sorted(self._table.items()))))

    def __repr__(self) -> str:
        nm = self.name or "LieAlgebra"
        return f"<{nm} dim={self.dim} over {self.field}>"

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        return bracket(self, x, y)

    def ad(self, x: Sequence[Scalar]) -> la.Matrix:
        return ad_matrix(self, x)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n stored as its canonical RREF basis."""

    field: Field
    parent_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Scalar]], parent_dim: int, field: Field) -> "Subspace":
        vectors = list(vectors)
        pivots, rows = la.rref(vectors, parent_dim, field)
        return cls(field, parent_dim, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, parent_dim: int, field: Field) -> "Subspace":
        return cls(field, parent_dim, (), ())

    @classmethod
    def whole(cls, parent_dim: int, field: Field) -> "Subspace":
        return cls.span(la.identity(parent_dim, field), parent_dim, field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def coordinates(self, v: Sequence[Scalar]) -> Vector | None:
        return la.coordinates(self.basis, self.pivots, v, self.field)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def complement_indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.parent_dim) if k not in self.pivots)

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Reduce ``v`` modulo the subspace so its pivot coordinates vanish."""
        F = self.field
        coeffs = [F.neg(v[p]) for p in self.pivots]
        corr = la.combine(coeffs, self.basis, F, self.parent_dim)
        return tuple(F.norm(a + b) for a, b in zip(v, corr))


def _check_vec(L: LieAlgebra, v: Sequence, what: str = "vector") -> None:
    if len(v) != L.dim:
        raise ShapeError(f"{what} has length {len(v)}, algebra has dimension {L.dim}")


def bracket(L: LieAlgebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    _check_vec(L, x)
    _check_vec(L, y)
    F = L.field
    out = [F.zero] * L.dim
    c = L._c
    for i, a in enumerate(x):
        if not a:
            continue
        row = c[i]
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, v in enumerate(row[j]):
                if v:
                    out[k] += ab * v
    return tuple(F.norm(v) for v in out)


def ad_matrix(L: LieAlgebra, x: Sequence[Scalar]) -> la.Matrix:
    """Matrix of ``y -> [x, y]``; column j is ``[x, e_j]``."""
    _check_vec(L, x)
    cols = [bracket(L, x, L.basis_vector(j)) for j in range(L.dim)]
    return la.transpose(cols) if cols else ()


def basis_ads(L: LieAlgebra) -> list[la.Matrix]:
    return [ad_matrix(L, L.basis_vector(i)) for i in range(L.dim)]


def validate(L: LieAlgebra) -> Certificate:
    """Check antisymmetry and the Jacobi identity on every basis triple."""
    cert = Certificate(f"validate {L.name or ''}".strip())
    n, F = L.dim, L.field
    anti = None
    for i in range(n):
        for j in range(n):
            if any(F.norm(a + b) for a, b in zip(L.structure(i, j), L.structure(j, i))):
                anti = (L.labels[i], L.labels[j])
                break
        if anti:
            break
    cert.add("antisymmetry", anti is None, witness=anti)
    jac = None
    for i in range(n):
        ei = L.basis_vector(i)
        for j in range(i + 1, n):
            ej = L.basis_vector(j)
            for k in range(j + 1, n):
                ek = L.basis_vector(k)
                s = la.combine(
                    (F.one,) * 3,
                    [bracket(L, L.structure(i, j), ek),
                     bracket(L, L.structure(j, k), ei),
                     bracket(L, L.structure(k, i), ej)],
                    F, n)
                if any(s):
                    jac = (L.labels[i], L.labels[j], L.labels[k])
                    break
            if jac:
                break
        if jac:
            break
    cert.add("jacobi", jac is None, witness=jac)
    return cert


def checked(L: LieAlgebra) -> LieAlgebra:
    """Return ``L`` after validation, raising :class:`AxiomError` on failure."""
    cert = validate(L)
    for claim in cert.claims:
        if not claim.holds:
            raise AxiomError(f"{claim.name} fails on {claim.witness}", witness=claim.witness)
    return L


def center(L: LieAlgebra) -> Subspace:
    # x central iff sum_i x_i c_ij^k = 0 for every j, k
    n, F = L.dim, L.field
    rows = [tuple(L.structure(i, j)[k] for i in range(n)) for j in range(n) for k in range(n)]
    _, null = la.rref_nullspace(rows, n, F)
    return Subspace.span(null, n, F)


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    return Subspace.span(L.table.values(), L.dim, L.field)


@dataclass(frozen=True)
class Flags:
    is_perfect: bool
    is_centerless: bool


def classify(L: LieAlgebra) -> Flags:
    return Flags(is_perfect=derived_subalgebra(L).dim == L.dim,
                 is_centerless=center(L).dim == 0)


def is_ideal(L: LieAlgebra, I: Subspace) -> tuple[int, Vector] | None:
    """Return None if ``I`` is an ideal, else a pair ``(i, b)`` with ``[e_i, b]`` outside ``I``."""
    for i in range(L.dim):
        ei = L.basis_vector(i)
        for b in I.basis:
            if not I.contains(bracket(L, ei, b)):
                return i, b
    return None


@dataclass(frozen=True)
class Quotient:
    algebra: LieAlgebra
    ideal: Subspace
    complement: tuple[int, ...]
    projection: la.Matrix

    def project(self, v: Sequence[Scalar]) -> Vector:
        return la.matvec(self.projection, v, self.ideal.field)

    def lift(self, w: Sequence[Scalar]) -> Vector:
        F = self.ideal.field
        out = [F.zero] * self.ideal.parent_dim
        for k, c in zip(self.complement, w):
            out[k] = c
        return tuple(out)


def quotient_algebra(L: LieAlgebra, I: Subspace) -> Quotient:
    """``L / I`` realized on the non-pivot coordinates of ``I``'s echelon basis."""
    if I.parent_dim != L.dim:
        raise ShapeError("subspace lives in a space of the wrong dimension")
    bad = is_ideal(L, I)
    if bad is not None:
        raise NotAnIdealError(f"[{L.labels[bad[0]]}, {bad[1]}] leaves the subspace", witness=bad)
    F = L.field
    comp = I.complement_indices()
    m = len(comp)
    reduced = [I.reduce(L.basis_vector(k)) for k in range(L.dim)]
    # projection of e_k is the complement part of its reduction
    projection = la.transpose([tuple(r[q] for q in comp) for r in reduced]) if m else ()
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            v = I.reduce(L.structure(comp[a], comp[b]))
            brackets[(a, b)] = tuple(v[q] for q in comp)
    Q = LieAlgebra(F, m, brackets, [L.labels[q] for q in comp],
                   name=f"{L.name or 'L'}/I" if I.dim else L.name)
    return Quotient(checked(Q), I, comp, projection)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    if L1.field != L2.field:
        raise ShapeError(f"cannot sum algebras over {L1.field} and {L2.field}")
    n1, n2 = L1.dim, L2.dim
    z1 = (L1.field.zero,) * n1
    z2 = (L1.field.zero,) * n2
    brackets = {(i, j): v + z2 for (i, j), v in L1.table.items()}
    brackets.update({(n1 + i, n1 + j): z1 + v for (i, j), v in L2.table.items()})
    labels = list(L1.labels) + list(L2.labels)
    if len(set(labels)) < len(labels):
        labels = [f"{l}_1" for l in L1.labels] + [f"{l}_2" for l in L2.labels]
    name = f"{L1.name or 'L1'}+{L2.name or 'L2'}"
    return checked(LieAlgebra(L1.field, n1 + n2, brackets, labels, name=name))
