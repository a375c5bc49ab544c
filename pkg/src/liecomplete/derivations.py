"""Derivation algebras, inner derivations, completeness and the derivation tower."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg as la
from .algebra import (LieAlgebra, Quotient, Subspace, basis_ads, center, checked,
                      quotient_algebra)
from .certificate import Certificate
from .errors import InternalInvariantError, PreconditionError

COMPLETE_REACHED = "complete_reached"
MAX_ITERATIONS = "max_iterations"


def leibniz_rows(L: LieAlgebra) -> list[dict]:
    """Sparse rows of the linear system ``d([e_i,e_j]) = [d e_i, e_j] + [e_i, d e_j]``.

    Unknown ``d_ab`` (row a, column b, so ``d(e_b) = sum_a d_ab e_a``) sits at
    index ``a*n + b``.  One block of n rows per pair ``i < j``, pairs in
    lexicographic order, row k of a block being the e_k component.
    """
    n, F = L.dim, L.field
    c = L.structure
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = c(i, j)
            for k in range(n):
                row: dict[int, object] = {}
                for l, v in enumerate(cij):
                    if v:
                        row[k * n + l] = row.get(k * n + l, 0) + v
                for a in range(n):
                    v = c(a, j)[k]
                    if v:
                        row[a * n + i] = row.get(a * n + i, 0) - v
                    v = c(i, a)[k]
                    if v:
                        row[a * n + j] = row.get(a * n + j, 0) - v
                row = {key: F.norm(F(v)) for key, v in row.items()}
                row = {key: v for key, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def is_derivation(L: LieAlgebra, d: la.Matrix) -> tuple[int, int] | None:
    """Check the Leibniz rule on all basis pairs directly; return a failing pair or None."""
    F = L.field
    for i in range(L.dim):
        di = tuple(row[i] for row in d)
        for j in range(i + 1, L.dim):
            dj = tuple(row[j] for row in d)
            lhs = la.matvec(d, L.structure(i, j), F)
            rhs = la.combine((F.one, F.one), [L.bracket(di, L.basis_vector(j)),
                                              L.bracket(L.basis_vector(i), dj)], F, L.dim)
            if lhs != rhs:
                return i, j
    return None


@dataclass(frozen=True)
class DerivationSpace:
    """Der(L) with its inner ideal and its own Lie structure.

    ``space`` is Der(L) inside F^(n*n) (row-major flattening) in RREF;
    ``basis`` holds the same vectors reshaped to n x n matrices and is the
    basis used for ``der_algebra``.  ``inner`` is ad(L) in the coordinates of
    that basis, and ``inner_basis`` the ad matrices of the basis elements
    ``inner_elements`` that give an independent spanning set.
    """

    parent: LieAlgebra
    space: Subspace
    basis: tuple[la.Matrix, ...]
    inner_basis: tuple[la.Matrix, ...]
    inner_elements: tuple[int, ...]
    inner: Subspace
    der_algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def inner_dim(self) -> int:
        return len(self.inner_basis)

    @property
    def outer_dim(self) -> int:
        return self.dim - self.inner_dim

    def coordinates(self, d: la.Matrix) -> tuple | None:
        """Coordinates of a matrix in ``basis``, or None if it is not a derivation."""
        return self.space.coordinates(la.flatten(d))

    def matrix(self, coords: Sequence) -> la.Matrix:
        n = self.parent.dim
        return la.unflatten(la.combine(coords, self.space.basis, self.parent.field, n * n), n)


def derivation_basis(L: LieAlgebra) -> DerivationSpace:
    n, F = L.dim, L.field
    ech = la.echelon_sparse(leibniz_rows(L), n * n, F)
    space = Subspace.span(ech.nullspace(), n * n, F)
    basis = tuple(la.unflatten(v, n) for v in space.basis)

    ads = basis_ads(L)
    inner_ech = la._Echelon(F, n * n)
    inner_basis, inner_elements, inner_coords = [], [], []
    for i, a in enumerate(ads):
        if inner_ech.add({k: v for k, v in enumerate(la.flatten(a)) if v}):
            coords = space.coordinates(la.flatten(a))
            if coords is None:
                raise InternalInvariantError(f"ad of {L.labels[i]} is not a derivation")
            inner_basis.append(a)
            inner_elements.append(i)
            inner_coords.append(coords)
    m = len(basis)
    inner = Subspace.span(inner_coords, m, F)

    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            comm = la.commutator(basis[a], basis[b], F)
            coords = space.coordinates(la.flatten(comm))
            if coords is None:
                raise InternalInvariantError("commutator of derivations left Der")
            if any(coords):
                brackets[(a, b)] = coords
    labels = [f"d{a + 1}" for a in range(m)]
    der_alg = checked(LieAlgebra(F, m, brackets, labels, name=f"Der({L.name or 'L'})"))
    return DerivationSpace(L, space, basis, tuple(inner_basis), tuple(inner_elements), inner, der_alg)


def der_algebra(L: LieAlgebra) -> LieAlgebra:
    return derivation_basis(L).der_algebra


def is_complete(L: LieAlgebra, der: DerivationSpace | None = None) -> Certificate:
    """Complete means: zero center and every derivation inner."""
    der = der or derivation_basis(L)
    cert = Certificate(f"complete {L.name or ''}".strip())
    C = center(L)
    cert.add("centerless", C.dim == 0, witness=C.basis[0] if C.dim else None, center=C.dim)
    outer = None
    if der.inner.dim < der.dim:
        for a, coords in enumerate(la.identity(der.dim, L.field)):
            if not der.inner.contains(coords):
                outer = der.basis[a]
                break
    cert.add("all_derivations_inner", der.inner.dim == der.dim, witness=outer,
             der=der.dim, inner=der.inner.dim)
    return cert


@dataclass(frozen=True)
class OuterCenter:
    quotient: Quotient
    center: Subspace
    lifts: tuple[la.Matrix, ...]
    centerless_input: bool

    @property
    def dim(self) -> int:
        return self.center.dim

    @property
    def outer_dim(self) -> int:
        return self.quotient.algebra.dim


def outer_center(L: LieAlgebra, der: DerivationSpace | None = None) -> OuterCenter:
    """Center of Der(L)/ad(L); ``lifts`` are derivations representing its basis."""
    der = der or derivation_basis(L)
    Q = quotient_algebra(der.der_algebra, der.inner)
    Z = center(Q.algebra)
    lifts = tuple(der.matrix(Q.lift(z)) for z in Z.basis)
    return OuterCenter(Q, Z, lifts, center(L).dim == 0)


@dataclass(frozen=True)
class TowerReport:
    dims: tuple[int, ...]
    status: str
    levels: tuple[LieAlgebra, ...]

    @property
    def length(self) -> int:
        """Index of the last level computed (0 when L is already complete)."""
        return len(self.levels) - 1


def derivation_tower(L: LieAlgebra, max_levels: int = 5) -> TowerReport:
    """Iterate L, Der L, Der Der L, ... until a complete level or ``max_levels`` levels."""
    if max_levels < 1:
        raise ValueError("max_levels must be >= 1")
    C = center(L)
    if C.dim:
        raise PreconditionError("derivation tower needs a centerless algebra", witness=C.basis[0])
    levels = [L]
    while True:
        cur = levels[-1]
        der = derivation_basis(cur)
        if is_complete(cur, der):
            status = COMPLETE_REACHED
            break
        if len(levels) >= max_levels:
            status = MAX_ITERATIONS
            break
        nxt = der.der_algebra
        if center(nxt).dim:
            raise InternalInvariantError("derivation algebra of a centerless algebra has a center")
        levels.append(nxt)
    return TowerReport(tuple(l.dim for l in levels), status, tuple(levels))
