"""Invariant symmetric bilinear forms and orthogonal complements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg as la
from .algebra import LieAlgebra, Subspace, basis_ads, center, derived_subalgebra
from .certificate import Certificate
from .errors import ShapeError


@dataclass(frozen=True)
class BilinearForm:
    parent: LieAlgebra
    gram: la.Matrix

    def __post_init__(self):
        n = self.parent.dim
        F = self.parent.field
        gram = tuple(tuple(F(x) for x in row) for row in self.gram)
        if len(gram) != n or any(len(r) != n for r in gram):
            raise ShapeError(f"gram matrix must be {n}x{n}")
        if gram != la.transpose(gram):
            raise ShapeError("gram matrix is not symmetric")
        object.__setattr__(self, "gram", gram)

    def __call__(self, x: Sequence, y: Sequence):
        F = self.parent.field
        gy = la.matvec(self.gram, y, F)
        return F.norm(sum((a * b for a, b in zip(x, gy)), F.zero))

    @property
    def is_nondegenerate(self) -> bool:
        n = self.parent.dim
        return la.rank(self.gram, n, self.parent.field) == n


def killing_form(L: LieAlgebra) -> BilinearForm:
    """``B(e_i, e_j) = trace(ad e_i ad e_j)``."""
    F = L.field
    ads = basis_ads(L)
    gram = tuple(tuple(la.trace(la.matmul(a, b, F), F) for b in ads) for a in ads)
    return BilinearForm(L, gram)


def is_invariant(B: BilinearForm, L: LieAlgebra | None = None) -> tuple[bool, tuple | None]:
    """Check ``B([x,y],z) == B(x,[y,z])`` on every basis triple.

    Returns ``(True, None)`` or ``(False, (i, j, k))`` for the first failing triple.
    """
    L = L or B.parent
    if B.parent.dim != L.dim:
        raise ShapeError("form and algebra dimensions differ")
    n = L.dim
    for i in range(n):
        ei = L.basis_vector(i)
        for j in range(n):
            eij = L.structure(i, j)
            for k in range(n):
                if B(eij, L.basis_vector(k)) != B(ei, L.structure(j, k)):
                    return False, (i, j, k)
    return True, None


def orthogonal_complement(B: BilinearForm, V: Subspace) -> Subspace:
    n, F = B.parent.dim, B.parent.field
    if V.parent_dim != n:
        raise ShapeError("subspace dimension mismatch")
    rows = [la.matvec(B.gram, v, F) for v in V.basis]  # gram is symmetric
    _, null = la.rref_nullspace(rows, n, F)
    return Subspace.span(null, n, F)


def check_perp_center(B: BilinearForm, L: LieAlgebra | None = None) -> Certificate:
    """Compare ``[g,g]^perp`` with the center of g."""
    L = L or B.parent
    cert = Certificate(f"perp-center {L.name or ''}".strip())
    inv, witness = is_invariant(B, L)
    nondeg = B.is_nondegenerate
    cert.add("invariant", inv, witness=witness)
    cert.add("nondegenerate", nondeg, rank=la.rank(B.gram, L.dim, L.field), dim=L.dim)
    cert.applicable = inv and nondeg
    D = derived_subalgebra(L)
    perp = orthogonal_complement(B, D)
    C = center(L)
    cert.add("derived_perp_equals_center", perp == C, informational=not cert.applicable,
             derived=D.dim, derived_perp=perp.dim, center=C.dim)
    # the inclusion center ⊆ [g,g]^perp needs invariance only
    cert.add("center_in_derived_perp", C.issubspace(perp), informational=not inv)
    return cert


def block_form(*forms: BilinearForm, parent: LieAlgebra) -> BilinearForm:
    """Orthogonal sum of forms on the summands of a direct sum."""
    F = parent.field
    n = sum(f.parent.dim for f in forms)
    gram = [[F.zero] * n for _ in range(n)]
    off = 0
    for f in forms:
        d = f.parent.dim
        for i in range(d):
            for j in range(d):
                gram[off + i][off + j] = f.gram[i][j]
        off += d
    return BilinearForm(parent, tuple(tuple(r) for r in gram))
