"""The holomorph g ⋉ Der(g) and certification of the completeness theorem.

Holomorph basis order: the n basis vectors of g first, then the m echelonized
derivation-basis elements.  The bracket is

    [(x, d), (y, e)] = ([x, y] + d(y) - e(x), [d, e]).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .algebra import LieAlgebra, Subspace, basis_ads, center, classify, derived_subalgebra, validate
from .certificate import Certificate
from .derivations import DerivationSpace, derivation_basis, is_complete, is_derivation, outer_center
from .errors import InternalInvariantError, PreconditionError


@dataclass(frozen=True)
class Holomorph:
    algebra: LieAlgebra
    g: LieAlgebra
    der: DerivationSpace

    @property
    def n(self) -> int:
        return self.g.dim

    @property
    def m(self) -> int:
        return self.der.dim

    def embed_g(self, x) -> tuple:
        return tuple(x) + (self.g.field.zero,) * self.m

    def embed_der(self, coords) -> tuple:
        return (self.g.field.zero,) * self.n + tuple(coords)

    def g_block(self) -> Subspace:
        F = self.g.field
        return Subspace.span([self.embed_g(self.g.basis_vector(i)) for i in range(self.n)],
                             self.n + self.m, F)


def build_holomorph(L: LieAlgebra, der: DerivationSpace | None = None) -> Holomorph:
    der = der or derivation_basis(L)
    F = L.field
    n, m = L.dim, der.dim
    zn, zm = (F.zero,) * n, (F.zero,) * m
    brackets = {}
    for (i, j), v in L.table.items():
        brackets[(i, j)] = tuple(v) + zm
    for b, d in enumerate(der.basis):
        for i in range(n):
            # [x, d] = -d(x)
            col = tuple(F.neg(d[r][i]) for r in range(n))
            if any(col):
                brackets[(i, n + b)] = col + zm
    for (a, b), v in der.der_algebra.table.items():
        brackets[(n + a, n + b)] = zn + tuple(v)
    labels = list(L.labels) + [f"D:{l}" for l in der.der_algebra.labels]
    h = LieAlgebra(F, n + m, brackets, labels, name=f"hol({L.name or 'L'})")
    if not validate(h):
        raise InternalInvariantError("holomorph bracket violates the Jacobi identity")
    return Holomorph(h, L, der)


def certify_completeness_theorem(L: LieAlgebra) -> Certificate:
    """Certify, for perfect centerless ``L``, that Der(L) is complete and that
    hol(L) is complete exactly when Der(L)/ad(L) has zero center.

    Both sides of the equivalence are computed directly.  When the
    hypotheses fail the certificate is marked not applicable and the part
    claims are kept as information.
    """
    cert = Certificate(f"verify {L.name or 'algebra'}")
    D = derived_subalgebra(L)
    C = center(L)
    perfect, centerless = D.dim == L.dim, C.dim == 0
    cert.add("hypothesis_perfect", perfect, derived=D.dim, dim=L.dim)
    cert.add("hypothesis_centerless", centerless, witness=C.basis[0] if C.dim else None, center=C.dim)
    cert.applicable = perfect and centerless
    info = not cert.applicable

    der = derivation_basis(L)
    DL = der.der_algebra
    zd = center(DL)
    cert.add("der_centerless", zd.dim == 0, informational=info, der=DL.dim, center=zd.dim)
    dd = derivation_basis(DL)
    comp = is_complete(DL, dd)
    cert.add("der_complete", comp.overall, informational=info,
             witness=comp["all_derivations_inner"].witness,
             der=DL.dim, der_der=dd.dim, der_der_inner=dd.inner.dim)

    oc = outer_center(L, der)
    hol = build_holomorph(L, der)
    hder = derivation_basis(hol.algebra)
    hcomp = is_complete(hol.algebra, hder)
    hc = hcomp["centerless"]
    side_outer = oc.dim == 0
    side_hol = hcomp.overall
    cert.add("outer_center_zero", side_outer, informational=True,
             witness=oc.lifts[0] if oc.lifts else None,
             der=der.dim, inner=der.inner_dim, outer=oc.outer_dim, outer_center=oc.dim)
    cert.add("holomorph_centerless", hc.holds, informational=True, center=hc.dims["center"])
    cert.add("holomorph_complete", side_hol, informational=True,
             witness=hcomp["all_derivations_inner"].witness,
             holomorph=hol.algebra.dim, holomorph_der=hder.dim, holomorph_inner=hder.inner.dim)
    cert.add("holomorph_iff_outer_centerless", side_hol == side_outer, informational=info)
    return cert


@dataclass(frozen=True)
class OuterHolomorphDerivation:
    matrix: la.Matrix
    holomorph: Holomorph
    x: tuple[tuple, ...]   # x_d for each derivation-basis element d


def _ad_system(L: LieAlgebra):
    # rows indexed by matrix entries (r, c), columns by basis elements i
    ads = basis_ads(L)
    n = L.dim
    return [tuple(ads[i][r][c] for i in range(n)) for r in range(n) for c in range(n)]


def outer_holomorph_derivation(L: LieAlgebra, D_outer: la.Matrix,
                               der: DerivationSpace | None = None) -> OuterHolomorphDerivation:
    """Lift an outer derivation with ``[D, Der L] ⊆ ad L`` to a non-inner derivation of hol(L).

    The lift vanishes on g and sends each derivation d to ``x_d - ad(x_d)``
    where ``x_d`` is the unique element with ``[D, d] = ad(x_d)``.
    """
    F = L.field
    n = L.dim
    flags = classify(L)
    if not (flags.is_perfect and flags.is_centerless):
        raise PreconditionError(f"{L.name or 'algebra'} is not perfect and centerless", witness=flags)
    D_outer = tuple(tuple(F(x) for x in row) for row in D_outer)
    if len(D_outer) != n or any(len(r) != n for r in D_outer):
        raise PreconditionError(f"expected a {n}x{n} matrix")
    bad = is_derivation(L, D_outer)
    if bad is not None:
        raise PreconditionError("matrix is not a derivation", witness=bad)
    der = der or derivation_basis(L)
    system = _ad_system(L)
    if la.rank(system, n, F) != n:
        raise InternalInvariantError("ad is not injective on a centerless algebra")
    y = la.solve(system, la.flatten(D_outer), n, F)
    if y is not None:
        raise PreconditionError("derivation is inner", witness={"inner": y})

    hol = build_holomorph(L, der)
    m = der.dim
    cols = [(F.zero,) * (n + m)] * n
    xs = []
    for b, d in enumerate(der.basis):
        target = la.commutator(D_outer, d, F)
        x = la.solve(system, la.flatten(target), n, F)
        if x is None:
            raise PreconditionError("bracket with Der leaves the inner derivations",
                                    witness={"derivation": b})
        coords = der.coordinates(L.ad(x))
        if coords is None:
            raise InternalInvariantError("inner derivation missing from Der")
        xs.append(x)
        cols.append(tuple(x) + tuple(F.neg(c) for c in coords))
    H = la.transpose(cols)

    if is_derivation(hol.algebra, H) is not None:
        raise InternalInvariantError("constructed map fails the Leibniz rule on the holomorph")
    hsys = _ad_system(hol.algebra)
    if la.solve(hsys, la.flatten(H), n + m, F) is not None:
        raise InternalInvariantError("constructed derivation is inner")
    return OuterHolomorphDerivation(H, hol, tuple(xs))
