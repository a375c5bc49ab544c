"""Named example algebras with fixed, documented basis orders.

=============  =======================================  ===================
name           basis order                              flags
=============  =======================================  ===================
abelian(n)     e1..en                                   centerless iff n=0
heisenberg     x, y, z  ([x,y] = z)                     neither
affine2        x, y     ([x,y] = y)                     centerless only
sl(n)          E_ij (i != j, lexicographic), H_1..H_n-1 perfect, centerless
               (sl(2) is labelled e, f, h)
current_sl2(k) e_t0, f_t0, h_t0, e_t1, ... (degree-major) perfect, centerless
direct_sum     blocks in the given order
=============  =======================================  ===================
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import LieAlgebra, checked, direct_sum
from .fields import QQ, Field


@dataclass(frozen=True)
class CatalogSpec:
    name: str
    n: int | None = None
    k: int | None = None
    field: Field = QQ
    parts: tuple["CatalogSpec", ...] = ()


def abelian(n: int, F: Field = QQ) -> LieAlgebra:
    if n < 0:
        raise ValueError("abelian dimension must be nonnegative")
    return checked(LieAlgebra(F, n, {}, name=f"abelian_{n}"))


def heisenberg(F: Field = QQ) -> LieAlgebra:
    return checked(LieAlgebra(F, 3, {(0, 1): (0, 0, 1)}, ["x", "y", "z"], name="heisenberg"))


def affine2(F: Field = QQ) -> LieAlgebra:
    return checked(LieAlgebra(F, 2, {(0, 1): (0, 1)}, ["x", "y"], name="affine2"))


def _sl_basis(n: int):
    off = [(i, j) for i, j in product(range(n), repeat=2) if i != j]
    return off, list(range(n - 1))


def sl(n: int, F: Field = QQ) -> LieAlgebra:
    """sl_n on the basis E_ij (i != j) followed by H_i = E_ii - E_(i+1)(i+1)."""
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    if F.is_prime and n % F.p == 0:
        raise ValueError(f"sl({n}) over {F} has nonzero center (p divides n)")
    off, hs = _sl_basis(n)
    dim = len(off) + len(hs)
    index = {ij: a for a, ij in enumerate(off)}

    def as_matrix(a):
        m = [[0] * n for _ in range(n)]
        if a < len(off):
            i, j = off[a]
            m[i][j] = 1
        else:
            h = a - len(off)
            m[h][h], m[h + 1][h + 1] = 1, -1
        return m

    def decompose(m):
        v = [0] * dim
        for (i, j), a in index.items():
            v[a] = m[i][j]
        partial = 0
        for h in range(n - 1):
            partial += m[h][h]
            v[len(off) + h] = partial
        return v

    mats = [as_matrix(a) for a in range(dim)]
    brackets = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            x, y = mats[a], mats[b]
            c = [[sum(x[i][t] * y[t][j] - y[i][t] * x[t][j] for t in range(n)) for j in range(n)]
                 for i in range(n)]
            v = decompose(c)
            if any(v):
                brackets[(a, b)] = v
    if n == 2:
        labels = ["e", "f", "h"]
    else:
        labels = [f"E{i + 1}{j + 1}" for i, j in off] + [f"H{h + 1}" for h in hs]
    return checked(LieAlgebra(F, dim, brackets, labels, name=f"sl_{n}"))


def current_sl2(k: int, F: Field = QQ) -> LieAlgebra:
    """sl_2 ⊗ F[t]/(t^k); ``[x t^i, y t^j] = [x, y] t^(i+j)``, zero once i+j >= k."""
    if k < 1:
        raise ValueError("truncation order k must be >= 1")
    if F.characteristic in (2, 3):
        raise ValueError("current_sl2 is only built in characteristic 0 or >= 5")
    base = sl(2, F)
    dim = 3 * k
    brackets = {}
    for i in range(k):
        for j in range(k):
            if i + j >= k:
                continue
            for x in range(3):
                for y in range(3):
                    a, b = 3 * i + x, 3 * j + y
                    if a >= b:
                        continue
                    v = [0] * dim
                    for z, c in enumerate(base.structure(x, y)):
                        v[3 * (i + j) + z] = c
                    if any(v):
                        brackets[(a, b)] = v
    labels = [f"{x}_t{i}" for i in range(k) for x in "efh"]
    return checked(LieAlgebra(F, dim, brackets, labels, name=f"current_sl2_{k}"))


def degree_derivation(k: int, F: Field = QQ):
    """The outer derivation ``x t^i -> i x t^i`` of current_sl2(k), as a matrix."""
    dim = 3 * k
    return tuple(tuple(F(a // 3) if a == b else F.zero for b in range(dim)) for a in range(dim))


def build_named(spec: CatalogSpec) -> LieAlgebra:
    F = spec.field
    name = spec.name
    if name == "abelian":
        if spec.n is None:
            raise ValueError("abelian needs n")
        return abelian(spec.n, F)
    if name == "heisenberg":
        return heisenberg(F)
    if name == "affine2":
        return affine2(F)
    if name == "sl":
        if spec.n is None:
            raise ValueError("sl needs n")
        return sl(spec.n, F)
    if name == "current_sl2":
        if spec.k is None:
            raise ValueError("current_sl2 needs k")
        return current_sl2(spec.k, F)
    if name == "direct_sum":
        if len(spec.parts) < 1:
            raise ValueError("direct_sum needs at least one part")
        parts = [build_named(CatalogSpec(p.name, p.n, p.k, F, p.parts)) for p in spec.parts]
        out = parts[0]
        for p in parts[1:]:
            out = direct_sum(out, p)
        return out
    raise ValueError(f"unknown catalog entry {name!r}")


NAMES = ("abelian", "heisenberg", "affine2", "sl", "current_sl2", "direct_sum")
