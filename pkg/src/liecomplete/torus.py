"""Quantum tori at the level of exponents.

A quantum matrix with ``q_ij = ζ^E_ij`` (ζ a primitive N-th root of unity,
or of infinite order when N = 0) is stored as the integer matrix E.  Every
scalar σ(a, b) and f(a, b) is then a power of ζ, and we only ever compute
that exponent, reduced mod N.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .certificate import Certificate
from .errors import ShapeError
from .lattice import in_lattice, smith_kernel

CENTRAL = "central"
COMMUTATOR = "commutator"


@dataclass(frozen=True)
class ExponentTorus:
    n: int
    N: int
    E: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be positive")
        if self.N < 0:
            raise ValueError(f"order must be nonnegative, got {self.N}")
        E = [list(map(int, row)) for row in self.E]
        if len(E) != self.n or any(len(r) != self.n for r in E):
            raise ShapeError(f"exponent matrix must be {self.n}x{self.n}")
        if self.N:
            E = [[x % self.N for x in r] for r in E]
        for i in range(self.n):
            if self.reduce(E[i][i]):
                raise ValueError(f"E[{i}][{i}] must vanish (q_ii = 1)")
            for j in range(i + 1, self.n):
                if self.reduce(E[i][j] + E[j][i]):
                    raise ValueError(f"E is not antisymmetric at ({i}, {j}) (q_ji must be q_ij^-1)")
        object.__setattr__(self, "E", tuple(tuple(r) for r in E))

    @classmethod
    def from_flat(cls, n: int, N: int, entries: Sequence[int]) -> "ExponentTorus":
        if len(entries) != n * n:
            raise ShapeError(f"expected {n * n} exponent entries, got {len(entries)}")
        return cls(n, N, tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n)))

    def reduce(self, x: int) -> int:
        return x % self.N if self.N else x

    def to_json(self) -> dict:
        return {"n": self.n, "N": self.N, "E": [x for row in self.E for x in row]}

    @classmethod
    def from_json(cls, d: dict) -> "ExponentTorus":
        return cls.from_flat(int(d["n"]), int(d["N"]), [int(x) for x in d["E"]])


def _check(T: ExponentTorus, *vs: Sequence[int]) -> None:
    for v in vs:
        if len(v) != T.n:
            raise ShapeError(f"degree of length {len(v)} for a rank-{T.n} torus")


def sigma_exp(T: ExponentTorus, a: Sequence[int], b: Sequence[int]) -> int:
    """Exponent s with ``t^a t^b = ζ^s t^(a+b)`` (normal order t_1 ... t_n).

    Moving each t_i of ``t^b`` left past the t_j (j > i) of ``t^a`` costs
    ``q_ij`` per swap, giving ``sum_{i<j} E_ij a_j b_i``.
    """
    _check(T, a, b)
    s = 0
    for i in range(T.n):
        if not b[i]:
            continue
        for j in range(i + 1, T.n):
            s += T.E[i][j] * a[j] * b[i]
    return T.reduce(s)


def f_exp(T: ExponentTorus, a: Sequence[int], b: Sequence[int]) -> int:
    """Exponent of f with ``t^a t^b = f(a,b) t^b t^a``."""
    return T.reduce(sigma_exp(T, a, b) - sigma_exp(T, b, a))


def radical_basis(T: ExponentTorus) -> list[list[int]]:
    """HNF basis of the degrees a with f(a, ·) ≡ 1, i.e. ``E a ≡ 0 (mod N)``."""
    return smith_kernel([list(r) for r in T.E], T.N, T.n)


@dataclass(frozen=True)
class MonomialClass:
    degree: tuple[int, ...]
    kind: str
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def _unit(n: int, k: int) -> tuple[int, ...]:
    return tuple(int(i == k) for i in range(n))


def classify_degree(T: ExponentTorus, a: Sequence[int]) -> MonomialClass:
    a = tuple(a)
    _check(T, a)
    for k in range(T.n):
        c = _unit(T.n, k)
        if f_exp(T, a, c):
            return MonomialClass(a, COMMUTATOR, (c, tuple(x - y for x, y in zip(a, c))))
    return MonomialClass(a, CENTRAL)


def graded_decomposition_check(T: ExponentTorus, box_radius: int) -> tuple[list[MonomialClass], Certificate]:
    """Classify every degree in ``[-R, R]^n`` as central or as a commutator degree.

    A commutator degree a comes with a pair (c, a - c) such that
    ``[t^c, t^(a-c)]`` is a nonzero multiple of ``t^a``.
    """
    if box_radius < 1:
        raise ValueError("box_radius must be >= 1")
    rad = radical_basis(T)
    classes = []
    sound = True
    consistent = True
    bad = None
    for a in product(range(-box_radius, box_radius + 1), repeat=T.n):
        cls = classify_degree(T, a)
        classes.append(cls)
        if cls.kind == COMMUTATOR:
            c, rest = cls.witness
            if not f_exp(T, c, rest) or tuple(x + y for x, y in zip(c, rest)) != a:
                sound = False
                bad = bad or a
        if (cls.kind == CENTRAL) != in_lattice(rad, a):
            consistent = False
            bad = bad or a
    total = (2 * box_radius + 1) ** T.n
    n_central = sum(1 for c in classes if c.kind == CENTRAL)
    n_comm = sum(1 for c in classes if c.kind == COMMUTATOR)
    cert = Certificate(f"graded decomposition (n={T.n}, N={T.N}, R={box_radius})")
    cert.add("partition", n_central + n_comm == total == len(classes),
             box=total, central=n_central, commutator=n_comm)
    cert.add("witnesses_sound", sound, witness=bad if not sound else None)
    cert.add("central_matches_radical", consistent, witness=bad if not consistent else None,
             radical_rank=len(rad))
    return classes, cert
