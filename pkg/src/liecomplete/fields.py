"""Exact scalar fields: the rationals and prime fields F_p.

Elements are plain Python values so arithmetic stays cheap: rationals are
``fractions.Fraction`` and elements of F_p are ``int`` in ``range(p)``.
Every arithmetic result must be passed through :meth:`Field.norm` before it
is stored; for the rationals that is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

Scalar = Union[int, Fraction]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Field specification.

    ``kind`` is ``"rational"`` or ``"prime"``; ``p`` is set iff kind is prime.
    """

    kind: str = "rational"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime else Fraction(1)

    def __call__(self, x: Any) -> Scalar:
        """Coerce an int, Fraction or coefficient string into the field."""
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError(f"refusing float {x!r}; exact values only")
        if self.is_prime:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def norm(self, x: Scalar) -> Scalar:
        return x % self.p if self.is_prime else x

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(x, -1, self.p)
        return 1 / x

    def neg(self, x: Scalar) -> Scalar:
        return (-x) % self.p if self.is_prime else -x

    def parse(self, s: str) -> Scalar:
        """Parse ``"3"``, ``"-2"`` or ``"3/2"``.

        Over F_p integer literals are reduced mod p and ``a/b`` means a*b^-1.
        """
        s = s.strip()
        try:
            value = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad coefficient {s!r}") from exc
        if "." in s or "e" in s.lower():
            raise ValueError(f"bad coefficient {s!r}: use integers or a/b")
        if self.is_prime:
            if value.denominator % self.p == 0:
                raise ValueError(f"coefficient {s!r} has denominator divisible by {self.p}")
        return self(value)

    def format(self, x: Scalar) -> str:
        return str(x)

    def to_json(self) -> dict:
        if self.is_prime:
            return {"kind": "prime", "p": self.p}
        return {"kind": "rational"}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        if not isinstance(data, dict) or "kind" not in data:
            raise ValueError("field must be an object with a 'kind' key")
        return cls(data["kind"], data.get("p"))

    def __str__(self) -> str:
        return f"F_{self.p}" if self.is_prime else "Q"


QQ = Field("rational")


def GF(p: int) -> Field:
    return Field("prime", p)
