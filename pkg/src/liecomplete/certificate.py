"""Structured verdicts emitted by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

TRUE = "true"
FALSE = "false"
NOT_APPLICABLE = "not_applicable"


@dataclass
class Claim:
    name: str
    holds: bool
    dims: dict[str, int] = field(default_factory=dict)
    witness: Any = None
    # informational claims are reported but never enter the verdict
    informational: bool = False

    def to_json(self) -> dict:
        out = {"name": self.name, "holds": self.holds, "dims": dict(self.dims)}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.informational:
            out["informational"] = True
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Claim":
        return cls(d["name"], d["holds"], dict(d.get("dims", {})), d.get("witness"),
                   d.get("informational", False))


@dataclass
class Certificate:
    subject: str
    claims: list[Claim] = field(default_factory=list)
    applicable: bool = True

    def add(self, name: str, holds: bool, witness=None, informational: bool = False, **dims) -> Claim:
        c = Claim(name, bool(holds), dims, witness, informational)
        self.claims.append(c)
        return c

    def __getitem__(self, name: str) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.claims)

    @property
    def overall(self) -> bool:
        return all(c.holds for c in self.claims if not c.informational)

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return NOT_APPLICABLE
        return TRUE if self.overall else FALSE

    def __bool__(self) -> bool:
        return self.overall

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "applicable": self.applicable,
            "overall": self.overall,
            "verdict": self.verdict,
            "claims": [c.to_json() for c in self.claims],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Certificate":
        return cls(d["subject"], [Claim.from_json(c) for c in d["claims"]], d.get("applicable", True))

    def summary(self) -> str:
        lines = [f"{self.subject}: {self.verdict}"]
        for c in self.claims:
            tag = "info" if c.informational else ("ok" if c.holds else "FAIL")
            dims = ", ".join(f"{k}={v}" for k, v in c.dims.items())
            lines.append(f"  [{tag:>4}] {c.name}" + (f" ({dims})" if dims else ""))
        return "\n".join(lines)


def jsonable(x: Any) -> Any:
    """Convert witnesses (tuples of Fractions, nested matrices) to JSON values.

    Fractions become strings so exactness survives serialization.
    """
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)
