"""Targets, parities and the witness record returned by the constructors."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .errors import ParseError
from .graph import Circuit, Cycle, Graph


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def bit(self) -> int:
        return 0 if self is Parity.EVEN else 1

    @classmethod
    def of(cls, length: int) -> Parity:
        return cls.EVEN if length % 2 == 0 else cls.ODD


@dataclass(frozen=True, order=True)
class Target:
    kind: str  # "vertex" or "edge"
    id: int

    @classmethod
    def vertex(cls, v: int) -> Target:
        return cls("vertex", v)

    @classmethod
    def edge(cls, e: int) -> Target:
        return cls("edge", e)

    def describe(self, g: Graph) -> str:
        if self.kind == "vertex":
            return f"vertex:{self.id}"
        u, v = g.endpoints(self.id)
        return f"edge:{u},{v}"


def parse_target(g: Graph, text: str, names: dict[str, str] | None = None) -> Target:
    """Parse ``vertex:i``, ``edge:u,v``, or a name looked up in ``names``.

    ``names`` maps labels (e.g. from a generator sidecar) to target strings,
    so ``edge:shared`` or plain ``shared`` resolve through it.
    """
    kind, _, rest = text.partition(":")
    if not rest:
        kind, rest = "", kind
    if names and rest in names:
        return parse_target(g, names[rest])
    try:
        if kind == "vertex":
            v = int(rest)
            g.check_vertex(v)
            return Target.vertex(v)
        if kind == "edge":
            u, v = (int(x) for x in rest.split(","))
            return Target.edge(g.edge_id(u, v))
    except ValueError:
        pass
    raise ParseError(f"bad target {text!r}; expected vertex:i or edge:u,v")


@dataclass(frozen=True)
class ParityWitness:
    object: Cycle | Circuit
    target: Target
    parity: Parity
    theorem: str
    # constructor-specific trace (e.g. the three candidate lengths for thm3)
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def is_circuit(self) -> bool:
        return isinstance(self.object, Circuit)

    def to_dict(self, g: Graph | None = None) -> dict:
        d = {
            "object": "circuit" if self.is_circuit else "cycle",
            "vertices": list(self.object.vertices),
            "edges": list(self.object.edges),
            "length": self.object.length,
            "target": {"kind": self.target.kind, "id": self.target.id},
            "parity": self.parity.value,
            "theorem": self.theorem,
        }
        if g is not None:
            d["target"]["label"] = self.target.describe(g)
            d["edge_endpoints"] = [list(g.edges[e]) for e in self.object.edges if 0 <= e < g.m]
        if self.details:
            d["details"] = self.details
        return d

    @classmethod
    def from_dict(cls, d: dict) -> ParityWitness:
        verts, edges = tuple(d["vertices"]), tuple(d["edges"])
        obj = Circuit(verts, edges) if d["object"] == "circuit" else Cycle(verts, edges)
        t = d["target"]
        return cls(obj, Target(t["kind"], int(t["id"])), Parity(d["parity"]), d.get("theorem", ""), d.get("details", {}))
