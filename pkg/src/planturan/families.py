"""The two forbidden-subgraph families and their discharging weights.

A family forbids K4 plus one fixed cycle length.  Each carries the weight
pair (a, b) used to score triangular blocks: score(B) = a*f(B) - b*e(B),
chosen so that a*F - b*E <= 0 is equivalent (via Euler's formula, for
connected plane graphs) to the target edge bound.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Family:
    name: str
    label: str
    forbidden_cycle: int
    weight_a: int
    weight_b: int
    allowed_blocks: tuple[str, ...]


K4C5 = Family(
    name="k4c5",
    label="{K4,C5}-free",
    forbidden_cycle=5,
    weight_a=15,
    weight_b=8,
    allowed_blocks=("K2", "K3", "B4"),
)

K4C6 = Family(
    name="k4c6",
    label="{K4,C6}-free",
    forbidden_cycle=6,
    weight_a=7,
    weight_b=4,
    allowed_blocks=("K2", "K3", "B4", "B5a", "B5b"),
)

FAMILIES: dict[str, Family] = {f.name: f for f in (K4C5, K4C6)}


def family_from_name(name: str) -> Family:
    """Look up a family by its CLI name ('k4c5' / 'k4c6'), case-insensitive."""
    key = name.strip().lower()
    if key not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")
    return FAMILIES[key]
