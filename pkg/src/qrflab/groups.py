"""Finite groups as Cayley tables, plus the left regular representation.

Elements are integers 0..order-1 with the identity fixed at index 0. The
symmetric group S3 uses the canonical element order
[e, (01), (02), (12), (012), (021)] acting as permutations of {0, 1, 2},
where compose(a, b) applies the right permutation first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

# Point permutations for S3 in canonical order; row g is the image map i -> g(i).
S3_POINT_PERMS = np.array(
    [
        [0, 1, 2],  # e
        [1, 0, 2],  # (01)
        [2, 1, 0],  # (02)
        [0, 2, 1],  # (12)
        [1, 2, 0],  # (012)
        [2, 0, 1],  # (021)
    ],
    dtype=int,
)

S3_LABELS = ("e", "(01)", "(02)", "(12)", "(012)", "(021)")


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its composition table.

    compose[a, b] is the index of a∘b; identity is element 0; inverse[g]
    is the two-sided inverse of g.
    """

    name: str
    compose: np.ndarray
    inverse: np.ndarray
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        compose = np.asarray(self.compose, dtype=int)
        object.__setattr__(self, "compose", compose)
        object.__setattr__(self, "inverse", np.asarray(self.inverse, dtype=int))
        if compose.ndim != 2 or compose.shape[0] != compose.shape[1]:
            raise ValueError("compose table must be square")
        if compose.shape[0] == 0:
            raise ValueError("group order must be positive")
        if self.inverse.shape != (compose.shape[0],):
            raise ValueError("inverse list length must equal the group order")

    @property
    def order(self) -> int:
        return self.compose.shape[0]

    @property
    def identity_index(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.compose[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def elements(self) -> range:
        return range(self.order)

    def label(self, g: int) -> str:
        if self.labels is not None:
            return self.labels[g]
        return str(g)


@dataclass(frozen=True)
class PermutationMatrix:
    """A permutation of basis vectors; mapping[j] is the image index of basis j."""

    mapping: np.ndarray = field()

    def __post_init__(self):
        mapping = np.asarray(self.mapping, dtype=int)
        object.__setattr__(self, "mapping", mapping)
        if sorted(mapping.tolist()) != list(range(mapping.size)):
            raise ValueError("mapping is not a bijection")

    @property
    def dimension(self) -> int:
        return self.mapping.size

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.dimension, self.dimension))
        m[self.mapping, np.arange(self.dimension)] = 1.0
        return m

    def apply(self, other: "PermutationMatrix") -> "PermutationMatrix":
        """Composition self∘other (other acts first)."""
        return PermutationMatrix(self.mapping[other.mapping])


def make_cyclic_group(n: int) -> GroupTable:
    """Z_n with compose(a, b) = (a+b) mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    a = np.arange(n)
    compose = (a[:, None] + a[None, :]) % n
    inverse = (-a) % n
    return GroupTable(name=f"Z{n}", compose=compose, inverse=inverse)


def make_symmetric_group_3() -> GroupTable:
    """S3 on three points, canonical element order, right permutation acts first."""
    perms = S3_POINT_PERMS
    index = {tuple(p): i for i, p in enumerate(perms)}
    n = len(perms)
    compose = np.zeros((n, n), dtype=int)
    for a in range(n):
        for b in range(n):
            composed = tuple(perms[a][perms[b][i]] for i in range(3))
            compose[a, b] = index[composed]
    inverse = np.zeros(n, dtype=int)
    for a in range(n):
        inverse[a] = int(np.nonzero(compose[a] == 0)[0][0])
    return GroupTable(name="S3", compose=compose, inverse=inverse, labels=S3_LABELS)


def left_regular_representation(group: GroupTable, g: int) -> PermutationMatrix:
    """Permutation matrix of U(g) with U(g)|h> = |g∘h>."""
    if not 0 <= g < group.order:
        raise IndexError(f"element {g} out of range for group of order {group.order}")
    return PermutationMatrix(group.compose[g, :].copy())


def validate_group(group: GroupTable) -> list[str]:
    """Exhaustive closure/associativity/identity/inverse check; returns violations."""
    violations: list[str] = []
    n = group.order
    compose = group.compose
    if compose.min() < 0 or compose.max() >= n:
        bad = np.argwhere((compose < 0) | (compose >= n))[0]
        violations.append(
            f"closure violated: compose({bad[0]},{bad[1]}) = "
            f"{compose[bad[0], bad[1]]} not in [0,{n})"
        )
        return violations  # further checks would index out of range
    for a in range(n):
        if compose[0, a] != a or compose[a, 0] != a:
            violations.append(f"element 0 is not a two-sided identity at {a}")
            break
    # associativity: compose[compose[a,b], c] == compose[a, compose[b,c]]
    left = compose[compose, :]
    right = compose[:, compose]
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        violations.append(f"associativity violated at triple ({a},{b},{c})")
    for g in range(n):
        gi = group.inverse[g]
        if not 0 <= gi < n or compose[g, gi] != 0 or compose[gi, g] != 0:
            violations.append(f"inverse[{g}] = {gi} is not a two-sided inverse")
    return violations


def group_from_json(obj: dict) -> GroupTable:
    """Build a group from its JSON form.

    Accepted forms: {"cyclic": n}, {"builtin": "S3"}, or a full table
    {"name": ..., "order": n, "compose": [[...]], "identity": 0}.
    """
    if "cyclic" in obj:
        return make_cyclic_group(int(obj["cyclic"]))
    if "builtin" in obj:
        builtin = str(obj["builtin"]).upper()
        if builtin == "S3":
            return make_symmetric_group_3()
        raise ValueError(f"unknown builtin group {obj['builtin']!r}")
    compose = np.asarray(obj["compose"], dtype=int)
    order = int(obj.get("order", compose.shape[0]))
    if compose.shape != (order, order):
        raise ValueError("compose table shape does not match declared order")
    if int(obj.get("identity", 0)) != 0:
        raise ValueError("identity must be element 0 (canonical ordering)")
    inverse = np.zeros(order, dtype=int)
    for g in range(order):
        hits = np.nonzero(compose[g] == 0)[0]
        if hits.size == 0:
            raise ValueError(f"element {g} has no right inverse in the table")
        inverse[g] = hits[0]
    table = GroupTable(
        name=str(obj.get("name", f"custom{order}")), compose=compose, inverse=inverse
    )
    problems = validate_group(table)
    if problems:
        raise ValueError("invalid group table: " + "; ".join(problems))
    return table


def parse_group_spec(spec: str | dict) -> GroupTable:
    """Parse CLI group specs: 'S3', 'cyclic:N', or a path to a group JSON file."""
    if isinstance(spec, dict):
        return group_from_json(spec)
    text = spec.strip()
    if text.upper() == "S3":
        return make_symmetric_group_3()
    if text.lower().startswith("cyclic:"):
        return make_cyclic_group(int(text.split(":", 1)[1]))
    if text.upper().startswith("Z") and text[1:].isdigit():
        return make_cyclic_group(int(text[1:]))
    path = Path(text)
    if path.exists():
        return group_from_json(json.loads(path.read_text()))
    raise ValueError(f"cannot interpret group spec {spec!r}")
