"""Pure bipartite states in the group (or computational) basis."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .groups import GroupTable
from .linalg import DensityMatrix

NORMALIZATION_TOL = 1e-8


class NormalizationError(ValueError):
    """State norm differs from 1 beyond the ingestion tolerance."""


@dataclass(frozen=True)
class BipartiteState:
    """Pure state psi(g, g') as a coefficient matrix, first slot on rows.

    States within 1e-8 of unit norm are renormalized on construction; anything
    further off is rejected.
    """

    coeffs: np.ndarray
    frame_label: str = "C"
    group: Optional[GroupTable] = None

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 2:
            raise ValueError("coefficients must form a matrix")
        norm = float(np.linalg.norm(c))
        if abs(norm - 1.0) > NORMALIZATION_TOL:
            raise NormalizationError(
                f"state norm {norm:.10f} differs from 1 beyond {NORMALIZATION_TOL}"
            )
        object.__setattr__(self, "coeffs", c / norm)
        if self.group is not None and c.shape != (self.group.order, self.group.order):
            raise ValueError(
                f"coefficient shape {c.shape} does not match group order "
                f"{self.group.order}"
            )

    @property
    def dims(self) -> tuple[int, int]:
        return self.coeffs.shape

    def vector(self) -> np.ndarray:
        """Row-major amplitude vector (first slot is the slow index)."""
        return self.coeffs.reshape(-1)

    def fidelity(self, other: "BipartiteState") -> float:
        return float(abs(np.vdot(self.vector(), other.vector())) ** 2)

    def with_coeffs(self, coeffs: np.ndarray) -> "BipartiteState":
        return replace(self, coeffs=coeffs)


def reduced_density(psi: BipartiteState, keep: str = "first") -> DensityMatrix:
    """Reduced density matrix of one slot: psi psi^dag or psi^T psi^*."""
    c = psi.coeffs
    if keep == "first":
        return DensityMatrix(c @ c.conj().T)
    if keep == "second":
        return DensityMatrix(c.T @ c.conj())
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def diagonal_part(rho: DensityMatrix) -> DensityMatrix:
    """Dephase in the stored basis: zero all off-diagonal entries."""
    return DensityMatrix(np.diag(np.diag(rho.matrix)))


def _resolve_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_pure_state(group: GroupTable, seed) -> BipartiteState:
    """Haar-random bipartite pure state over the group basis.

    Coefficients are i.i.d. standard complex Gaussians, normalized;
    deterministic for a fixed integer seed.
    """
    rng = _resolve_rng(seed)
    n = group.order
    c = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    c /= np.linalg.norm(c)
    return BipartiteState(coeffs=c, frame_label="C", group=group)


def complex_matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "rows": m.shape[0],
        "cols": m.shape[1],
        "entries": [
            {"re": float(v.real), "im": float(v.imag)} for v in m.reshape(-1)
        ],
    }


def complex_matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = obj["entries"]
    if len(entries) != rows * cols:
        raise ValueError("entry count does not match declared shape")
    flat = np.array([complex(e["re"], e["im"]) for e in entries])
    return flat.reshape(rows, cols)


def state_to_json(psi: BipartiteState) -> dict:
    obj = {"frame": psi.frame_label, "coeffs": complex_matrix_to_json(psi.coeffs)}
    if psi.group is not None:
        if psi.group.name == "S3":
            obj["group"] = {"builtin": "S3"}
        elif psi.group.name.startswith("Z"):
            obj["group"] = {"cyclic": psi.group.order}
    return obj


def state_from_json(obj: dict, group: Optional[GroupTable] = None) -> BipartiteState:
    from .groups import group_from_json

    if group is None and "group" in obj:
        group = group_from_json(obj["group"])
    coeffs = complex_matrix_from_json(obj["coeffs"])
    return BipartiteState(
        coeffs=coeffs, frame_label=obj.get("frame", "C"), group=group
    )
