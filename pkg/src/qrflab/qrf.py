"""The ideal frame-change unitary S|g>|g'> = |g^-1>|g^-1 ∘ g'> and friends.

For every finite group this S is a basis permutation, self-inverse, and
Hermitian, so conjugating observables with S or S^dagger is the same map.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .groups import GroupTable
from .linalg import DensityMatrix
from .states import BipartiteState

UNITARITY_TOL = 1e-12
INCOHERENCE_TOL = 1e-12


@dataclass(frozen=True)
class QrfUnitary:
    """Frame-change unitary held as a basis-index permutation.

    index_map[k] is the image of basis index k = g * |G| + g'; the dense
    matrix is materialized on demand for direct matrix cross-checks.
    """

    group: GroupTable
    index_map: np.ndarray

    @property
    def dim(self) -> int:
        return self.index_map.size

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        m[self.index_map, np.arange(self.dim)] = 1.0
        return m

    def apply_vector(self, vec: np.ndarray) -> np.ndarray:
        out = np.empty_like(vec)
        out[self.index_map] = vec
        return out


def build_qrf_unitary(group: GroupTable) -> QrfUnitary:
    """Map |g>|g'> to |g^-1>|g^-1 ∘ g'>."""
    n = group.order
    index_map = np.zeros(n * n, dtype=int)
    for g in range(n):
        gi = group.inverse[g]
        for gp in range(n):
            index_map[g * n + gp] = gi * n + group.compose[gi, gp]
    return QrfUnitary(group=group, index_map=index_map)


def transform_state(psi: BipartiteState) -> BipartiteState:
    """Coefficient relabeling psi'(g, g') = psi(g^-1, g^-1 ∘ g').

    Exact permutation of the stored coefficients (no arithmetic), so the
    multiset of |psi(g, g')|^2 is preserved to the bit.
    """
    group = psi.group
    if group is None:
        raise ValueError("transform_state requires a state with a group")
    inv = group.inverse
    comp = group.compose
    out = psi.coeffs[inv[:, None], comp[inv, :]]
    label = {"C": "A", "A": "C"}.get(psi.frame_label, psi.frame_label)
    return BipartiteState(coeffs=out, frame_label=label, group=group)


def transform_observable(observable, unitary: QrfUnitary):
    """Conjugate an observable: O' = S O S^dagger.

    Accepts a bare matrix or any dataclass with a `matrix` field (returned in
    kind). S is an involution, so this coincides with S^dagger O S.
    """
    if hasattr(observable, "matrix") and not isinstance(observable, np.ndarray):
        raw = np.asarray(observable.matrix, dtype=complex)
        transformed = _conjugate(raw, unitary)
        return dataclasses.replace(observable, matrix=transformed)
    raw = np.asarray(observable, dtype=complex)
    return _conjugate(raw, unitary)


def _conjugate(matrix: np.ndarray, unitary: QrfUnitary) -> np.ndarray:
    if matrix.shape != (unitary.dim, unitary.dim):
        raise ValueError(
            f"observable shape {matrix.shape} does not match unitary dim {unitary.dim}"
        )
    perm = unitary.index_map
    out = np.empty_like(matrix)
    out[np.ix_(perm, perm)] = matrix
    return out


def kraus_operators(group: GroupTable, phi_b: np.ndarray) -> list[np.ndarray]:
    """Kraus family E(g) of the reduced frame-change channel for a product
    input with second factor phi_b: E(g)|h> = phi_b(h ∘ g) |h^-1>."""
    phi = np.asarray(phi_b, dtype=complex).reshape(-1)
    n = group.order
    if phi.size != n:
        raise ValueError(f"phi_b must have length {n}")
    if abs(np.linalg.norm(phi) - 1.0) > 1e-8:
        raise ValueError("phi_b must be normalized")
    ops = []
    for g in range(n):
        e = np.zeros((n, n), dtype=complex)
        for h in range(n):
            e[group.inverse[h], h] = phi[group.compose[h, g]]
        ops.append(e)
    return ops


def apply_channel(kraus: list[np.ndarray], rho: DensityMatrix) -> DensityMatrix:
    total = sum(e @ rho.matrix @ e.conj().T for e in kraus)
    return DensityMatrix(total)


def is_incoherent_unitary(
    unitary: QrfUnitary | np.ndarray, tol: float = INCOHERENCE_TOL
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check S D S^dagger stays diagonal for every basis product state
    D = |g><g| ⊗ |g'><g'|; returns (verdict, first failing (g, g') or None)."""
    if isinstance(unitary, QrfUnitary):
        dense = unitary.matrix()
        n = unitary.group.order
    else:
        dense = np.asarray(unitary, dtype=complex)
        n = int(round(np.sqrt(dense.shape[0])))
    dim = dense.shape[0]
    if np.max(np.abs(dense.conj().T @ dense - np.eye(dim))) > 1e-10:
        raise ValueError("input is not unitary within 1e-10")
    for k in range(dim):
        column = dense[:, k]
        image = np.outer(column, column.conj())
        off = image - np.diag(np.diag(image))
        if np.max(np.abs(off)) > tol:
            return False, (k // n, k % n)
    return True, None
