"""Dense complex linear algebra: tensor products, partial traces, a cyclic
Jacobi eigensolver for Hermitian matrices, singular values, and von Neumann
entropy (natural log).

All matrices are numpy complex arrays in row-major layout; the tensor index
convention puts the left factor on the slow index, matching kets |g>|g'>.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_CLAMP = 1e-10
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class NonHermitianError(ValueError):
    """Input violated a Hermiticity contract."""


class PositivityError(ValueError):
    """A density matrix eigenvalue fell below the allowed clamp window."""


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the (i_A * dim_B + i_B) index convention."""
    return np.kron(np.asarray(a), np.asarray(b))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian unit-trace matrix; positivity is enforced where eigenvalues
    are actually consumed (entropy), with the [-1e-10, 0) window clamped."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise NonHermitianError("density matrix is not Hermitian within 1e-12")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise ValueError("density matrix trace differs from 1 beyond 1e-12")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def diagonal(self) -> np.ndarray:
        return self.matrix.diagonal().real.copy()

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def eigenvalues(self) -> np.ndarray:
        return hermitian_eigenvalues(self.matrix)

    def validate_positive(self) -> None:
        if self.eigenvalues()[-1] < -EIGENVALUE_CLAMP:
            raise PositivityError("density matrix has an eigenvalue below -1e-10")


def hermitian_eigenvalues(
    matrix: np.ndarray,
    off_tol: float = JACOBI_OFF_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending, by cyclic Jacobi.

    Each rotation diagonalizes one 2x2 Hermitian principal block exactly
    (phase rotation followed by a real Givens rotation); sweeps stop when the
    off-diagonal Frobenius norm drops below off_tol.
    """
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eigenvalue input must be square")
    n = a.shape[0]
    if np.max(np.abs(a - a.conj().T)) > 1e-10:
        raise NonHermitianError("matrix is not Hermitian within 1e-10")
    if n == 1:
        return np.array([a[0, 0].real])
    for _ in range(max_sweeps):
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        if np.sqrt(np.sum(np.abs(off) ** 2)) < off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (app - aqq) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                phase = apq / mag
                rot = np.array(
                    [[c, -s], [s * np.conj(phase), c * np.conj(phase)]], dtype=complex
                )
                a[:, [p, q]] = a[:, [p, q]] @ rot
                a[[p, q], :] = rot.conj().T @ a[[p, q], :]
    return np.sort(a.diagonal().real)[::-1]


def singular_values(matrix: np.ndarray) -> np.ndarray:
    """Non-negative singular values, descending, via the Gram matrix."""
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2:
        raise ValueError("singular value input must be a matrix")
    gram = m @ m.conj().T if m.shape[0] <= m.shape[1] else m.conj().T @ m
    vals = hermitian_eigenvalues(gram)
    return np.sqrt(np.clip(vals, 0.0, None))


def von_neumann_entropy(rho: DensityMatrix | np.ndarray) -> float:
    """-sum(lam * ln(lam)) over eigenvalues, with 0*ln(0) := 0, in nats."""
    dm = rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)
    vals = dm.eigenvalues()
    if vals[-1] < -EIGENVALUE_CLAMP:
        raise PositivityError(
            f"eigenvalue {vals[-1]:.3e} below the -1e-10 positivity window"
        )
    vals = np.clip(vals, 0.0, None)
    positive = vals[vals > 0.0]
    return max(0.0, float(-np.sum(positive * np.log(positive))))


def shannon_entropy(probabilities: np.ndarray) -> float:
    """Entropy of a classical distribution (used for diagonal states)."""
    p = np.asarray(probabilities, dtype=float)
    if p.min() < -EIGENVALUE_CLAMP:
        raise PositivityError("negative probability beyond the clamp window")
    p = np.clip(p, 0.0, None)
    p = p[p > 0.0]
    return max(0.0, float(-np.sum(p * np.log(p))))


def partial_trace(
    rho: DensityMatrix | np.ndarray, dim_a: int, dim_b: int, keep: str
) -> DensityMatrix:
    """Trace out one factor of a bipartite density matrix; keep is 'A' or 'B'."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if m.shape != (dim_a * dim_b, dim_a * dim_b):
        raise ValueError(
            f"shape {m.shape} incompatible with dims ({dim_a}, {dim_b})"
        )
    t = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep in ("A", "first"):
        reduced = np.einsum("ibjb->ij", t)
    elif keep in ("B", "second"):
        reduced = np.einsum("aiaj->ij", t)
    else:
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    return DensityMatrix(reduced)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random unitary assembled from Givens rotations with random phases.

    Not Haar-exact; used for invariance property checks where any dense
    family of unitaries suffices.
    """
    u = np.eye(dim, dtype=complex)
    for _ in range(2 * dim * dim):
        p, q = rng.choice(dim, size=2, replace=False)
        theta = rng.uniform(0.0, 2.0 * np.pi)
        phi = rng.uniform(0.0, 2.0 * np.pi)
        c, s = np.cos(theta), np.sin(theta)
        rot = np.eye(dim, dtype=complex)
        rot[p, p] = c
        rot[p, q] = -s * np.exp(1j * phi)
        rot[q, p] = s * np.exp(-1j * phi)
        rot[q, q] = c
        u = rot @ u
    u = u * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=dim))[None, :]
    return u
