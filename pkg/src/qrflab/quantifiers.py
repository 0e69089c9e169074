"""Coherence and entanglement quantifiers.

Entropies are in nats. The l2 quantity is a quantifier, not a monotone
measure (it violates monotonicity under incoherent operations); the geometric
pair is defined for qubits only.
"""

from __future__ import annotations

import enum

import numpy as np

from .linalg import DensityMatrix, shannon_entropy, von_neumann_entropy
from .states import BipartiteState, diagonal_part, reduced_density


class Quantifier(enum.Enum):
    ENTANGLEMENT_ENTROPY = "E_e"
    RELATIVE_ENTROPY_COHERENCE = "C_e"
    L2_COHERENCE = "C_l2"
    LINEAR_ENTROPY = "E_l"
    GEOMETRIC_ENTANGLEMENT = "E_g"
    GEOMETRIC_COHERENCE = "C_g"

    @property
    def is_coherence(self) -> bool:
        return self.value.startswith("C")

    @property
    def is_qubit_only(self) -> bool:
        return self in (Quantifier.GEOMETRIC_ENTANGLEMENT, Quantifier.GEOMETRIC_COHERENCE)

    @classmethod
    def from_name(cls, name: str) -> "Quantifier":
        for q in cls:
            if q.value == name:
                return q
        raise ValueError(f"unknown quantifier {name!r}")


CONSERVED_PAIRS = (
    (Quantifier.RELATIVE_ENTROPY_COHERENCE, Quantifier.ENTANGLEMENT_ENTROPY),
    (Quantifier.L2_COHERENCE, Quantifier.LINEAR_ENTROPY),
)


def entanglement_entropy(psi: BipartiteState) -> float:
    """Von Neumann entropy of the first slot's reduced state."""
    return von_neumann_entropy(reduced_density(psi, "first"))


def relative_entropy_of_coherence(rho: DensityMatrix) -> float:
    """S[dephased rho] - S[rho]; zero exactly on diagonal states."""
    value = shannon_entropy(rho.diagonal()) - von_neumann_entropy(rho)
    return max(0.0, value)


def l2_coherence(rho: DensityMatrix) -> float:
    """Sum of squared moduli of the off-diagonal entries."""
    off = rho.matrix - np.diag(np.diag(rho.matrix))
    return float(np.sum(np.abs(off) ** 2))


def linear_entropy(psi: BipartiteState) -> float:
    """1 - Tr[rho_A^2] of the first slot's reduced state."""
    rho = reduced_density(psi, "first")
    return float(1.0 - rho.purity())


def geometric_entanglement(psi: BipartiteState) -> float:
    """Qubit-only closed form 1 - (1 + sqrt(1 - 4 det rho_A)) / 2."""
    if psi.dims != (2, 2):
        raise ValueError("geometric entanglement is defined for qubit pairs only")
    rho = reduced_density(psi, "first")
    det = float(np.real(np.linalg.det(rho.matrix)))
    radicand = max(0.0, 1.0 - 4.0 * det)
    return 1.0 - 0.5 * (1.0 + np.sqrt(radicand))


def geometric_coherence(rho: DensityMatrix) -> float:
    """Qubit-only closed form (1 - sqrt(1 - 4 |rho_01|^2)) / 2."""
    if rho.dim != 2:
        raise ValueError("geometric coherence is defined for qubits only")
    off = abs(rho.matrix[0, 1])
    radicand = 1.0 - 4.0 * off * off
    if radicand < -1e-12:
        raise ValueError("|rho_01| > 1/2 violates positivity of a qubit state")
    return 0.5 * (1.0 - np.sqrt(max(0.0, radicand)))


def coherence_value(quantifier: Quantifier, rho: DensityMatrix) -> float:
    if quantifier is Quantifier.RELATIVE_ENTROPY_COHERENCE:
        return relative_entropy_of_coherence(rho)
    if quantifier is Quantifier.L2_COHERENCE:
        return l2_coherence(rho)
    if quantifier is Quantifier.GEOMETRIC_COHERENCE:
        return geometric_coherence(rho)
    raise ValueError(f"{quantifier} is not a coherence quantifier")


def entanglement_value(quantifier: Quantifier, psi: BipartiteState) -> float:
    if quantifier is Quantifier.ENTANGLEMENT_ENTROPY:
        return entanglement_entropy(psi)
    if quantifier is Quantifier.LINEAR_ENTROPY:
        return linear_entropy(psi)
    if quantifier is Quantifier.GEOMETRIC_ENTANGLEMENT:
        return geometric_entanglement(psi)
    raise ValueError(f"{quantifier} is not an entanglement quantifier")


def parse_pair(text: str) -> tuple[Quantifier, Quantifier]:
    """Parse 'C_x,E_y' into a (coherence, entanglement) quantifier pair."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"pair must be 'C_x,E_y', got {text!r}")
    first, second = (Quantifier.from_name(p) for p in parts)
    if not first.is_coherence or second.is_coherence:
        raise ValueError("pair must name a coherence then an entanglement quantifier")
    return first, second


def subsystem_coherence(quantifier: Quantifier, psi: BipartiteState) -> float:
    """Coherence of the first tensor slot's reduced state."""
    return coherence_value(quantifier, reduced_density(psi, "first"))


def dephased_subsystem_entropy(psi: BipartiteState) -> float:
    """Entropy of the dephased first-slot reduced state (the conserved sum)."""
    return von_neumann_entropy(diagonal_part(reduced_density(psi, "first")))
