"""Reduce a spinor field to its 4x4 spin density and evaluate correlators as traces.

All observables in play are spatially constant, so <O1 O2> factors exactly
into trace(rho_spin . O1 . O2) against the single integrated density
rho_spin[u][v] = integral psi_u conj(psi_v) rho^2 d rho dOmega.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hydrogen import QuantumNumbers, SpinorField, sommerfeld_mu, radial_fg
from .specfun import QuadratureSpec, DEFAULT_QUADRATURE, quadrature_nodes, radial_nodes

TRACE_TOLERANCE = 1e-6
COMMUTE_TOLERANCE = 1e-10


class QuadratureError(RuntimeError):
    """Quadrature failed to converge (trace drifted away from 1)."""


class IncompatibleObservablesError(ValueError):
    """Correlator requested for a non-commuting observable pair."""


@dataclass(frozen=True)
class ReducedSpinDensity:
    """Hermitian, positive, unit-trace 4x4 matrix with provenance metadata."""

    matrix: np.ndarray
    label: str
    spec: QuadratureSpec | None = None

    @classmethod
    def from_pure(cls, spinor, label: str = "pure") -> "ReducedSpinDensity":
        """Density |u><u| of a four-spinor, normalized if needed."""
        u = np.asarray(spinor, dtype=complex).reshape(4)
        nrm = np.linalg.norm(u)
        if nrm == 0:
            raise ValueError("cannot build a density from the zero spinor")
        u = u / nrm
        return cls(matrix=np.outer(u, u.conj()), label=label)

    @classmethod
    def maximally_mixed(cls) -> "ReducedSpinDensity":
        return cls(matrix=np.eye(4, dtype=complex) / 4.0, label="maximally-mixed")

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def hermiticity_defect(self) -> float:
        return float(np.abs(self.matrix - self.matrix.conj().T).max())

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.matrix).min())


def reduce(state: SpinorField, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> ReducedSpinDensity:
    """Integrate out space on the spec's product rule.

    Raises QuadratureError if the resulting trace deviates from 1 by more than
    1e-6 (the normalization integral and this one use the same radial rule, so
    any drift signals an inadequate spec).
    """
    resolved = spec.resolved(state.qn.n)
    resolved.check_phi_exactness(state.qn.l + 1)
    nodes = quadrature_nodes(resolved)
    theta = np.arccos(nodes.cos_theta)
    rho = nodes.rho[:, None, None]
    th = theta[None, :, None]
    ph = nodes.phi[None, None, :]
    psi = state(rho, th, ph)
    weight = (
        (nodes.rho_weights * nodes.rho**2)[:, None, None]
        * nodes.cos_theta_weights[None, :, None]
        * nodes.phi_weights[None, None, :]
    )
    # deterministic accumulation order: einsum over the fixed node layout
    mat = np.einsum("urtp,vrtp,rtp->uv", psi, psi.conj(), weight, optimize=True)
    density = ReducedSpinDensity(
        matrix=mat,
        label=f"n={state.qn.n} kappa={state.qn.kappa} mj={state.qn.m_j}",
        spec=resolved,
    )
    if abs(density.trace - 1.0) > TRACE_TOLERANCE:
        raise QuadratureError(
            f"reduced density trace {density.trace} deviates from 1 beyond {TRACE_TOLERANCE}"
        )
    return density


def _check_observable(name: str, o: np.ndarray) -> None:
    if np.abs(o - o.conj().T).max() > COMMUTE_TOLERANCE:
        raise IncompatibleObservablesError(f"observable {name} is not Hermitian")


def correlator(density: ReducedSpinDensity, o1: np.ndarray, o2: np.ndarray) -> float:
    """Real part of trace(rho . o1 . o2) for a commuting Hermitian pair."""
    o1 = np.asarray(o1, dtype=complex)
    o2 = np.asarray(o2, dtype=complex)
    _check_observable("O1", o1)
    _check_observable("O2", o2)
    comm = np.linalg.norm(o1 @ o2 - o2 @ o1)
    if comm > COMMUTE_TOLERANCE:
        raise IncompatibleObservablesError(
            f"observables do not commute (Frobenius norm {comm:.3e}); "
            "the correlator is only defined on compatible pairs"
        )
    value = np.trace(density.matrix @ o1 @ o2)
    if abs(value.imag) > COMMUTE_TOLERANCE:
        raise QuadratureError(f"correlator has spurious imaginary part {value.imag:.3e}")
    return float(value.real)


def radial_weights(qn: QuantumNumbers, a: float) -> tuple[float, float]:
    """Analytic spatial weights of the upper/lower blocks: ((1+mu)/2, (1-mu)/2)."""
    mu = sommerfeld_mu(qn.n, qn.kappa, a)
    return (1.0 + mu) / 2.0, (1.0 - mu) / 2.0


def radial_weights_quadrature(qn: QuantumNumbers, a: float,
                              spec: QuadratureSpec = DEFAULT_QUADRATURE) -> tuple[float, float]:
    """Companion check: the same weights from quadrature of f^2 and g^2."""
    rho, w = radial_nodes(spec.resolved(qn.n))
    f, g = radial_fg(qn, a, rho)
    int_f = float(np.sum(w * rho * rho * f * f))
    int_g = float(np.sum(w * rho * rho * g * g))
    total = int_f + int_g
    return int_f / total, int_g / total
