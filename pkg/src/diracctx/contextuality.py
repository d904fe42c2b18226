"""Observable constructions and noncontextuality-inequality evaluation.

Covers the four-correlator inequality <AB>+<BC>+<CD>-<DA> <= 2 (evaluated on
reduced spin densities) and the six-term Peres-Mermin inequality with
noncontextual bound 4, plus the one-parameter xi family of observable choices
whose maximum admits the closed form 2*sqrt(mu^2 + X^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import build_family
from .hydrogen import QuantumNumbers, sommerfeld_mu
from .spindensity import ReducedSpinDensity, correlator

CHSH_BOUND = 2.0
PERES_MERMIN_BOUND = 4.0

_GAMMA = build_family("Gamma")
_GAMMA_PRIME = build_family("GammaPrime")


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated inequality: labeled correlator terms, their signed sum,
    the noncontextual bound, and the parameters that produced it."""

    kind: str
    terms: dict
    value: float
    bound: float
    violated: bool
    parameters: dict

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "terms": dict(self.terms),
            "value": self.value,
            "bound": self.bound,
            "violated": self.violated,
            "parameters": dict(self.parameters),
        }


def chsh_value(density: ReducedSpinDensity, a, b, c, d,
               parameters: dict | None = None) -> InequalityReport:
    """<AB> + <BC> + <CD> - <DA> against the noncontextual bound 2."""
    terms = {
        "AB": correlator(density, a, b),
        "BC": correlator(density, b, c),
        "CD": correlator(density, c, d),
        "DA": correlator(density, d, a),
    }
    value = terms["AB"] + terms["BC"] + terms["CD"] - terms["DA"]
    return InequalityReport(
        kind="chsh_nc",
        terms=terms,
        value=value,
        bound=CHSH_BOUND,
        violated=value > CHSH_BOUND,
        parameters=dict(parameters or {}),
    )


def ground_observables(m_j: float):
    """The (A, B, C, D) choice for the two ground states m_j = +-1/2."""
    gx, gz = _GAMMA.x, _GAMMA.z
    gpx, gpz = _GAMMA_PRIME.x, _GAMMA_PRIME.z
    s = 1.0 / math.sqrt(2.0)
    if m_j == 0.5:
        return gx, s * (gpx - gpz), gz, -s * (gpx + gpz)
    if m_j == -0.5:
        return gx, s * (gpz - gpx), gz, s * (gpx + gpz)
    raise ValueError(f"ground state has m_j in {{+1/2, -1/2}}, got {m_j}")


def excited_observables(xi: float):
    """The xi family valid on both kappa branches:
    (Gamma_y, -sin(xi) Gp_y + cos(xi) Gp_z, Gamma_z, sin(xi) Gp_y + cos(xi) Gp_z)."""
    gy, gz = _GAMMA.y, _GAMMA.z
    gpy, gpz = _GAMMA_PRIME.y, _GAMMA_PRIME.z
    b = -math.sin(xi) * gpy + math.cos(xi) * gpz
    d = math.sin(xi) * gpy + math.cos(xi) * gpz
    return gy, b, gz, d


def harmonic_coefficients(qn: QuantumNumbers, a: float) -> tuple[float, float]:
    """Coefficients (c, s) of the xi sweep I(xi) = 2(c cos xi + s sin xi).

    c = -X on the kappa > 0 branch and +X on kappa < 0, with
    X = (2m+1)(mu + 2l + 2)/(4l^2 + 8l + 3) resp. (2m+1)(2l + 2 - mu)/(...);
    s = -mu on both branches.
    """
    mu = sommerfeld_mu(qn.n, qn.kappa, a)
    l, m = qn.l, qn.m
    denom = 4 * l * l + 8 * l + 3
    if qn.kappa > 0:
        x = (2 * m + 1) * (mu + 2 * l + 2) / denom
        return -x, -mu
    x = (2 * m + 1) * (2 * l + 2 - mu) / denom
    return x, -mu


def closed_form_value(qn: QuantumNumbers, a: float) -> float:
    """Maximum of the xi sweep: 2*sqrt(mu^2 + X^2)."""
    c, s = harmonic_coefficients(qn, a)
    return 2.0 * math.hypot(c, s)


def optimal_xi(qn: QuantumNumbers, a: float) -> tuple[float, float]:
    """Maximizing angle and maximum value of the xi sweep for one state.

    The two-term harmonic form peaks at xi* = atan2(s, c); the X = 0 tie-break
    (xi* = pi/2) is unreachable for valid states since X carries a factor
    2m + 1 with integer m.
    """
    c, s = harmonic_coefficients(qn, a)
    if c == 0.0:
        return math.pi / 2.0, 2.0 * abs(s)
    return math.atan2(s, c), 2.0 * math.hypot(c, s)


@dataclass(frozen=True)
class PeresMerminSquare:
    """3x3 grid of dichotomic observables with commuting rows/columns."""

    grid: tuple

    def entry(self, i: int, j: int) -> np.ndarray:
        return self.grid[i][j]

    def row(self, i: int):
        return self.grid[i]

    def column(self, j: int):
        return tuple(self.grid[i][j] for i in range(3))

    def row_product(self, i: int) -> np.ndarray:
        a, b, c = self.row(i)
        return a @ b @ c

    def column_product(self, j: int) -> np.ndarray:
        a, b, c = self.column(j)
        return a @ b @ c


def peres_mermin_square() -> PeresMerminSquare:
    """The nine-observable grid built from the Sigma and SigmaPrime families."""
    s = build_family("Sigma")
    sp = build_family("SigmaPrime")
    return PeresMerminSquare(
        grid=(
            (sp.z, s.z, s.z @ sp.z),
            (s.x, sp.x, s.x @ sp.x),
            (sp.z @ s.x, sp.x @ s.z, s.y @ sp.y),
        )
    )


def peres_mermin_value(density: ReducedSpinDensity) -> InequalityReport:
    """Six line-product correlators, minus sign on the third column; bound 4."""
    square = peres_mermin_square()
    terms = {}
    for i in range(3):
        terms[f"R{i + 1}"] = float(np.trace(density.matrix @ square.row_product(i)).real)
    for j in range(3):
        terms[f"C{j + 1}"] = float(np.trace(density.matrix @ square.column_product(j)).real)
    value = terms["R1"] + terms["R2"] + terms["R3"] + terms["C1"] + terms["C2"] - terms["C3"]
    return InequalityReport(
        kind="peres_mermin",
        terms=terms,
        value=value,
        bound=PERES_MERMIN_BOUND,
        violated=value > PERES_MERMIN_BOUND,
        parameters={"state": density.label},
    )


@dataclass(frozen=True)
class ContextEntry:
    indices: tuple
    compatible: bool
    residual: float


@dataclass(frozen=True)
class ContextReport:
    entries: tuple

    @property
    def all_compatible(self) -> bool:
        return all(e.compatible for e in self.entries)

    def violations(self) -> tuple:
        return tuple(e for e in self.entries if not e.compatible)


def check_context(observables, contexts, tolerance: float = 1e-10) -> ContextReport:
    """Verify pairwise commutation inside each declared context (index tuples)."""
    mats = [np.asarray(o, dtype=complex) for o in observables]
    entries = []
    for ctx in contexts:
        residual = 0.0
        for pos, i in enumerate(ctx):
            for j in ctx[pos + 1:]:
                comm = mats[i] @ mats[j] - mats[j] @ mats[i]
                residual = max(residual, float(np.abs(comm).max()))
        entries.append(
            ContextEntry(indices=tuple(ctx), compatible=residual <= tolerance, residual=residual)
        )
    return ContextReport(entries=tuple(entries))
