"""Special functions and quadrature rules used by the eigenstate machinery.

Everything here is dimensionless: radial integration runs over the scaled
coordinate rho, angular integration over (cos(theta), phi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

FOUR_PI = 4.0 * math.pi


def hyp1f1_terminating(p: int, q: float, z):
    """Terminating confluent hypergeometric series 1F1(p; q; z) for non-positive integer p.

    The series has exactly |p|+1 terms; the result is exact up to rounding.
    """
    if not isinstance(p, (int, np.integer)):
        raise ValueError(f"first argument must be a non-positive integer, got {p!r}")
    if p > 0:
        raise ValueError(f"first argument must be non-positive (terminating series), got {p}")
    if q <= 0 and float(q).is_integer():
        raise ValueError(f"second argument must not be a non-positive integer, got {q}")
    z = np.asarray(z, dtype=float)
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(-p):
        term = term * ((p + k) / (q + k)) * z / (k + 1)
        total = total + term
    return total if total.ndim else float(total)


def _legendre_upward(l: int, m: int, x):
    """Associated Legendre P_l^m(x) for m >= 0, Condon-Shortley phase included."""
    # seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then recur upward in l
    pmm = np.ones_like(x)
    if m > 0:
        somx2 = np.sqrt((1.0 - x) * (1.0 + x))
        fact = 1.0
        for _ in range(m):
            pmm = pmm * (-fact) * somx2
            fact += 2.0
    if l == m:
        return pmm
    pmmp1 = x * (2 * m + 1) * pmm
    if l == m + 1:
        return pmmp1
    for ll in range(m + 2, l + 1):
        pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m)
        pmm, pmmp1 = pmmp1, pll
    return pmmp1


def spherical_harmonic(l: int, m: int, theta, phi):
    """Orthonormal spherical harmonic Y_lm(theta, phi) with Condon-Shortley phase."""
    if abs(m) > l:
        raise ValueError(f"|m| <= l required, got l={l}, m={m}")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    am = abs(m)
    # (l-m)!/(l+m)! via lgamma to stay finite for large l
    norm = math.sqrt((2 * l + 1) / FOUR_PI) * math.exp(
        0.5 * (math.lgamma(l - am + 1) - math.lgamma(l + am + 1))
    )
    val = norm * _legendre_upward(l, am, np.cos(theta)) * np.exp(1j * am * phi)
    if m < 0:
        val = (-1.0) ** am * np.conj(val)
    return val if val.ndim else complex(val)


@dataclass(frozen=True)
class QuadratureSpec:
    """Product quadrature: paneled Gauss-Legendre in rho, Gauss-Legendre in
    cos(theta), equispaced trapezoid in phi.

    radial_cutoff=None means "resolve later via the 60 + 10*n rule".
    """

    radial_panels: int = 4
    radial_order: int = 32
    radial_cutoff: float | None = None
    theta_order: int = 24
    phi_order: int = 24

    def __post_init__(self):
        if self.radial_panels < 1 or self.radial_order < 1:
            raise ValueError("radial_panels and radial_order must be >= 1")
        if self.theta_order < 1 or self.phi_order < 1:
            raise ValueError("theta_order and phi_order must be >= 1")
        if self.radial_cutoff is not None and self.radial_cutoff <= 0:
            raise ValueError("radial_cutoff must be positive")

    def resolved(self, n: int) -> "QuadratureSpec":
        """Concrete spec for principal quantum number n (cutoff rule 60 + 10*n)."""
        if self.radial_cutoff is not None:
            return self
        return replace(self, radial_cutoff=default_radial_cutoff(n))

    def check_phi_exactness(self, l_max: int) -> None:
        """Azimuthal rule must be exact on the trig polynomials of states up to l_max."""
        if self.phi_order < 2 * l_max + 2:
            raise ValueError(
                f"phi_order={self.phi_order} too small for l_max={l_max}; "
                f"need >= {2 * l_max + 2}"
            )


def default_radial_cutoff(n: int) -> float:
    return 60.0 + 10.0 * n


@dataclass(frozen=True)
class QuadratureNodes:
    rho: np.ndarray
    rho_weights: np.ndarray
    cos_theta: np.ndarray
    cos_theta_weights: np.ndarray
    phi: np.ndarray
    phi_weights: np.ndarray


def radial_nodes(spec: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on [0, rho_max], panels partitioned geometrically."""
    if spec.radial_cutoff is None:
        raise ValueError("radial_cutoff not resolved; call spec.resolved(n) first")
    x, w = np.polynomial.legendre.leggauss(spec.radial_order)
    p = spec.radial_panels
    # geometric (ratio-2) panel edges clustered toward rho = 0
    edges = spec.radial_cutoff * (2.0 ** np.arange(p + 1) - 1.0) / (2.0**p - 1.0)
    nodes = np.concatenate(
        [0.5 * (hi - lo) * x + 0.5 * (hi + lo) for lo, hi in zip(edges[:-1], edges[1:])]
    )
    weights = np.concatenate([0.5 * (hi - lo) * w for lo, hi in zip(edges[:-1], edges[1:])])
    return nodes, weights


def quadrature_nodes(spec: QuadratureSpec) -> QuadratureNodes:
    """Node/weight sequences for the (rho, cos(theta), phi) product rule."""
    rho, wr = radial_nodes(spec)
    ct, wt = np.polynomial.legendre.leggauss(spec.theta_order)
    phi = np.arange(spec.phi_order) * (2.0 * math.pi / spec.phi_order)
    wp = np.full(spec.phi_order, 2.0 * math.pi / spec.phi_order)
    return QuadratureNodes(rho, wr, ct, wt, phi, wp)


DEFAULT_QUADRATURE = QuadratureSpec()
