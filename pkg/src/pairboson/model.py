"""Closed-form physics of the pair-driven single-mode boson.

The Hamiltonian is

    H = a†a − (ε/2)(a†² + a²) + (1/2L) a†²a²,

optionally perturbed by the symmetry-breaking term V = −(λ/2)(a + a†),
which couples to the position quadrature and tilts the double well.
This module holds everything that can be written down in closed form:
the classical (coherent-state) energy landscape and its minima, the
quadratic-fluctuation (Bogoliubov) theory around each minimum, and the
thermodynamic-limit predictions used as references everywhere else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "ModelParams",
    "ClassicalMinima",
    "BogoliubovSolution",
    "ExponentTable",
    "classical_energy",
    "classical_minima",
    "bogoliubov_solution",
    "analytic_energy_density",
    "analytic_gap",
    "analytic_density",
    "analytic_exponent_table",
]


@dataclass(frozen=True)
class ModelParams:
    """A point (ε, L, λ) in parameter space.

    epsilon : pair-injection rate, ≥ 0. Drives the transition at ε = 1.
    L       : inverse interaction strength, > 0 (any positive real; the
              thermodynamic limit is L → ∞).
    lam     : symmetry-breaking strength, ≥ 0 (couples −(λ/2)(a + a†)).
    """

    epsilon: float
    L: float
    lam: float = 0.0

    def __post_init__(self):
        if not self.epsilon >= 0.0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")
        if not self.L > 0.0:
            raise ValueError(f"L must be > 0, got {self.L}")
        if not self.lam >= 0.0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")


@dataclass(frozen=True)
class ClassicalMinima:
    """Global minimizers of the real-restricted classical energy, with energies."""

    alphas: tuple
    energies: tuple


@dataclass(frozen=True)
class BogoliubovSolution:
    """Quadratic-fluctuation solution around a real expansion point.

    Delta and sigma are the number and pair coefficients of the quadratic
    Hamiltonian, Omega = sqrt(Delta² − sigma²) the excitation gap,
    E0_fluct = (Omega − Delta)/2 the zero-point energy, and r the squeezing
    of the Bogoliubov mode, sinh 2r = sigma/Omega. At a gapless point
    (Omega = 0) the squeezing diverges and r is returned as math.inf with
    ``critical`` set, so downstream code cannot silently use it.
    """

    alpha: float
    Delta: float
    sigma: float
    Omega: float
    E0_fluct: float
    r: float
    E_total: float
    stable: bool = True
    critical: bool = False


def classical_energy(params: ModelParams, alpha: complex) -> float:
    """Coherent-state energy |α|⁴/2L + |α|² − (ε/2)(α*² + α²), λ-tilt included."""
    a2 = abs(alpha) ** 2
    e = a2 * a2 / (2.0 * params.L) + a2 - params.epsilon * (alpha.conjugate() ** 2 + alpha ** 2).real / 2.0
    if params.lam:
        e -= params.lam * complex(alpha).real
    return float(e)


def classical_minima(params: ModelParams) -> ClassicalMinima:
    """Global minimizers of E(α) = (1−ε)α² + α⁴/2L on the real axis.

    {0} for ε ≤ 1; {±sqrt(L(ε−1))} for ε > 1 (α = 0 turns unstable).
    Requires λ = 0, where the landscape is parity symmetric.
    """
    if params.lam != 0.0:
        raise ValueError("classical_minima requires lam = 0")
    eps, L = params.epsilon, params.L
    if eps <= 1.0:
        return ClassicalMinima(alphas=(0.0,), energies=(0.0,))
    a = math.sqrt(L * (eps - 1.0))
    e = -L * (eps - 1.0) ** 2 / 2.0
    return ClassicalMinima(alphas=(-a, a), energies=(e, e))


def bogoliubov_solution(params: ModelParams, alpha: float) -> BogoliubovSolution:
    """Quadratic expansion around a real point: Δ = 1 + 2α²/L, σ = ε − α²/L.

    Raises UnstableExpansionPoint when Δ < |σ| (imaginary gap) or σ < 0 with
    Δ ≤ σ. At Ω = 0 returns the critical marker (r = inf).
    """
    from .errors import UnstableExpansionPoint

    eps, L = params.epsilon, params.L
    a2 = alpha * alpha
    Delta = 1.0 + 2.0 * a2 / L
    sigma = eps - a2 / L
    disc = Delta * Delta - sigma * sigma
    if disc < 0.0:
        raise UnstableExpansionPoint(
            f"Delta={Delta:.6g} < |sigma|={abs(sigma):.6g} at alpha={alpha:.6g}"
        )
    Omega = math.sqrt(disc)
    E0 = (Omega - Delta) / 2.0
    Ecl = classical_energy(params, alpha)
    stable = sigma >= 0.0 and Delta > sigma
    if Omega == 0.0:
        return BogoliubovSolution(alpha, Delta, sigma, Omega, E0, math.inf,
                                  Ecl + E0, stable=stable, critical=True)
    r = 0.5 * math.asinh(sigma / Omega)
    return BogoliubovSolution(alpha, Delta, sigma, Omega, E0, r, Ecl + E0, stable=stable)


def analytic_energy_density(epsilon: float) -> float:
    """L→∞ ground-state energy density: 0 for ε ≤ 1, −(ε−1)²/2 above."""
    if epsilon <= 1.0:
        return 0.0
    return -((epsilon - 1.0) ** 2) / 2.0


def analytic_gap(epsilon: float) -> float:
    """L→∞ gap: sqrt(1−ε²) in the disordered phase, 0 from ε = 1 on."""
    if epsilon >= 1.0:
        return 0.0
    return math.sqrt(1.0 - epsilon * epsilon)


def analytic_density(epsilon: float) -> float:
    """L→∞ excitation density: 0 for ε ≤ 1, ε − 1 above."""
    if epsilon <= 1.0:
        return 0.0
    return epsilon - 1.0


@dataclass(frozen=True)
class ExponentTable:
    """Reference critical and finite-size exponents.

    Sign convention: A ∝ |ε−1|^γ_A approaching the critical point at
    infinite size, and A ∝ L^δ_A at the critical point, so that
    ν = −γ_A/δ_A = 3/2 for every observable. Keys: gap ΔE, density ρ,
    position uncertainty Δx.
    """

    gamma_gap: float = 0.5
    gamma_rho: float = 1.0
    gamma_dx: float = -0.25
    delta_gap: float = -1.0 / 3.0
    delta_rho: float = -2.0 / 3.0
    delta_dx: float = 1.0 / 6.0
    nu: float = 1.5

    def gamma(self, name: str) -> float:
        return {"gap": self.gamma_gap, "rho": self.gamma_rho, "dx": self.gamma_dx}[name]

    def delta(self, name: str) -> float:
        return {"gap": self.delta_gap, "rho": self.delta_rho, "dx": self.delta_dx}[name]


def analytic_exponent_table() -> ExponentTable:
    """The constant reference table {γ_A, δ_A, ν}."""
    return ExponentTable()
