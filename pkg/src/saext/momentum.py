"""Spectra and expansions for the U(1) momentum extensions on [0, L].

The boundary condition phi(L) = e^{i theta} phi(0) gives eigenvalues
2 pi hbar nu / L with nu = n + theta / 2 pi (n any integer) and normalized
plane-wave eigenfunctions.  The module expands the normalized parabola

    Psi(x) = sqrt(30 / L^5) x (L - x)

over that basis and exposes the resulting momentum probabilities, which
depend measurably on theta.  Everything is computed with L = hbar = 1 and
converted at the boundary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DiagnosticError, InvalidParameterError
from .extensions import MomentumExtension
from .numerics import integrate

SQRT30 = math.sqrt(30.0)


@dataclass(frozen=True)
class MomentumEigenstate:
    """Plane-wave eigenstate phi_n(x) = exp(2 i pi nu x / L) / sqrt(L)."""

    n: int
    theta: float
    nu: float
    eigenvalue: float    # 2 pi hbar nu / L

    def wavefunction(self, x, length: float = 1.0):
        x = np.asarray(x, dtype=float)
        return np.exp(2j * math.pi * self.nu * x / length) / math.sqrt(length)


@dataclass(frozen=True)
class ExpansionTable:
    theta: float
    entries: tuple[tuple[int, complex, float], ...]   # (n, c_n, |c_n|^2)
    parseval_defect: float


@dataclass(frozen=True)
class UncertaintyReport:
    dP: float
    dX: float
    product: float


def p_spectrum(
    theta: float, n_range: tuple[int, int], hbar: float = 1.0, length: float = 1.0
) -> list[MomentumEigenstate]:
    """Eigenstates for n in the inclusive range n_range at phase theta."""
    theta = MomentumExtension(theta).theta
    n_min, n_max = n_range
    if n_min > n_max:
        raise InvalidParameterError(f"empty integer range {n_range}")
    states = []
    for n in range(n_min, n_max + 1):
        nu = n + theta / (2.0 * math.pi)
        states.append(
            MomentumEigenstate(n=n, theta=theta, nu=nu, eigenvalue=2.0 * math.pi * hbar * nu / length)
        )
    return states


def _parabola(x):
    return SQRT30 * x * (1.0 - x)


def expansion_coeff_quadrature(theta: float, n: int, tol: float = 1e-12) -> complex:
    """(phi_n, Psi) by direct adaptive quadrature; the independent route."""
    theta = MomentumExtension(theta).theta
    nu = n + theta / (2.0 * math.pi)
    re = integrate(lambda x: math.cos(2.0 * math.pi * nu * x) * _parabola(x), 0.0, 1.0, tol)
    im = integrate(lambda x: -math.sin(2.0 * math.pi * nu * x) * _parabola(x), 0.0, 1.0, tol)
    return complex(re, im)


def _coeff_gauss(nu: float) -> complex:
    """(phi_n, Psi) on a fixed Gauss-Legendre grid scaled to the oscillation."""
    panels = max(8, 4 * (1 + int(abs(nu))))
    nodes, weights = np.polynomial.legendre.leggauss(10)
    edges = np.linspace(0.0, 1.0, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * np.diff(edges)
    xs = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    ws = (half[:, None] * weights[None, :]).ravel()
    vals = np.exp(-2j * math.pi * nu * xs) * _parabola(xs)
    return complex(np.sum(ws * vals))


def expansion_coeff(theta: float, n: int, validate: bool = True) -> complex:
    """Expansion coefficient c_n(theta) of the parabola over the P_theta basis.

    theta != 0:  c_n = -(sqrt(30) / 2 pi^2 nu^2)
                        [cos(theta/2) - sin(theta/2) / (pi nu)] e^{-i theta/2}
    theta  = 0:  c_0 = sqrt(30)/6 and c_n = -sqrt(30) / (2 pi^2 n^2) for n != 0
                 (negative n give the same value as |n|).

    With ``validate`` every value is cross-checked against direct numerical
    integration of (phi_n, Psi) to 1e-10.
    """
    theta = MomentumExtension(theta).theta
    if theta == 0.0:
        if n == 0:
            value = complex(SQRT30 / 6.0)
        else:
            value = complex(-SQRT30 / (2.0 * math.pi ** 2 * n * n))
    elif n == 0:
        # nu = theta/2pi: the bracket cancels to O(u^2); use the stable kernel
        # (sin u - u cos u)/u^3 with u = theta/2, so c_0 -> sqrt(30)/6 as u -> 0
        u = theta / 2.0
        if u < 1e-4:
            kernel = 1.0 / 3.0 - u * u / 30.0 + u ** 4 / 840.0
        else:
            kernel = (math.sin(u) - u * math.cos(u)) / u ** 3
        value = SQRT30 * kernel / 2.0 * cmath.exp(-1j * u)
    else:
        nu = n + theta / (2.0 * math.pi)
        bracket = math.cos(theta / 2.0) - math.sin(theta / 2.0) / (math.pi * nu)
        value = (
            -SQRT30 / (2.0 * math.pi ** 2 * nu * nu) * bracket * cmath.exp(-1j * theta / 2.0)
        )
    if validate:
        nu = n + theta / (2.0 * math.pi)
        ref = _coeff_gauss(nu)
        if abs(value - ref) > 1e-10:
            raise DiagnosticError(
                f"closed-form coefficient {value!r} disagrees with quadrature {ref!r} "
                f"(theta={theta!r}, n={n})"
            )
    return value


def expansion_table(theta: float, n_min: int, n_max: int, validate: bool = True) -> ExpansionTable:
    """Coefficients and probabilities for n in [n_min, n_max], with the Parseval defect."""
    if n_min > n_max:
        raise InvalidParameterError(f"empty integer range ({n_min}, {n_max})")
    theta = MomentumExtension(theta).theta
    entries = []
    total = 0.0
    for n in range(n_min, n_max + 1):
        c = expansion_coeff(theta, n, validate=validate)
        prob = abs(c) ** 2
        total += prob
        entries.append((n, c, prob))
    return ExpansionTable(theta=theta, entries=tuple(entries), parseval_defect=abs(1.0 - total))


def uncertainty_product(state: MomentumEigenstate, length: float = 1.0) -> UncertaintyReport:
    """Delta P = 0 exactly for an eigenstate; Delta X from the uniform density.

    The product is 0 < hbar/2: on a finite interval the usual uncertainty
    bound has no force.  The position moments are computed by quadrature of
    |phi|^2 = 1/L, which gives Delta X = L / sqrt(12).
    """
    density = lambda x: abs(state.wavefunction(x, length)) ** 2
    mean = integrate(lambda x: x * density(x), 0.0, length, tol=1e-12)
    mean_sq = integrate(lambda x: x * x * density(x), 0.0, length, tol=1e-12)
    d_x = math.sqrt(max(mean_sq - mean * mean, 0.0))
    return UncertaintyReport(dP=0.0, dX=d_x, product=0.0)
