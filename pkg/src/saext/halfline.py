"""Self-adjoint boundary conditions of -D^2 on the half line [0, inf).

The one-parameter family phi(0) = lambda phi'(0), lambda in R u {inf},
equivalently lambda = -tan(alpha/2).  Physical consequences implemented
here: the reflection amplitude off the wall (|r| = 1 for every extension),
the lambda < 0 surface bound state, and a square-well model of the deuteron
(depth V0, range a, infinite wall at the origin) whose depth-vs-lambda
dependence discriminates between the extensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, ModelInconsistencyError
from .extensions import HalflineExtension
from .numerics import Bracket, refine_root, scan_brackets


def alpha_to_lambda(alpha: float) -> float:
    """lambda = -tan(alpha/2) with the alpha = pi pole mapped to infinity."""
    if not 0.0 <= alpha <= 2.0 * math.pi:
        raise InvalidParameterError(f"alpha must lie in [0, 2 pi], got {alpha}")
    if abs(alpha - math.pi) < 1e-15:
        return math.inf
    return -math.tan(alpha / 2.0)


def lambda_to_alpha(lam: float) -> float:
    """Inverse of alpha_to_lambda, returning alpha in [0, 2 pi)."""
    if math.isnan(lam):
        raise InvalidParameterError("lambda must be real or infinite")
    if math.isinf(lam):
        return math.pi
    return (-2.0 * math.atan(lam)) % (2.0 * math.pi)


def _as_lambda(lam) -> float:
    if isinstance(lam, HalflineExtension):
        return lam.lam
    return HalflineExtension(float(lam)).lam


def reflection(lam, k: float) -> tuple[complex, float]:
    """Reflection amplitude r(k) = -(1 + i lambda k)/(1 - i lambda k) and R = |r|^2.

    Every extension reflects perfectly (R = 1); lambda = inf gives r = +1.
    """
    lam = _as_lambda(lam)
    if k <= 0:
        raise InvalidParameterError("k must be positive")
    if math.isinf(lam):
        r = complex(1.0)
    else:
        r = -(1.0 + 1j * lam * k) / (1.0 - 1j * lam * k)
    return r, abs(r) ** 2


@dataclass(frozen=True)
class BoundState:
    """Surface state phi(x) = sqrt(2/|lambda|) e^{-x/|lambda|}, E in units hbar^2/2m."""

    lam: float
    energy: float       # -1 / lambda^2
    amplitude: float    # sqrt(2 / |lambda|)

    def wavefunction(self, x):
        x = np.asarray(x, dtype=float)
        return self.amplitude * np.exp(-x / abs(self.lam))


def bound_state(lam) -> BoundState | None:
    """The unique bound state for lambda < 0; None for lambda >= 0 or infinite."""
    lam = _as_lambda(lam)
    if math.isinf(lam) or lam >= 0.0:
        return None
    return BoundState(lam=lam, energy=-1.0 / (lam * lam), amplitude=math.sqrt(2.0 / abs(lam)))


# ---------------------------------------------------------------------------
# deuteron square-well model


@dataclass(frozen=True)
class DeuteronParams:
    """Square well of range ``range_a`` with an infinite wall, tuned to a bound state.

    The dimensionless decay parameter Y = rho a = a sqrt(M c^2 |E|) / hbar c
    (with 2m = M, the nucleon mass) is fixed by the constants and cached.
    """

    binding_energy: float = 2.2            # |E|, MeV
    range_a: float = 2.0                   # fm
    hbar_c: float = 197.3269804            # MeV fm
    nucleon_mass_c2: float = 938.919       # MeV (average nucleon)
    lam_over_a: float = 0.0                # dimensionless lambda/a, inf allowed

    def __post_init__(self):
        for name in ("binding_energy", "range_a", "hbar_c", "nucleon_mass_c2"):
            if not getattr(self, name) > 0:
                raise InvalidParameterError(f"{name} must be positive")
        if math.isnan(self.lam_over_a) or self.lam_over_a < 0:
            raise InvalidParameterError("lam_over_a must be >= 0 (or infinity)")
        y = self.range_a * math.sqrt(self.nucleon_mass_c2 * self.binding_energy) / self.hbar_c
        object.__setattr__(self, "_y", y)

    @property
    def y(self) -> float:
        return self._y


@dataclass(frozen=True)
class DeuteronSolution:
    X: float            # k a
    Y: float            # rho a
    V0: float           # well depth, MeV; V0/|E| = 1 + (X/Y)^2 exactly
    residual: float


def _ground_state_equation(y: float, ell: float):
    """Pole-free form of the bound-state matching condition.

    For finite ell = lambda/a the eigencondition
        Y = -X (1 - ell X tan X) / (tan X + ell X)
    is multiplied through by cos X:
        g(X) = Y (sin X + ell X cos X) + X (cos X - ell X sin X),
    which is analytic across the tan poles.  For ell = inf the limit is
    g(X) = Y cos X - X sin X (i.e. X tan X = Y).
    """
    if math.isinf(ell):
        return lambda x: y * np.cos(x) - x * np.sin(x)

    def g(x):
        x = np.asarray(x, dtype=float)
        out = y * (np.sin(x) + ell * x * np.cos(x)) + x * (np.cos(x) - ell * x * np.sin(x))
        return out if out.ndim else float(out)

    return g


def _equation_residual(x: float, y: float, ell: float) -> float:
    """|lhs - rhs| of the matching condition in its original (tan) form."""
    if math.isinf(ell):
        return abs(y - x * math.tan(x))
    t = math.tan(x)
    return abs(y + x * (1.0 - ell * x * t) / (t + ell * x))


def deuteron_v0(p: DeuteronParams, x_hint: float | None = None) -> DeuteronSolution:
    """Ground-state well depth V0 for the given lambda/a.

    Finds the smallest X > 0 solving the matching condition (the branch on
    which the tuned level is the ground state of the well): X in (pi/2, pi)
    at lambda/a = 0, migrating continuously into (0, pi/2) as lambda/a grows.
    An optional ``x_hint`` from a neighbouring lambda value narrows the scan;
    the cold-start search over (0, pi) is the fallback, so sweep results do
    not depend on evaluation order.
    """
    y = p.y
    ell = p.lam_over_a
    g = _ground_state_equation(y, ell)

    brackets: list[Bracket] = []
    if x_hint is not None and 0.0 < x_hint < math.pi:
        lo = max(1e-9, 0.7 * x_hint)
        hi = min(math.pi - 1e-12, 1.3 * x_hint + 0.1)
        g_lo, g_hi = g(lo), g(hi)
        if g_lo * g_hi < 0:
            brackets = [Bracket(lo, hi, g_lo, g_hi)]
    if not brackets:
        brackets = [b for b in scan_brackets(g, 1e-9, math.pi - 1e-12, math.pi / 64.0)
                    if not b.double_root]
    if not brackets:
        raise ModelInconsistencyError(
            f"no ground-state solution with Y = {y!r}, lambda/a = {ell!r}"
        )
    report = refine_root(brackets[0], g, tol=1e-14)
    x = report.root
    residual = _equation_residual(x, y, ell)
    v0 = p.binding_energy * (1.0 + (x / y) ** 2)
    return DeuteronSolution(X=x, Y=y, V0=v0, residual=residual)


def deuteron_sweep(base: DeuteronParams, lam_over_a_values) -> list[DeuteronSolution]:
    """Solve for each lambda/a, using continuation from the previous root."""
    solutions: list[DeuteronSolution] = []
    hint: float | None = None
    for ell in lam_over_a_values:
        params = DeuteronParams(
            binding_energy=base.binding_energy,
            range_a=base.range_a,
            hbar_c=base.hbar_c,
            nucleon_mass_c2=base.nucleon_mass_c2,
            lam_over_a=float(ell),
        )
        sol = deuteron_v0(params, x_hint=hint)
        solutions.append(sol)
        hint = sol.X
    return solutions


def deuteron_wall_matching(sol: DeuteronSolution, ell: float) -> tuple[float, float]:
    """Value and derivative mismatch of the two wavefunction pieces at x = a.

    Reconstructs phi_in = A sin(k x) + B cos(k x) (with B = (lambda/a) X A
    from the wall condition; A = 0, B = 1 for lambda = inf) and
    phi_out = C e^{-rho x}, with C fixed by value matching; returns the value
    and derivative mismatches, both ~ 0 at a true solution.
    """
    x, y = sol.X, sol.Y
    if math.isinf(ell):
        a_c, b_c = 0.0, 1.0
    else:
        a_c, b_c = 1.0, ell * x
    inside = a_c * math.sin(x) + b_c * math.cos(x)
    d_inside = x * (a_c * math.cos(x) - b_c * math.sin(x))   # d/d(x/a) at the wall
    c_out = inside * math.exp(y)
    outside = c_out * math.exp(-y)
    d_outside = -y * outside
    return abs(inside - outside), abs(d_inside - d_outside)
