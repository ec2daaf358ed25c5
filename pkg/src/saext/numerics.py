"""Shared numerical kernels: root bracketing, refinement, quadrature, series.

Everything here is deliberately small and dependency-free (numpy only for
grid evaluation).  The spectral modules rely on three guarantees:

* ``scan_brackets`` finds every sign change of a scalar function on a uniform
  grid and, in addition, locates tangencies (double roots) that leave no sign
  change — these occur for genuinely doubly degenerate spectra.
* ``refine_root`` is a bisection/secant hybrid: secant steps when they help,
  bisection always as a fallback, so termination is guaranteed on any
  continuous function with a sign-change bracket.
* ``integrate`` is adaptive Simpson with Richardson correction, exact through
  degree-5 polynomials on a panel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import AccuracyError, ConvergenceError, EvaluationError, InvalidParameterError

# |f| threshold, relative to the local function scale, below which a polished
# same-sign minimum is declared a double root.
TANGENCY_RTOL = 1e-9

_MAX_ROOT_ITERATIONS = 200


@dataclass(frozen=True)
class Bracket:
    """A subinterval known to contain a root.

    Either a strict sign change (``f_lo * f_hi < 0``) or, when
    ``double_root`` is set, a polished tangency at ``x_min`` where ``f``
    touches zero without crossing.
    """

    lo: float
    hi: float
    f_lo: float
    f_hi: float
    double_root: bool = False
    x_min: float | None = None


@dataclass(frozen=True)
class RootReport:
    root: float
    residual: float
    iterations: int
    multiplicity_hint: int = 1


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms: int


def _eval_grid(f: Callable[[float], float], xs: np.ndarray) -> np.ndarray:
    """Evaluate f on a grid, vectorized when f supports it."""
    try:
        with np.errstate(all="ignore"):
            ys = np.asarray(f(xs), dtype=float)
        if ys.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        ys = np.array([float(f(x)) for x in xs])
    bad = ~np.isfinite(ys)
    if bad.any():
        raise EvaluationError("non-finite function value in scan", float(xs[bad][0]))
    return ys


def _fd_slope(f: Callable[[float], float], x: float) -> float:
    h = 1e-6 * max(1.0, abs(x))
    return float(f(x + h)) - float(f(x - h))


def _refine_extremum(
    f: Callable[[float], float], a: float, b: float, xtol: float
) -> float | None:
    """Locate an interior extremum of f by bisecting a central-difference slope.

    Returns None when the slope does not change sign over (a, b).
    """
    da, db = _fd_slope(f, a), _fd_slope(f, b)
    if da == 0.0 or db == 0.0 or (da > 0.0) == (db > 0.0):
        return None
    for _ in range(_MAX_ROOT_ITERATIONS):
        m = 0.5 * (a + b)
        if b - a <= xtol:
            break
        dm = _fd_slope(f, m)
        if dm == 0.0:
            break
        if (dm > 0.0) == (da > 0.0):
            a, da = m, dm
        else:
            b, db = m, dm
    return 0.5 * (a + b)


def scan_brackets(
    f: Callable[[float], float], lo: float, hi: float, step: float
) -> list[Bracket]:
    """Bracket every root of f on [lo, hi] using a uniform grid of width <= step.

    Strict sign changes become ordinary brackets.  A same-sign local minimum
    of |f| is polished; if the polished extremum reveals a sign flip the two
    hidden crossings are bracketed separately, and if |f| at the extremum is
    below ``TANGENCY_RTOL`` times the local scale the point is flagged as a
    suspected double root.
    """
    if not (0.0 < step <= (hi - lo) * (1.0 + 1e-9)):
        raise InvalidParameterError(f"step must satisfy 0 < step <= hi-lo, got {step}")
    n = max(1, math.ceil((hi - lo) / step))
    xs = np.linspace(lo, hi, n + 1)
    ys = _eval_grid(f, xs)

    brackets: list[Bracket] = []
    signs = np.sign(ys)

    for i in range(n):
        if signs[i] * signs[i + 1] < 0:
            brackets.append(Bracket(float(xs[i]), float(xs[i + 1]), float(ys[i]), float(ys[i + 1])))
        elif ys[i] == 0.0 and i > 0:
            # exact grid-node zero: split off a tiny enclosing bracket
            h = (xs[i + 1] - xs[i]) * 1e-6
            fl, fr = float(f(xs[i] - h)), float(f(xs[i] + h))
            if fl * fr < 0:
                brackets.append(Bracket(float(xs[i] - h), float(xs[i] + h), fl, fr))
            else:
                brackets.append(
                    Bracket(float(xs[i] - h), float(xs[i] + h), fl, fr,
                            double_root=True, x_min=float(xs[i]))
                )

    # tangency candidates: same-sign dips of |f|; adjacent ties map to one extremum
    handled: list[float] = []
    for i in range(1, n):
        if signs[i - 1] == signs[i] == signs[i + 1] != 0 and (
            abs(ys[i]) <= abs(ys[i - 1]) and abs(ys[i]) <= abs(ys[i + 1])
        ):
            a, b = float(xs[i - 1]), float(xs[i + 1])
            xtol = 1e-11 * max(1.0, abs(xs[i]))
            x_star = _refine_extremum(f, a, b, xtol)
            if x_star is None:
                continue
            if any(abs(x_star - seen) <= 1e-3 * step for seen in handled):
                continue
            handled.append(x_star)
            f_star = float(f(x_star))
            scale = max(abs(ys[i - 1]), abs(ys[i + 1]), 1e-300)
            if abs(f_star) <= TANGENCY_RTOL * scale:
                # |f| touches zero without a resolvable crossing: double root
                w = max(1e-9, 1e-7 * abs(x_star))
                brackets.append(
                    Bracket(x_star - w, x_star + w, float(f(x_star - w)), float(f(x_star + w)),
                            double_root=True, x_min=x_star)
                )
            elif np.sign(f_star) != 0 and np.sign(f_star) != signs[i]:
                # two crossings hidden inside one grid cell
                fl = float(ys[i - 1])
                fr = float(ys[i + 1])
                brackets.append(Bracket(a, x_star, fl, f_star))
                brackets.append(Bracket(x_star, b, f_star, fr))

    brackets.sort(key=lambda br: br.lo)
    return brackets


def refine_root(bracket: Bracket, f: Callable[[float], float], tol: float) -> RootReport:
    """Refine a bracket to |hi-lo| <= tol with a bisection/secant hybrid.

    Double-root brackets are refined by locating the extremum of f instead;
    ``multiplicity_hint`` is 2 in that case.
    """
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")

    if bracket.double_root:
        x0 = bracket.x_min if bracket.x_min is not None else 0.5 * (bracket.lo + bracket.hi)
        x = _refine_extremum(f, bracket.lo, bracket.hi, xtol=min(tol, 1e-11 * max(1.0, abs(x0))))
        if x is None:
            x = x0
        return RootReport(root=x, residual=float(f(x)), iterations=0, multiplicity_hint=2)

    a, b, fa, fb = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    if fa == 0.0:
        return RootReport(a, 0.0, 0, 1)
    if fb == 0.0:
        return RootReport(b, 0.0, 0, 1)
    if fa * fb > 0:
        raise InvalidParameterError("bracket does not contain a sign change")

    iterations = 0
    use_bisection = False
    while b - a > tol and iterations < _MAX_ROOT_ITERATIONS:
        iterations += 1
        x = None
        if not use_bisection and fb != fa:
            x_sec = b - fb * (b - a) / (fb - fa)
            margin = 0.01 * (b - a)
            if a + margin < x_sec < b - margin:
                x = x_sec
        if x is None:
            x = 0.5 * (a + b)
        fx = float(f(x))
        if not math.isfinite(fx):
            raise EvaluationError("non-finite function value in refine_root", x)
        if fx == 0.0:
            return RootReport(x, 0.0, iterations, 1)
        width_before = b - a
        if (fx > 0) == (fa > 0):
            a, fa = x, fx
        else:
            b, fb = x, fx
        # force a bisection next time whenever the secant step stalls
        use_bisection = (b - a) > 0.6 * width_before

    root = a if abs(fa) <= abs(fb) else b
    residual = fa if root == a else fb
    if b - a > tol:
        raise ConvergenceError("refine_root hit the iteration cap", root, residual, iterations)
    return RootReport(root=root, residual=residual, iterations=iterations, multiplicity_hint=1)


def _adaptive_simpson(f, a, fa, m, fm, b, fb, whole, tol, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    for x, v in ((lm, flm), (rm, frm)):
        if not np.all(np.isfinite([abs(v)])):
            raise EvaluationError("non-finite integrand", float(x))
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol or depth <= 0:
        value = left + right + delta / 15.0
        if abs(delta) > 15.0 * tol:
            raise AccuracyError("quadrature depth exhausted", value, abs(delta) / 15.0)
        return value
    return _adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) + _adaptive_simpson(
        f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1
    )


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    breakpoints: Sequence[float] = (),
) -> float | complex:
    """Adaptive Simpson estimate of the integral of f over [a, b].

    The absolute error is (estimated to be) at most tol.  Interior
    breakpoints split the interval so each panel sees a smooth integrand.
    Complex-valued integrands are allowed; the error metric is the modulus.
    """
    if not a < b:
        raise InvalidParameterError(f"need a < b, got [{a}, {b}]")
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    pts = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    total = 0.0
    for p, q in zip(pts, pts[1:]):
        fp, fq = f(p), f(q)
        m = 0.5 * (p + q)
        fm = f(m)
        whole = (q - p) / 6.0 * (fp + 4.0 * fm + fq)
        total = total + _adaptive_simpson(f, p, fp, m, fm, q, fq, whole, tol * (q - p) / (b - a), 52)
    return total


def sum_series(
    term: Callable[[int], float],
    tail_bound: Callable[[int], float],
    tol: float,
    max_terms: int = 20_000_000,
) -> SeriesResult:
    """Partial sum of term(1) + term(2) + ... until tail_bound(N) <= tol.

    tail_bound(N) must bound |sum over n > N of term(n)| and be decreasing.
    Kahan compensation keeps the accumulation error negligible next to tol.
    """
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    total = 0.0
    comp = 0.0
    n = 0
    while n < max_terms:
        n += 1
        t = float(term(n))
        if not math.isfinite(t):
            raise EvaluationError("non-finite series term", n)
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        if tail_bound(n) <= tol:
            return SeriesResult(value=total, terms=n)
    raise AccuracyError("series cap reached before tail bound met", total, float(tail_bound(n)))
