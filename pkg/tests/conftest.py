import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from saext import ExtensionU2

settings.register_profile(
    "ci", derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_extension(rng, m2=None, m3=None) -> ExtensionU2:
    """Uniform psi in [0, pi) and (m0, m) uniform on S^3, with optional pins."""
    vec = rng.normal(size=4)
    if m2 is not None:
        vec[2] = 0.0
    if m3 is not None:
        vec[3] = 0.0
    vec = vec / np.linalg.norm(vec)
    if m2 is not None:
        vec[2] = m2
    if m3 is not None:
        vec[3] = m3
    vec = vec / np.linalg.norm(vec)
    psi = rng.uniform(0.0, math.pi)
    return ExtensionU2(psi=psi, m0=float(vec[0]), m=(float(vec[1]), float(vec[2]), float(vec[3])))


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)


def gl_inner(f, g, panels: int = 60) -> complex:
    """Composite Gauss-Legendre <f, g> on [0, 1]; independent of saext quadrature."""
    edges = np.linspace(0.0, 1.0, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * np.diff(edges)
    xs = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    ws = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    return complex(np.sum(ws * np.conj(f(xs)) * g(xs)))
