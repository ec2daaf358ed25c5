#!/usr/bin/env python3
"""Survey box spectra across named and random U(2) boundary conditions.

Prints the first eigenvalues (E = s^2, L = 1) for the textbook extensions
and a handful of random points on U(2), flagging zero modes, negative
levels, and degeneracies.  A quick way to see how much spectral variety one
box supports.
"""

import math

import numpy as np

from saext import (
    BoxSpectrumRequest,
    ExtensionU2,
    classify_simple_family,
    expanded_values,
    is_parity_preserving,
    is_time_reversal,
    named_extension,
    solve_spectrum,
)


def describe(tag, ext, count=6):
    res = solve_spectrum(BoxSpectrumRequest(ext=ext, count=count))
    energies = []
    for root in res.negative:
        energies.extend([-root.value ** 2] * root.multiplicity)
    if res.has_zero_mode:
        energies.append(0.0)
    energies.extend(v * v for v in expanded_values(res.positive))
    flags = []
    if is_time_reversal(ext):
        flags.append("T")
    if is_parity_preserving(ext):
        flags.append("P")
    flags.append(classify_simple_family(ext).value)
    levels = ", ".join(f"{e:9.4f}" for e in energies[:count])
    print(f"{tag:<28} [{','.join(flags):>18}]  E: {levels}")


def main():
    print(f"{'extension':<28} {'symmetry/family':>20}  first energies (units 1/L^2)")
    describe("dirichlet", named_extension("dirichlet"))
    describe("neumann", named_extension("neumann"))
    describe("periodic", named_extension("periodic"))
    describe("antiperiodic", named_extension("antiperiodic"))
    describe("quasiperiodic(pi/3)", named_extension("quasi_periodic", theta=math.pi / 3))
    describe("attractive walls (m0=0)", ExtensionU2(psi=0.0, m0=0.0, m=(0.0, 1.0, 0.0)))

    rng = np.random.default_rng(2)
    for i in range(4):
        vec = rng.normal(size=4)
        vec /= np.linalg.norm(vec)
        ext = ExtensionU2(psi=rng.uniform(0, math.pi), m0=float(vec[0]),
                          m=tuple(float(v) for v in vec[1:]))
        describe(f"random #{i + 1}", ext)


if __name__ == "__main__":
    main()
