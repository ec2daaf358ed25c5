#!/usr/bin/env python3
"""Finite well -> infinite well: what survives the limit and what breaks.

As the dimensionless depth v0 grows, the ground state obeys
kL = pi (1 - 2/v0) + 4 pi/v0^2 + ..., the wall value of the eigenfunction
dies like pi/v0 (restoring phi(0) = phi(L) = 0), but the derivative at the
wall stays finite, so first-derivative continuity is lost in the limit.
"""

from saext import infinite_limit_study

V0S = [50.0, 100.0, 1000.0, 10000.0, 100000.0]


def main():
    study = infinite_limit_study(V0S, n=1)
    print(f"{'v0':>9} {'kL':>14} {'kL dev':>12} {'E/E_inf':>12} "
          f"{'|phi(wall)|':>12} {'|phi_prime|':>12}")
    for row in study.rows:
        print(f"{row.v0:>9.0f} {row.kL:>14.10f} {row.kL_deviation:>12.3e} "
              f"{row.energy_ratio:>12.8f} {row.wall_value:>12.4e} "
              f"{row.wall_derivative:>12.6f}")
    print(f"# energy convergence order in 1/v0: {study.energy_order:.4f} (expect 1)")
    print(f"# kL-deviation orders: "
          + ", ".join(f"{p:.3f}" for p in study.deviation_orders) + " (expect 2)")


if __name__ == "__main__":
    main()
