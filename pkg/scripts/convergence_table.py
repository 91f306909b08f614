"""Finite densities hull_mass / (all codes) against their limits as the length grows."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from hullmass.formulas import finite_density, limit_density


@dataclass(frozen=True)
class ConvergenceConfig:
    q: int = 2
    ells: tuple[int, ...] = (0, 1, 2)
    sizes: tuple[int, ...] = (4, 8, 16, 32, 64)
    tolerance: float = 1e-12


def rows(cfg: ConvergenceConfig):
    for inner in ("hermitian", "symplectic"):
        for ell in cfg.ells:
            limit = float(limit_density(inner, cfg.q, ell, cfg.tolerance))
            for n in cfg.sizes:
                if inner == "hermitian":
                    k = n // 2
                else:
                    # symplectic hulls share the parity of k
                    k = n + (ell % 2)
                ratio = float(finite_density(inner, cfg.q, n, k, ell))
                yield inner, ell, n, k, ratio, limit


def main(cfg: ConvergenceConfig) -> None:
    print(f"{'inner':<11}{'ell':>4}{'n':>5}{'k':>5}{'ratio':>16}{'limit':>16}{'difference':>13}")
    for inner, ell, n, k, ratio, limit in rows(cfg):
        print(f"{inner:<11}{ell:>4}{n:>5}{k:>5}{ratio:>16.12f}{limit:>16.12f}{abs(ratio - limit):>13.3e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(ConvergenceConfig.sizes))
    a = ap.parse_args()
    main(ConvergenceConfig(q=a.q, sizes=tuple(a.sizes)))
