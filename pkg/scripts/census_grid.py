"""Exhaustive hull census against the closed forms over a grid of small parameters."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hullmass.census import hull_census


@dataclass(frozen=True)
class GridConfig:
    hermitian: tuple[tuple[int, int], ...] = ((2, 4), (3, 3))  # (q, max length)
    symplectic: tuple[tuple[int, int], ...] = ((2, 3), (3, 2))  # (q, max half-length)


def main(cfg: GridConfig) -> int:
    bad = 0
    for inner, grid in (("hermitian", cfg.hermitian), ("symplectic", cfg.symplectic)):
        for q, top in grid:
            for n in range(1, top + 1):
                length = n if inner == "hermitian" else 2 * n
                for k in range(length + 1):
                    t0 = time.perf_counter()
                    rep = hull_census(inner, q, length, k)
                    counts = " ".join(f"{r['ell']}:{r['enumerated']}" for r in rep.rows())
                    status = "ok" if rep.all_match else "MISMATCH"
                    bad += not rep.all_match
                    print(f"{inner:<11} q={q} [{length},{k}] {counts:<40} {status} ({time.perf_counter() - t0:.2f}s)")
    print("all grid points match" if not bad else f"{bad} mismatching grid points")
    return 1 if bad else 0


if __name__ == "__main__":
    argparse.ArgumentParser(description=__doc__).parse_args()
    raise SystemExit(main(GridConfig()))
