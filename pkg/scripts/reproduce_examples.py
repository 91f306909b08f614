"""Reproduce the worked examples: the [4,2] quaternary census and classification,
the ternary symplectic self-orthogonal count, and the group/stabilizer checks."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from hullmass.census import classify, hull_census, sso_containing_all, stabilizer_check
from hullmass.code import LinearCode, hermitian_normal_form, hull_dimension, so_codeword_count
from hullmass.field import gf
from hullmass.matrix import gram


@dataclass(frozen=True)
class ExampleConfig:
    hermitian_q: int = 2
    hermitian_n: int = 4
    hermitian_k: int = 2
    hermitian_ell: int = 1
    symplectic_q: int = 3
    symplectic_n: int = 2
    symplectic_k: int = 2


def main(cfg: ExampleConfig) -> None:
    rep = hull_census("hermitian", cfg.hermitian_q, cfg.hermitian_n, cfg.hermitian_k)
    print(f"Hermitian [{cfg.hermitian_n},{cfg.hermitian_k}] codes over GF({cfg.hermitian_q ** 2}): {rep.total}")
    for row in rep.rows():
        print(f"  ell={row['ell']}: census {row['enumerated']}, formula {row['formula']}")

    cls = classify("hermitian", cfg.hermitian_q, cfg.hermitian_n, cfg.hermitian_k, cfg.hermitian_ell)
    print(f"\nPermutation classes with hull dimension {cfg.hermitian_ell}: {len(cls.classes)}")
    for c in cls.classes:
        print(f"  |Aut| = {c.aut_order:2d}  class size {c.class_size:2d}  {c.representative.generator.tolist()}")
    print(f"  sum n!/|Aut| = {cls.mass_identity_lhs} (formula {cls.mass_identity_rhs})")

    F = gf(4)
    C = LinearCode.from_rows(F, [[1, 0, 1, 3], [0, 1, 2, 2]])
    G = hermitian_normal_form(C)
    print(f"\nC = <1 0 w w^2, 0 1 w^2 w^2>: hull {hull_dimension(C, 'hermitian')}, "
          f"{so_codeword_count(C)} self-orthogonal codewords, normal-form Gram {gram(G, 'hermitian').tolist()}")

    rep = hull_census("symplectic", cfg.symplectic_q, 2 * cfg.symplectic_n, cfg.symplectic_k)
    print(f"\nSymplectic [{2 * cfg.symplectic_n},{cfg.symplectic_k}] codes over GF({cfg.symplectic_q}):")
    for row in rep.rows():
        print(f"  ell={row['ell']}: census {row['enumerated']}, formula {row['formula']}")
    through = sso_containing_all(cfg.symplectic_q, cfg.symplectic_n, cfg.symplectic_k)
    print(f"  self-orthogonal codes through each nonzero vector: {sorted(set(through.values()))}")

    for inner in ("hermitian", "symplectic"):
        s = stabilizer_check(inner, 2, 2, 1)
        print(f"\n{inner} stabilizer check (q=2, n=2, k=1): orbit {s.orbit_size} x stabilizer "
              f"{s.stabilizer_size} = {s.group_order}; passed={s.passed}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--hermitian-q", type=int, default=ExampleConfig.hermitian_q)
    ap.add_argument("--symplectic-q", type=int, default=ExampleConfig.symplectic_q)
    a = ap.parse_args()
    main(ExampleConfig(hermitian_q=a.hermitian_q, symplectic_q=a.symplectic_q))
