#!/usr/bin/env python3
"""Regenerate the high-precision reference table src/kgbeams/data/specfun_oracle.csv.

1000 rows (250 per function), values computed with mpmath at 50 digits and
rounded to the nearest double. Abscissas are exact doubles so the table is
reproducible bit-for-bit. Run from the repository root.
"""

from pathlib import Path

import mpmath as mp
import numpy as np

mp.mp.dps = 50

OUT = Path(__file__).resolve().parent.parent / "src" / "kgbeams" / "data" / "specfun_oracle.csv"

N_PER_FN = 250


def grid_j(nu):
    # Oversample, then drop abscissas falling near a root of J_nu: the table
    # is checked in relative terms, which is ill-posed at a sign change
    # (the root itself is covered by a dedicated absolute-error test).
    cands = np.unique(
        np.concatenate(
            [
                np.geomspace(1e-8, 1e6, 2 * N_PER_FN),
                np.linspace(0.1, 30.0, 120),
                [1.0],
            ]
        )
    )
    keep = []
    for x in cands:
        val = abs(float(mp.besselj(nu, mp.mpf(float(x)))))
        envelope = min(1.0, float(mp.sqrt(2.0 / (mp.pi * max(float(x), 1.0)))))
        if val >= 0.05 * envelope:
            keep.append(float(x))
    idx = np.linspace(0, len(keep) - 1, N_PER_FN).round().astype(int)
    return np.array(keep)[np.unique(idx)][:N_PER_FN]


def grid_k():
    xs = np.concatenate(
        [
            np.geomspace(1e-6, 690.0, N_PER_FN - 50),
            np.linspace(0.2, 20.0, 49),
            [1.0],
        ]
    )
    return np.unique(xs)[:N_PER_FN]


def main():
    rows = []
    for name, fn, xs in (
        ("j0", lambda x: mp.besselj(0, x), grid_j(0)),
        ("j1", lambda x: mp.besselj(1, x), grid_j(1)),
        ("k0", lambda x: mp.besselk(0, x), grid_k()),
        ("k1", lambda x: mp.besselk(1, x), grid_k()),
    ):
        for x in xs:
            xd = float(x)
            val = float(fn(mp.mpf(xd)))
            rows.append(f"{name},{xd:.17g},{val:.17g}")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("function,x,value\n" + "\n".join(rows) + "\n")
    print(f"wrote {OUT} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
