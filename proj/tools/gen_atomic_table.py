#!/usr/bin/env python3
"""Generate data/rb87_ns.csv: van der Waals C6 and static scalar polarizability
for 87Rb |nS_1/2, m_j=1/2> pair states, n = 50..110.

Sources:
  * C6(nS-nS) fit: M. Singer et al., J. Phys. B 38, S295 (2005):
        C6 [a.u.] = n^11 (11.97 - 0.8486 n + 3.385e-3 n^2)
    (magnitude used; valid ~30 <= n <= 95, smooth extrapolation above).
  * Polarizability: alpha scales as n*^7; anchored to the measured value
    |alpha(43S_1/2)| = 17.9 MHz/(V/cm)^2 (Loew et al., J. Phys. B 45, 113001 (2012)).
  * Rb nS quantum defect: delta(n) = 3.1311804 + 0.1784/(n - 3.1311804)^2
    (Mack et al., PRA 83, 052515 (2011)).

Output units are angular frequency: rad/us * um^6 for C6, and
rad/us per (V/cm)^2 for alpha (hbar = 1 convention).
"""

import os

HARTREE_GHZ = 6.579683920502e6          # E_h / h in GHz
BOHR_UM = 5.29177210903e-5              # a0 in um
AU_TO_GHZ_UM6 = HARTREE_GHZ * BOHR_UM**6
GHZ_TO_RAD_US = 2.0 * 3.141592653589793 * 1.0e3   # linear GHz -> rad/us
MHZ_TO_RAD_US = 2.0 * 3.141592653589793           # linear MHz -> rad/us

DELTA0 = 3.1311804
DELTA2 = 0.1784
ALPHA_ANCHOR_N = 43
ALPHA_ANCHOR_MHZ = 17.9


def n_star(n: int) -> float:
    return n - (DELTA0 + DELTA2 / (n - DELTA0) ** 2)


def c6_rad_us_um6(n: int) -> float:
    c6_au = abs(n**11 * (11.97 - 0.8486 * n + 3.385e-3 * n * n))
    return c6_au * AU_TO_GHZ_UM6 * GHZ_TO_RAD_US


def alpha_rad_us(n: int) -> float:
    scale = (n_star(n) / n_star(ALPHA_ANCHOR_N)) ** 7
    return ALPHA_ANCHOR_MHZ * scale * MHZ_TO_RAD_US


def main() -> None:
    out = os.path.join(os.path.dirname(__file__), "..", "data", "rb87_ns.csv")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as f:
        f.write("n,c6_rad_us_um6,alpha_rad_us_per_Vcm2\n")
        for n in range(50, 111):
            f.write(f"{n},{c6_rad_us_um6(n):.10g},{alpha_rad_us(n):.10g}\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
