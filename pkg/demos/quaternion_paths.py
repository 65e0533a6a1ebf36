"""
Quaternion transform three ways
===============================

The two-sided quaternion transform puts an i-kernel on the left and a
j-kernel on the right.  The plane split turns it into complex transforms;
the second half needs the j-conjugate parameters (b, c and eta negated).
"""
import numpy as np

from olctkit import OLCTParams
from olctkit.fields import Grid2D
from olctkit.qolct import (check_q_identities, check_q_inequality, inverse_qolct, qolct_direct,
                           qolct_via_ops, qolct_via_qft, quaternion_gaussian)

M1 = OLCTParams(1.0, 1.2, 0.0, 1.0, 0.3, 0.2)
M2 = OLCTParams(0.0, 0.9, -1 / 0.9, 0.0, -0.1, 0.5)
f = quaternion_gaussian(1.0, Grid2D.centered(128, 8.0), center=(0.2, -0.3))

ref = qolct_direct(f, M1, M2)
for name, F in (("ops", qolct_via_ops(f, M1, M2)), ("qft", qolct_via_qft(f, M1, M2))):
    print(name, np.abs(F.values - ref.values).max() / np.abs(ref.values).max())

# %%
print("j-conjugate of M2:", M2.j_conjugate())
back = inverse_qolct(ref, M1, M2, f.grid)
print("round trip", np.abs(back.values - f.values).max())

# %%
mod, pars = check_q_identities(f, M1, M2)
print("modulation residual", mod.lhs, "parseval residual", pars.lhs)
for t in ("young_q", "pitt_q", "logup_q", "entropy_q", "nazarov_q", "heisenberg_q"):
    r = check_q_inequality(t, f, M1, M2)
    print(f"{t:<13} margin={r.margin: .3e} satisfied={r.satisfied}")
