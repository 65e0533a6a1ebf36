"""
Transforming a Gaussian
=======================

A Gaussian stays Gaussian under every offset linear canonical transform, so
it is the natural yardstick for the numerical paths.  This script compares
the chirp-FFT path, the direct quadrature and the closed form.
"""
import time

import numpy as np

from olctkit import OLCTParams, olct_2d_direct, olct_2d_fft
from olctkit.gaussian import GaussianSpec, closed_on_grid, default_grid, gaussian_field

# %%
# Parameters per axis are (a, b, c, d, tau, eta) with ad - bc = 1.
M1 = OLCTParams(1.0, 1.5, 0.0, 1.0, 0.3, -0.2)
M2 = OLCTParams(0.0, 0.8, -1.25, 0.0, -0.1, 0.4)

g = GaussianSpec(1.0, 1.5)           # exp(-t1^2 - 1.5 t2^2)
f = gaussian_field(g, default_grid(g, 256))
print(f.grid)

# %%
# The FFT path picks its own spectral lattice, with step |b| 2 pi / (n h).
F = olct_2d_fft(f, M1, M2)
exact = closed_on_grid(g, M1, M2, F.grid)
direct = olct_2d_direct(f, M1, M2, F.grid)


def rel(x, y):
    return np.abs(x - y).max() / np.abs(y).max()


print(f"fft vs closed form    {rel(F.values, exact.values):.2e}")
print(f"direct vs closed form {rel(direct.values, exact.values):.2e}")

# %%
# Timing.  The direct sum here is the factored K1 @ f @ K2.T form; the
# nodewise O(n^4) sum is what the acceptance suite benchmarks.
for name, fn in (("fft", lambda: olct_2d_fft(f, M1, M2)),
                 ("direct", lambda: olct_2d_direct(f, M1, M2, F.grid))):
    t0 = time.perf_counter()
    for _ in range(5):
        fn()
    print(f"{name:>6}: {(time.perf_counter() - t0) / 5 * 1e3:.1f} ms")

# %%
# The modulus is a Gaussian centred at (tau1, tau2).
peak = np.unravel_index(np.abs(F.values).argmax(), F.grid.shape)
u1, u2 = F.grid.mesh()
print("peak near", u1[peak], u2[peak])
