r"""
Ten thousand harmonic photons
-----------------------------
The sector (0|r) of second-harmonic generation starts from r harmonic photons
and has dimension r + 1.  Its squared off-diagonal entries grow like s^2 (r - s),
so the matrix norm at r = 10^4 is already around 10^6.  Eigenvalues are found
by bisection on Sturm counts, which gives each one inside a bracket of known
width rather than just a number.
"""
import time

import numpy as np

from qesoptics import build_tridiagonal, eigenvalues, make_sector, standard_models, sturm_count

shg = standard_models()["shg"]

#%%
# Build the sector matrix.  Exact integers are kept alongside the float form.
r = 10_000
mat = build_tridiagonal(shg, make_sector(shg, [0], [r]))
print("dim", mat.dim, "norm", mat.norm_inf)
print("largest exact square has", max(v.bit_length() for v in mat.offdiag_sq), "bits")

#%%
# Counting eigenvalues below a probe takes one pass over the recurrence.
for e in (-mat.norm_inf, 0.0, mat.norm_inf):
    print(f"eigenvalues below {e: .3e}: {sturm_count(mat, e)}")

#%%
# Bisection brackets all r + 1 eigenvalues at once.  The first call compiles
# the kernel, so time the second one.
eigenvalues(build_tridiagonal(shg, make_sector(shg, [0], [10])))
start = time.perf_counter()
spec = eigenvalues(mat)
print(f"{time.perf_counter() - start:.2f} s")

#%%
# The spectrum is symmetric about zero and has no repeated values.
lam = spec.eigenvalues
print("min gap", spec.min_gap, "certified width", spec.certified_width)
print("symmetry defect / norm", spec.symmetry_defect / mat.norm_inf)
print("lowest", lam[:3])
print("middle", lam[r // 2 - 1 : r // 2 + 2])

#%%
# Level spacing is smallest near the edges of the band.
gaps = np.diff(lam)
print("gaps at the edge", gaps[:3])
print("gaps in the middle", gaps[r // 2 - 1 : r // 2 + 1])
