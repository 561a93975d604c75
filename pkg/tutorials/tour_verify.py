r"""
Checking everything against brute force
---------------------------------------
The closed-form sector matrices are only as trustworthy as the checks behind
them.  The oracle module applies the Hamiltonian as a differential operator to
monomials with exact rational arithmetic and knows nothing about sectors or
zeta.  This script runs those checks for a photon cascade and then shows what
a failure looks like.
"""
from fractions import Fraction

from qesoptics import (
    Model,
    brute_force_sector,
    build_operators,
    build_tridiagonal,
    commutator_check,
    make_sector,
    monomial,
    standard_models,
    verify_model,
)

cascade = standard_models()["cascade2"]

#%%
# The full report covers commutators, completeness of the sector bases, the
# sl(2) form, the similarity transform, the oracle matrix elements and the
# spectra.
report = verify_model(cascade, max_r=5, max_photons=8)
print("passed:", report.passed, "checks:", len(report.checks))

#%%
# One sector in detail: the oracle's squared elements match the closed form.
sector = make_sector(cascade, [1, 0], [3])
oracle = brute_force_sector(cascade, monomial([1, 0], [3]))
print(oracle.states)
print([str(v) for v in oracle.offdiag_sq()])
print(build_tridiagonal(cascade, sector).offdiag_sq)

#%%
# Breaking energy conservation
# ^^^^^^^^^^^^^^^^^^^^^^^^^^^^
# ``validate`` refuses such a model, so build it directly.  H0 and H1 no
# longer commute, and the check returns the first probe where they differ.
bad = Model(nu=(Fraction(1),), mu=(Fraction(1),), n=(2,), m=(1,))
ops = build_operators(bad)
res = commutator_check(ops.H0, ops.H1, [monomial([2], [0])])
print(res.ok, res.witness, res.residual)
