r"""
A second-harmonic sector by hand
--------------------------------
Second-harmonic generation converts two photons of frequency 1/2 into one
photon of frequency 1.  In the monomial picture a state x^i y^j has i
fundamental photons and j harmonic photons, and the interaction H1 moves two
x quanta into one y quantum and back.  This walk-through builds one invariant
sector and diagonalizes H = H0 + g H1 inside it.
"""
from qesoptics import (
    build_tridiagonal,
    canonicalize,
    full_spectrum,
    monomial,
    quantum_numbers,
    sector_basis,
    validate,
)

model = validate({"nu": ["1/2"], "mu": ["1"], "n": [2], "m": [1], "g": 1})
print(model)

#%%
# Start from four fundamental photons.  Their free energy is 4 * 1/2 = 2 and
# there is nothing to label with alpha or beta because each side has a single
# mode.  Canonicalizing picks the member with the fewest x quanta.
seed = monomial([4], [0])
print(quantum_numbers(model, seed))
sector = canonicalize(model, seed)
print(sector)

#%%
# The sector holds r + 1 = 3 monomials, all with the same energy.
for state in sector_basis(model, sector):
    print(state, quantum_numbers(model, state).e0)

#%%
# In the orthonormal Fock basis H1 restricted to the sector is tridiagonal
# with zero diagonal.  The squared off-diagonal entries are exact integers.
mat = build_tridiagonal(model, sector)
print(mat.offdiag_sq)
print(mat.dense())

#%%
# Its characteristic polynomial is E^3 - 16 E, so lambda is -4, 0 or 4 and the
# total energies are 2 + lambda.
result = full_spectrum(model, sector)
for total, lam in result:
    print(f"lambda = {lam: .12f}   E = {total: .12f}")
print("certified width", result.spectrum.certified_width)
