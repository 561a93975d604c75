r"""
From photons to sl(2)
---------------------
Inside a sector every monomial can be written as a fixed prefactor times a
power zeta^t of one invariant variable.  H1 then acts on polynomials of degree
at most r in zeta, and that action can be spelled out with the three
generators J+, J0 and J- of sl(2) in their (r+1)-dimensional representation.

This script computes the reduced operator twice, once directly from the
monomial action and once from the sl(2) expression, and compares them as
exact integer matrices.
"""
from qesoptics import (
    format_terms,
    make_sector,
    reduced_direct,
    sl2_expansion,
    sl2_matrix,
    standard_models,
    valid_primes,
)

models = standard_models()

#%%
# Second harmonic, sector (0|2)
# ^^^^^^^^^^^^^^^^^^^^^^^^^^^^^
shg = models["shg"]
sector = make_sector(shg, [0], [2])
terms = sl2_expansion(shg, sector)
print("H1_red =", format_terms(terms))
direct = reduced_direct(shg, sector)
via_sl2 = sl2_matrix(terms, sector.r)
print(direct.matrix)
print("equal:", direct.same_matrix(via_sl2))

#%%
# Third harmonic
# ^^^^^^^^^^^^^^
# With three photons per conversion the lowering part carries two linear
# factors in J0.
thg = models["thg"]
sector = make_sector(thg, [0], [1])
print(format_terms(sl2_expansion(thg, sector)))

#%%
# Several admissible choices
# ^^^^^^^^^^^^^^^^^^^^^^^^^^
# When more than one mode can serve as the excluded one the product is
# assembled differently.  The dropped factor is always J0 + r/2 on the
# lowering side (J0 - r/2 on the raising side), so the choices agree up to
# the order of the factors and act identically on the sector.
general = models["general"]
sector = make_sector(general, [1, 0], [4])
direct = reduced_direct(general, sector)
for lp, kp in valid_primes(general, sector):
    terms = sl2_expansion(general, sector, lp, kp)
    same = sl2_matrix(terms, sector.r).same_matrix(direct)
    print((lp, kp), format_terms(terms), same)
