"""
Hilbert function of a determinantal surface
===========================================

A 2x4 degree matrix, its chains, the numerator K(z) of the Hilbert series,
and the h-vector. The ambient space is P^5, so the scheme is a surface.
"""

from detschemes import validate
from detschemes.chains import enumerate_chains, k_polynomial
from detschemes.exactpoly import difference
from detschemes.hilbert import h_vector, hilbert_function_values, summarize

U = validate([[2, 2, 2, 1], [3, 3, 3, 2]])
print(U)

# each chain contributes one summand R(-trace) to the resolution
for ch in enumerate_chains(U):
    print(ch)

K = k_polynomial(U)
print("K(z) =", K.poly)
print("chains per weight:", K.counts_by_weight)

# K(z) is divisible by (1-z)^c and the quotient is the h-polynomial
print("h-vector:", h_vector(U).entries)

info = summarize(U, 5)
print("degree", info.degree, "regularity", info.regularity, "index of regularity", info.reg_index)

values = hilbert_function_values(U, 5, 12)
print("H(t):", values)
# the second difference settles at the degree from t = reg - 1 on
print("second difference:", difference(values, 2))
