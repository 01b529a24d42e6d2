"""
Two independent enumerations of the resolution
===============================================

Chains are grown block by block; the raw enumeration reads the same
summands off column subsets and row multisets. The multisets agree.
"""

from collections import Counter

from detschemes.chains import enumerate_chains, raw_trace_weight_counts
from detschemes.corpus import random_matrices, shift_sweep

mismatches = 0
total = 0
for U in list(shift_sweep(max_l=2, max_c=3, spread=2)) + random_matrices(3, 3, 5, 50, seed=1):
    grown = Counter((ch.trace, ch.weight) for ch in enumerate_chains(U))
    mismatches += grown != raw_trace_weight_counts(U)
    total += 1
print(total, "matrices,", mismatches, "mismatches")
