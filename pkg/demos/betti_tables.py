"""
Graded Betti numbers of the Eagon-Northcott resolution
======================================================
"""

from detschemes import validate
from detschemes.corpus import random_matrices
from detschemes.hilbert import betti_table, regularity_closed, regularity_max

U = validate([[2, 2, 2, 1], [3, 3, 3, 2]])
table = betti_table(U)
for i, col in table.as_dict().items():
    print(i, col)
print("ranks", table.ranks())

# regularity read from the table agrees with the closed form
print(table.regularity(), regularity_closed(U), regularity_max(U))

for M in random_matrices(2, 3, 4, count=3, seed=11):
    print(M.tolist(), betti_table(M).ranks(), regularity_closed(M))
