"""
Arithmetically Gorenstein divisors on a determinantal surface
=============================================================

For Y in |mH - K_S| the h-vector of Y depends only on the h-vector of S
and on m. Below: the rational normal scroll, then a less symmetric surface.
"""

from detschemes import validate
from detschemes.gorenstein import ag_from_degree_matrix, plateau
from detschemes.hilbert import summarize

scroll = validate([[1, 1, 1, 1], [1, 1, 1, 1]])
base = summarize(scroll, 5)
print("scroll h-vector", base.h_vector.entries, "degree", base.degree)
for m in range(0, 5):
    print(m, ag_from_degree_matrix(scroll, 5, m).entries.entries)

U = validate([[2, 2, 2, 1], [3, 3, 3, 2]])
for m in (12, 13, 15):
    ag = ag_from_degree_matrix(U, 5, m)
    # rising shoulder, plateau at deg S, mirrored shoulder
    print(m, ag.entries.entries, "plateau", list(plateau(ag)))

print(ag.warnings[0])

# below the numerical bound the formula is refused
try:
    ag_from_degree_matrix(U, 5, 3)
except Exception as exc:
    print(type(exc).__name__, exc)
