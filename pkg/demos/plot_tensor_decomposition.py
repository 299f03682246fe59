"""
Decomposing a tensor product with riggings
==========================================

An element of RC(mu) labels a component of B(mu) x B(lambda) exactly when
its smallest rigging in each part a is at least -<h_a, lambda>.  We compare
that rule against a brute-force search for highest-weight elements.
"""

from rigcrystal import Weight, highest_weight_scan, lr_decompose, named, weyl_dimension
from rigcrystal.tensor import components_from_scan

A = named("A2")
mu = Weight.fundamental(A.labels, (1, 0))
lam = Weight.fundamental(A.labels, (1, 1))

dec = lr_decompose(A, mu, lam)
print(dec.to_table())

scan = highest_weight_scan(A, mu, lam)
print("brute force agrees:", components_from_scan(scan, lam) == dec.multiset())

###############################################################################
# Dimensions add up: 3 * 8 = 15 + 6 + 3

total = sum(weyl_dimension(A, c.weight) * c.multiplicity for c in dec.components)
print(weyl_dimension(A, mu), "*", weyl_dimension(A, lam), "=", total)

###############################################################################
# A bigger case in G2

G2 = named("G2")
dec = lr_decompose(G2, Weight.fundamental(G2.labels, (1, 0)), Weight.fundamental(G2.labels, (1, 1)))
print(dec.to_table())
