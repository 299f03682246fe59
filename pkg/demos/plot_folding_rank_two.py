"""
Unfolding a rank-two Cartan matrix into a simple graph
======================================================

The matrix [[2,-6],[-4,2]] is neither finite nor affine.  Its symmetrizer is
(2,3), and the folding construction produces a 10-vertex simple graph with
a rotation whose orbits recover the original matrix.
"""

from rigcrystal import build_folding, check_virtualization, generate, validate, verify_folding

A = validate([[2, -6], [-4, 2]])
fd = build_folding(A)
print("N =", fd.N, " c =", fd.c)
print("vertices:", fd.virtual_labels)
print("edges:", len(fd.edges))
print(verify_folding(fd, A))

###############################################################################
# Each vertex of orbit 1 sees 6 vertices of orbit 2, and vice versa 4

for v in fd.virtual_labels:
    print(v, "->", sorted(fd.virtual_cartan.neighbors(v)))

###############################################################################
# Virtualization: run the crystal operators on both sides and compare

nodes = generate(A, None, depth=5).nodes
bad = check_virtualization(fd, nodes)
print(f"{len(nodes)} elements checked, {len(bad)} disagreements")
