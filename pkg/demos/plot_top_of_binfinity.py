"""
The top of B(infinity) in type A2
=================================

Generate the first few levels of the rigged-configuration model of
B(infinity) and print each node the way it is usually drawn: one row per
string, ``length : rigging (vacancy)``.
"""

from rigcrystal import export_dot, generate, named

A = named("A2")
g = generate(A, None, depth=3)
print(f"{len(g.nodes)} nodes, {len(g.edges)} edges")

# the nodes come out in breadth-first order, children in label order
for k, rc in enumerate(g.nodes):
    print(f"--- node {k} (depth {rc.depth})")
    print(rc.to_text())

###############################################################################
# Every arrow is an application of f_1 or f_2

for src, dst, a in g.edges:
    print(f"{src} -f_{a}-> {dst}")

# graphviz source, e.g. for `dot -Tpng`
with open("binfinity_a2.dot", "w") as fh:
    fh.write(export_dot(g))
