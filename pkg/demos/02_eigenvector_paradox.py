"""Neighbour averages of eigenvector centrality on connected graphs."""

import walkparadox as wp

# Swapping degree for eigenvector centrality keeps the paradox one-sided:
# the neighbour average of the Perron vector never drops below the node
# average on a connected graph, because the weighted mean A x / x picks up
# the dominant eigenvalue while the plain mean cannot exceed it.


def show(name, g):
    eig = wp.dominant_eigenpair(g)
    rep = wp.paradox_report(g, eig.vector)
    flag = "equality" if rep.equality else ("holds" if rep.holds else "FAILS")
    print(f"{name:<24} lambda_1 = {eig.eigenvalue:.6f}  gap = {rep.gap:+.6f}  {flag}")
    return rep


show("illustration graph", wp.figure1())
show("path(10)", wp.path(10))
show("star, 12 leaves", wp.star_undirected(13))
show("barabasi_albert(40, 2)", wp.barabasi_albert(40, 2, seed=7))
g, _ = wp.make_connected(wp.FamilySpec("erdos_renyi", n=60, p=0.08, seed=11))
show("erdos_renyi(60, 0.08)", g)

print()
print("regular graphs sit exactly on the boundary: x is constant, both")
print("averages coincide, and the gap is pinned at zero.")
show("cycle(17)", wp.cycle(17))
show("complete(9)", wp.complete(9))
show("4-regular random, n=20", wp.k_regular_random(20, 4, seed=3))

# The same dominance can be read off without computing x at all:
# lambda_1 >= 2m/n on any graph, with equality only in the regular case.
g = wp.figure1()
eig = wp.dominant_eigenpair(g)
mean_degree = 2 * len(g.edges()) / g.n
print()
print(f"illustration graph: lambda_1 = {eig.eigenvalue:.4f} >= mean degree {mean_degree}")
