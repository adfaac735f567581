"""Directed graphs split one paradox into four.

Sampling can follow out-arcs or in-arcs, and the attribute measured at
the sampled node can be its out-degree or its in-degree. Two of the four
pairings are guaranteed (same degree type on both sides); the two mixed
pairings can genuinely reverse.
"""

import argparse

import walkparadox as wp

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--n", type=int, default=10, help="hub-and-cycle size (default 10)")
args = parser.parse_args()

g = wp.hub_cycle(args.n)
report = wp.directed_degree_report(g)

print(f"hub-and-cycle digraph, n = {args.n}")
for key in ("out_out", "in_in", "out_in", "in_out"):
    rep = report.reports[key]
    verdict = "holds" if rep.holds else "reverses"
    print(f"  {key:<7} gap = {str(rep.exact['gap']):>9}  {verdict}")
print(f"  cross covariance (n/W) Cov(d_out, d_in) = {report.covariance_exact}")

# The mixed pairings track d_out . d_in - W^2/n. One hub with high
# out-degree feeding low in-degree nodes drives it negative.
term = wp.first_order_in_degree_term(g)
print(f"  first-order term d_out . d_in - W^2/n = {term}")
print()

# A size sweep shows why no spectral certificate can rescue the mixed
# pairings here: lambda_1 is pinned by the hub-to-cycle closure and
# stays at the golden ratio, while the mean degree W/n keeps growing.
print("  n    lambda_1    W/n     lambda_1 >= W/n?")
for n in (6, 10, 20, 40):
    h = wp.hub_cycle(n)
    rep = wp.check_spectral_directed(h, side="left")
    print(f"  {n:>3}  {rep.lhs:.6f}  {rep.rhs:.4f}  {rep.holds}")
print()

# Smallest known reversal for eigenvector centrality: three nodes,
# lambda_1 = 1.3247 (the real root of x^3 = x + 1) below mean degree 4/3.
t = wp.three_node()
left = wp.dominant_eigenpair(t, side="left")
right = wp.dominant_eigenpair(t, side="right")
print("three-node counterexample")
print(f"  arcs: {[(u, v) for u, v, _ in t.arcs()]}")
print(f"  lambda_1 = {left.eigenvalue:.10f} < 4/3")
for side, eig, mode in (("left", left, "out"), ("right", right, "in")):
    rep = wp.paradox_report(t, eig.vector, mode=mode)
    cert = wp.check_spectral_directed(t, side=side)
    print(f"  {side:>5} vector, {mode}-sampling: gap = {rep.gap:+.6f}, "
          f"spectral condition holds = {cert.holds}")
