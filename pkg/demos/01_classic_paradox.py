# The classic observation: pick a random person, then a random friend of
# a random person. The friend has more friends on average. This script
# measures that gap exactly on a small graph and on random samples.

from fractions import Fraction

import walkparadox as wp

g = wp.figure1()
rep = wp.classic_friendship_paradox(g)

print("eight-node illustration graph")
print(f"  average degree over nodes:      {rep.exact['node_average']} = {rep.node_average}")
print(f"  average degree over neighbours: {rep.exact['neighbour_average']} = {rep.neighbour_average}")
print(f"  gap: {rep.exact['gap']} (paradox {'holds' if rep.holds else 'fails'})")
print()

# The gap is a variance in disguise: Var(d) / mean(d), so it can never
# be negative, and it is zero exactly when every degree is equal.
d = [int(v) for v in wp.degree_vector(g).values]
mean = Fraction(sum(d), len(d))
var = sum((Fraction(v) - mean) ** 2 for v in d) / len(d)
print(f"  Var(d)/mean(d) = {var / mean}  (same number, different route)")
print()

print("random graphs, 50 nodes")
for seed in range(4):
    sample, _ = wp.make_connected(wp.FamilySpec("erdos_renyi", n=50, p=0.1, seed=seed))
    r = wp.classic_friendship_paradox(sample)
    print(f"  seed {seed}: node avg {r.node_average:.4f}  neighbour avg {r.neighbour_average:.4f}  gap {r.gap:.4f}")
print()

ring = wp.cycle(30)
r = wp.classic_friendship_paradox(ring)
print(f"30-cycle (everyone has 2 friends): gap = {r.exact['gap']}, equality = {r.equality}")
