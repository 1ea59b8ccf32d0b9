"""Two dictionaries: bigraded labels on the punctured cone, and Rees degenerations.

Over R[p, 1/p] with deg x_i = (1, 0) and deg p = (-N, 2), the free module
of degree (a, b) is isomorphic to the one of degree (a - N, b + 2), so
every label has a unique representative with b in {0, 1}.
"""
from mfcat import BigradedLabel, ReesChart, make_mf, polynomial_ring, rees_degenerate, segal_canonicalize
from mfcat.segal import hom_table

for a, b in [(5, 4), (-1, -3), (2, 1)]:
    print(f"({a}, {b}) -> {segal_canonicalize(BigradedLabel(a, b, 3))}")

print("\nhom dimensions for N = 3 (rows source (a, b), columns target):")
table = hom_table(3, [0, 1, 2])
labels = [(a, b) for a in range(3) for b in (0, 1)]
print("        " + " ".join(f"{str(t):>7s}" for t in labels))
for s in labels:
    print(f"{str(s):>7s} " + " ".join(f"{table[s + t]:7d}" for t in labels))

# Rees: rescale x -> t x, p -> t p, divide by t^2, and watch t -> 0.
S = polynomial_ring(["x", "p"], [0, 2])
W = S("p*(x + x^2)")
K = make_mf(S, W, [0], [2], [["p"]], [["x + x^2"]])
fam = rees_degenerate(W, ReesChart({"x": 1, "p": 1}, 2), K)
print("\nRees family of", W)
for t in (1, 0):
    B = fam.brane_at(t)
    print(f"  t = {t}: potential {fam.potential_at(t)}, beta {B.beta.tolist()}, valid {B.is_valid()}")
