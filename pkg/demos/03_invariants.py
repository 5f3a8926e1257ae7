"""Orthogonality, complementation, reduction, cliques, isomorphism."""
from zdgraph import (
    clique_number,
    complementation_verdict,
    graph_of_power_set,
    isomorphic,
    orthogonal,
    reduce,
)

# G(P(n)) is the motivating family: complemented, uniquely so, and reduced.
for n in range(2, 6):
    g = graph_of_power_set(n)
    v = complementation_verdict(g)
    cert = clique_number(g)
    r = reduce(g)
    print(f"G(P({n})): |V|={len(g):2d} complemented={v.complemented} "
          f"unique={v.uniquely_complemented} omega={cert.size} |V(G_r)|={len(r)}")

# A vertex and its set complement are orthogonal in G(P(n)).
g = graph_of_power_set(4)
a, b = 0b0011, 0b1100
print(g.label_of(a), "⊥", g.label_of(b), ":", orthogonal(g, a, b))

# Isomorphism returns an explicit bijection when one exists.
res = isomorphic(reduce(g), g)
print("G_r(P(4)) ≅ G(P(4)):", bool(res))
res = isomorphic(graph_of_power_set(3), graph_of_power_set(4))
print("G(P(3)) vs G(P(4)):", bool(res), "-", res.reason)
