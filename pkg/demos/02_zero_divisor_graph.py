"""The zero-divisor graph and its neighborhoods."""
from zdgraph import build_graph, neighborhood, power_set_semigroup, to_dot, zn_multiplicative
from zdgraph.paper_check import counterexample

s = counterexample()
g = build_graph(s)
print(g)

# Three elements of S are not zero-divisors (or are zero).
missing = [s.labels[i] for i in range(s.order) if i not in g]
print("not vertices:", missing)

v = g.vertex("({1,2,3}, 0̅)")
print("N(({1,2,3}, 0̅)) =", sorted(g.label_of(w) for w in neighborhood(g, v).members))

# A nilpotent with no other annihilator is an isolated vertex: 2̅ in Z_4.
gz = build_graph(zn_multiplicative(4))
print("G(Z4) vertices:", gz.labels, "edges:", gz.edge_count)

# DOT for graphviz: `python 02_zero_divisor_graph.py > g.dot; dot -Tpng -O g.dot`
print(to_dot(build_graph(power_set_semigroup(3))))
