"""Re-checking the P(3) x Z_4 counter-example.

Nine of the ten claims hold. The complementedness claim does not: every
vertex (X, 2̅) with X a nonempty proper subset has (∅, 2̅) as a common
neighbor on each of its edges, so it has no orthogonal partner. Without a
complemented graph neither conjecture's hypothesis is met.
"""
from zdgraph import analyze, build_graph, complementation_verdict, verify_paper
from zdgraph.paper_check import counterexample

result = verify_paper()
print(result.transcript())

s = counterexample()
g = build_graph(s)
a = complementation_verdict(g).uncomplemented_witness
print("first vertex without an orthogonal partner:", g.label_of(a))
for b in sorted(g.neighbors(a)):
    common = g.neighbors(a) & g.neighbors(b)
    print(f"  edge to {g.label_of(b):14s} lies on a triangle with", g.label_of(min(common)))

print()
print(analyze(s).to_text())
