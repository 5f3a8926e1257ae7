"""Building and validating finite commutative semigroups with zero."""
from zdgraph import (
    NotAssociative,
    direct_product,
    parse_semigroup,
    power_set_semigroup,
    serialize,
    validate,
    zn_multiplicative,
)

# Built-ins: subsets under intersection, and residues under multiplication.
p3 = power_set_semigroup(3)
z4 = zn_multiplicative(4)
print(p3, z4)
print("labels of P(3):", p3.labels)

# Elements are plain indices; labels are only for printing.
a, b = p3.index("{1,2}"), p3.index("{2,3}")
print("{1,2} * {2,3} =", p3.labels[p3.mul(a, b)])

# Products encode the pair (i, j) as i * |B| + j.
s = direct_product(p3, z4)
print(s, "zero:", s.labels[s.zero])
x, y = s.index("(∅, 1̅)"), s.index("({1,2,3}, 0̅)")
print(s.labels[x], "*", s.labels[y], "=", s.labels[s.mul(x, y)])

# Validation is eager, and errors carry the first witnessing indices.
try:
    validate([[0, 0, 0], [0, 2, 0], [0, 0, 1]], 0)
except NotAssociative as exc:
    print("rejected:", exc, "witness", exc.witness)

# The Cayley-table file format round-trips exactly.
text = serialize(z4)
print(text)
assert parse_semigroup(text) == z4
