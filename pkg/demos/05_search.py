"""Scanning families of semigroups for counter-examples."""
import logging

from zdgraph import Caps, power_set_semigroup, zn_multiplicative
from zdgraph.selectors import product_family
from zdgraph.verifier import check_conjecture_1, check_conjecture_2, scan

logging.basicConfig(level=logging.WARNING)

for outcome in scan("powerset:1..3 x zn:2..8"):
    r = outcome.report
    print(f"{outcome.selector:22s} |V|={r.vertex_count:3d} omega={r.clique_number} "
          f"complemented={r.complemented!s:5s} "
          f"C1={check_conjecture_1(r).status:14s} C2={check_conjecture_2(r).status}")

# User-supplied semigroups can be combined the same way; members over a cap
# are skipped with a warning instead of aborting the scan.
left = [power_set_semigroup(2), power_set_semigroup(3)]
right = [zn_multiplicative(9), zn_multiplicative(12)]
for outcome in scan(product_family(left, right), caps=Caps(iso=40)):
    print(outcome.selector, "skipped: " + outcome.skipped if outcome.skipped else len(outcome.witnesses))
