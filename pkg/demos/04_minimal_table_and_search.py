#!/usr/bin/env python3
"""The table of minimal k-homogeneous sizes, and searching small groups.

Run: python demos/04_minimal_table_and_search.py
"""

from bitrades import group_from_spec, predicted_table, search_triples
from bitrades.cli import render_table

# For each odd k three families compete: the p^3 family (k prime), the
# best thin metacyclic instance, and the alternating family. The last two
# columns are published reference values.
rows = predicted_table([3, 5, 7, 9, 11])
print(render_table(rows))

# The metacyclic column scans primes p = 1 (mod q) for the first one
# admitting a thin parameter r.
for row in rows:
    if row.pq:
        print(f"k={row.k}: best pq instance {row.pq}")

# Exhaustive search over a small group: every ordered pair (a, b) of
# non-identity elements, c = (ab)^-1, kept when the three cyclic
# subgroups pairwise meet trivially.
G = group_from_spec("alt:4")
records = search_triples(G, k=3)
print(f"\n{len(records)} triples with k=3 in alt:4;"
      f" {sum(1 for r in records if r.properties['orthogonal'] == 'yes')} orthogonal,"
      f" {sum(1 for r in records if r.properties['thin'] == 'yes')} thin")
print("first record:", records[0].to_json_line())
