"""Enumerating closed graphs and tallying their classifications.

Streams every connected closed graph on n vertices (facet chains with
interlacing endpoint runs), tallies the property profile, and shows the
deterministic random generator.

Run:  python3 demos/enumeration_catalog.py
"""

from collections import Counter

from edgeideals import (
    classify_facets,
    enumerate_closed_connected,
    enumerate_closed_indecomposable,
    random_closed,
)

print("counts of connected / indecomposable closed graphs by vertex count")
print(f"{'n':>3} {'connected':>10} {'indecomposable':>15}")
for n in range(2, 9):
    c = sum(1 for _ in enumerate_closed_connected(n))
    i = sum(1 for _ in enumerate_closed_indecomposable(n))
    print(f"{n:>3} {c:>10} {i:>15}")

print()
print("property profile of all connected closed graphs on 7 vertices")
tally = Counter()
for F in enumerate_closed_connected(7):
    c = classify_facets(F)
    tally[(c.cm, c.scm, c.almost_cm)] += 1
print(f"{'cm':>6} {'scm':>6} {'almost':>7} {'count':>7}")
for (cm, scm, acm), k in sorted(tally.items(), reverse=True):
    print(f"{str(cm):>6} {str(scm):>6} {str(acm):>7} {k:>7}")

print()
print("deterministic pseudorandom chains (splitmix64; same on every platform)")
for seed in range(4):
    for bias in (0.2, 0.8):
        F = random_closed(10, seed, density_bias=bias)
        print(f"  seed={seed} bias={bias}: {F.facets}")
