"""The combinatorial maps, one weight at a time.

Run: python3 demos/04_bijections.py
"""

from sixregular import bijections as B
from sixregular import enumerator as E

# Franklin: fixed exactly on the pentagonal staircases
for lam, img in B.orbit_table("franklin", 7):
    print(tuple(lam), "->", tuple(img), "(fixed)" if lam == img else "")

# Glaisher: odd parts to distinct parts
for lam, img in B.orbit_table("glaisher", 6):
    print(tuple(lam), "->", tuple(img))

# phi flips the parity of the length on B'_6(n); what is left over is Q2-sized
n = 12
pairs = B.orbit_table("phi", n)
print(f"B'_6({n}) has {len(pairs)} elements, all paired off")
b6 = E.count(n, E.NAMED["b6"])
q2 = E.count(n, E.NAMED["q2"])
print(f"b6({n}) - |B'_6({n})| = {b6 - len(pairs)} = Q2({n}) = {q2}")

# psi lands on Q2 one-to-one
for lam, img in B.orbit_table("psi", 12):
    print(tuple(lam), "->", tuple(img))

# the pair/triple census behind the octagonal recurrence
rep = B.three_split_involution_census(21)
print(rep.status, rep.signed_count, rep.expected)
for k, v in rep.checks.items():
    print(f"  {k}: {v}")
