"""Mod-3 progressions for b6, and the two-squares view of them.

Run: python3 demos/03_congruences.py
"""

from sixregular import congruences as C
from sixregular import kernels as K

# a single prime whose class mod 4 is 3: every j not divisible by p
spec = C.PrimeFamilySpec((7,), 1)
print("first terms:", [C.m_n(spec, n) for n in range(5)])
rep = C.verify_family(spec, 100_000)
print(rep.status, rep.checked, rep.coverage_note)

# two primes
rep = C.verify_family(C.PrimeFamilySpec((5, 7), 3), 100_000)
print("(5, 7), j=3:", rep.status, rep.checked)

# a prime class no theorem covers: refused unless exploratory, then report-only
try:
    C.PrimeFamilySpec((5,), 1)
except ValueError as e:
    print("refused:", e)
rep = C.verify_family(C.PrimeFamilySpec((5,), 1, exploratory=True), 100_000)
print("exploratory p=5:", rep.status, len(rep.violations), "nonzero residues")

for p in C.COVERED_P24:
    r = C.verify_corollary_p24(p, 100_000)
    print(f"p={p:2d} alpha_p={C.alpha_p(p):2d} {r.status} ({r.checked} arguments)")

# b6(m) mod 3 vanishes when 24m+5 has no representation a^2+(2b)^2 of the right shape
b6 = K.b6_table(60)
for m in range(0, 30):
    w = C.two_squares_witness(m)
    print(m, b6(m) % 3, w)
print(C.two_squares_agreement(2000, K.b6_table(2000).values)["status"])
