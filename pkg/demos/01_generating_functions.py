"""Tables from products, recurrences and brute force, side by side.

Run: python3 demos/01_generating_functions.py
"""

from sixregular import enumerator as E
from sixregular import kernels as K
from sixregular.series import ProductSpec, build_product, pentagonal_theta, poch

# Euler's product and the pentagonal theta series are the same object
euler = build_product(ProductSpec((poch(1, 1),)), 40)
print("(q;q) nonzero terms:", euler.nonzero_terms()[:8])
print("matches theta series:", euler == pentagonal_theta(40))

# b6 three ways: the product, a pentagonal-style recurrence, a sum over p
for method in K.METHODS["b6"]:
    print(f"b6 by {method:10s}", K.b6_table(15, method).values)

# ... and by listing the partitions themselves
print("b6 by listing    ", tuple(E.count(n, E.NAMED["b6"]) for n in range(16)))

# Q2 has four routes; all give the same table
q2 = {m: K.q2_table(200, m).values for m in K.METHODS["q2"]}
print("Q2 routes agree to 200:", len(set(q2.values())) == 1)
print("Q2(0..14):", q2["product"][:15])

# The five partitions behind Q2(14) = 5
for lam in E.enumerate_partitions(14, E.NAMED["q2"]):
    print("  ", tuple(lam))

# M_k and P~_k come from truncated pentagonal sums; check against listings
print("M3(18) =", K.mk_table(3, 18)(18), [tuple(x) for x in E.list_mk(3, 18)])
print("P2(17) =", K.pk_table(2, 17)(17))
