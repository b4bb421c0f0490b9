"""Scanning the truncated-sum inequalities and measuring where they turn strict.

Run: python3 demos/05_inequalities.py
"""

from sixregular import inequalities as I
from sixregular.suites import TableSet

T = TableSet(2000)

r = I.scan("cor81", 1, 2000, tables=T)
print(r.label, r.status, "strict from", r.first_strict_n, "claimed", r.claimed)

# the double inequality is tight at n = 7
print("slack at 0..10:", I.values("c8-1-2", None, 10, tables=T))

results = I.scan_matrix(I.CONJECTURE_IDS, 6, 2000, T)
for r in results:
    flag = "" if r.sharpness_match in (True, None) else "  <- threshold differs from the printed one"
    print(f"{r.label:24s} {r.status:18s} first strict {r.first_strict_n!s:>4}  claimed {r.claimed!s:>4}{flag}")

print("exit code:", I.exit_code(results))
print("consistency problems:", I.consistency_check(6, 2000, T))
