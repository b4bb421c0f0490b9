"""Running the identity suites and reading their reports.

Run: python3 demos/02_identities.py
"""

import json

from sixregular import suites

for sid, desc, formula in suites.suite_catalog():
    print(f"{sid:22s} {formula}")

# one shared set of tables serves every suite
reports = suites.run_all(1000, k_values=range(1, 6))
for r in reports:
    print(f"{r.suite:22s} {r.status}  checked={r.checked}  {r.elapsed:.3f}s")

# machine readable form; big numbers travel as strings
print(json.dumps(reports[0].as_dict(), indent=1)[:300])

# residuals for a single suite, e.g. the octagonal recurrence for Q2
rows = suites.residual_rows("th10ii", 30)
print("n where the right side is 1:", [n for n, e, g in rows if e == 1])
