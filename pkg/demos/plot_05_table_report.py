"""
Rebuilding the comparison table
===============================

The reference table lists h1 and g2 for each code without saying which
code each polynomial generates.  The report rebuilds every row under
several readings and says which, if any, reproduces the claimed
parameters.
"""

# %%
from gaussqc.table import INTERPRETATIONS, reproduce_table

for key, text in INTERPRETATIONS.items():
    print(key, ":", text)

# %%
# Readings a and b only.  Add "c" and "d" with interpretation="all" (slower).
for row in reproduce_table("both"):
    print(f"{row['pi']:>5} n={row['n']:<2} HM {row['claimed_hm']:<12} MM {row['claimed_mm']:<13} {row['status']}")
    for note in row["notes"]:
        print("        note:", note)
