"""
The residue field G_pi
======================

Gaussian integers modulo a Gaussian prime pi form a field with N(pi) = p
elements.  Each class has one canonical representative, obtained by
subtracting the rounded quotient times pi.
"""

# %%
# Build G_{4+i}.  Residues are listed in label order: label g is the
# reduction of the ordinary integer g.
from gaussqc import PrimeField, format_gauss

F = PrimeField("4+i")
print("p =", F.p)
for g, a in enumerate(F.residues):
    print(f"  label {g:2d}  ->  {format_gauss(a)}")

# %%
# Reduction is arithmetic in Z[i] followed by rounding.  For example
# 4 = (4+i) - i, so 4 reduces to -i.
print("reduce(4)  =", F.reduce(4))
print("reduce(-4) =", F.reduce(-4))
print("(2-i)(1+2i) =", F.mul("2-i", "1+2i"))

# %%
# Mannheim weight |Re| + |Im| groups the 16 nonzero residues in shells.
for w, labels in F.residues_by_weight().items():
    print(f"weight {w}:", ", ".join(format_gauss(F.residues[g]) for g in labels))

# %%
# A primitive pair: generators alpha1, alpha2 of the unit group whose
# (p-1)/4-th powers are i and -i.  They are chosen first in label order.
q = (F.p - 1) // 4
print("alpha1 =", F.alpha1, " alpha1^q =", F.power(F.alpha1, q))
print("alpha2 =", F.alpha2, " alpha2^q =", F.power(F.alpha2, q))
