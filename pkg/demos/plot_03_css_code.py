"""
A [[8, 2, 5]] CSS code over G_{4+i}
==================================

Two negacyclic codes C2 inside C1, both generated by divisors of x^8 + 1,
give a quantum code whose Mannheim distance is the smaller of d(C1) and
d(dual C2).
"""

# %%
from gaussqc import (
    Polynomial,
    PrimeField,
    build_css,
    build_symplectic,
    check_singleton,
    correctable_count,
    divides,
    from_generator_poly,
)
from gaussqc.errors import EnumerationTooLarge

F = PrimeField("4+i")
g1 = Polynomial.parse("1+2i, -1+1i, -1i, 1", F)
g2 = Polynomial.parse("1-1i, 2-1i, -1+1i, -1i, -1i, 1", F)
M = Polynomial.x_n_minus(8, -1, F)  # x^8 + 1
print("g1 | x^8+1:", divides(g1, M), " g2 | x^8+1:", divides(g2, M), " g1 | g2:", divides(g1, g2))

# %%
# sign +1 selects the modulus x^n + 1.
C1 = from_generator_poly(g1, 8, 1)
C2 = from_generator_poly(g2, 8, 1)
q = build_css(C1, C2)
print(q.label("mannheim"), " Hamming:", q.label("hamming"))
for name, comp in q.components.items():
    print(f"  {name}: d_M = {comp['mannheim']}, d_H = {comp['hamming']}")

# %%
# Errors of weight up to t = 2 (Mannheim) or t = 1 (Hamming).
print("Mannheim-correctable errors:", correctable_count(8, 5, "mannheim").count)
print("Hamming-correctable errors: ", correctable_count(8, 4, "hamming", 17).count)
print("quantum Singleton bound attained:", check_singleton(8, 2, 4, 17).attains)

# %%
# The symplectic form of the same code lives in G^16.  Its dual has 17^10
# vectors, too many to list, so only a sampled upper bound is available.
try:
    build_symplectic(C1, C2, samples=20000)
except EnumerationTooLarge as exc:
    print(f"symplectic dual: {exc.total} vectors; sampled pair weight <= {exc.bound}")
