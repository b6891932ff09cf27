"""
Correcting qudit errors with a CSS code
=======================================

A full state-vector simulation at p = 5 with four qudits, then the
classical syndrome steps for the length-8 code, which is too large for a
state vector.
"""

# %%
import numpy as np

from gaussqc import (
    LinearCode,
    Polynomial,
    PrimeField,
    from_generator_poly,
    hadamard_matrix,
    run_css_protocol,
)

F5 = PrimeField("2+i")
print(np.round(hadamard_matrix(F5) * np.sqrt(5), 3))

# %%
# C1 = repetition code (every coordinate equal), C2 = 0.  C1 has distance
# 4, so any single bit error (X by a unit) is corrected.
M = Polynomial.x_n_minus(4, 1, F5)
rep = from_generator_poly(M // Polynomial.parse("-1, 1", F5), 4, -1)
zero = LinearCode.zero(F5, 4)
x = rep.labels[0]
for e1 in (["i", "0", "0", "0"], ["0", "0", "-1", "0"]):
    state, tr = run_css_protocol(rep, zero, x, e1, ["0"] * 4)
    print(e1, "syndrome", [str(s) for s in tr.bit_syndrome], "fidelity", round(tr.fidelity, 12))

# %%
# The dual arrangement, C1 = everything and C2 = even-weight code, corrects
# a single phase error instead.  After a Hadamard layer the phase error
# becomes a shift that the dual of C2 detects.
even = from_generator_poly(Polynomial.parse("-1, 1", F5), 4, -1)
_, tr = run_css_protocol(LinearCode.full(F5, 4), even, [1, 0, 0, 0], ["0"] * 4, ["0", "-i", "0", "0"])
print("phase error recovered:", [str(v) for v in tr.recovered_e2], "fidelity", round(tr.fidelity, 12))

# %%
# At length 8 over G_{4+i} the state has 17^8 amplitudes.  The classical
# part of the protocol still runs: X(1) on qudits 3 and 4 is found from
# its syndrome with t = 2.
F = PrimeField("4+i")
C1 = from_generator_poly(Polynomial.parse("1+2i, -1+1i, -1i, 1", F), 8, 1)
C2 = from_generator_poly(Polynomial.parse("1-1i, 2-1i, -1+1i, -1i, -1i, 1", F), 8, 1)
e1 = ["0", "0", "0", "1", "1", "0", "0", "0"]
_, tr = run_css_protocol(C1, C2, C2.encode([1, 0, 0]), e1, ["0"] * 8, mode="syndrome-only")
print("recovered e1:", [str(v) for v in tr.recovered_e1], "corrected:", tr.corrected)
