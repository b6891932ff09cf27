"""
Mannheim versus Hamming decoding
================================

A one-dimensional code of length 2 over G_{4+i} corrects a single error
under the Mannheim metric, where the same received word is ambiguous
under the Hamming metric.
"""

# %%
from gaussqc import PrimeField, decode_bounded, from_generator_matrix, min_distance
from gaussqc.errors import Ambiguous



def show(vec):
    return "(" + ", ".join(str(c) for c in vec) + ")"


F = PrimeField("4+i")
C = from_generator_matrix([["-1+i", "1"]], F)
for word in C.codewords():
    print(" ", show(word))

# %%
# The code has Mannheim distance 3 and Hamming distance 2.
print("d_M =", min_distance(C, "mannheim"), " d_H =", min_distance(C, "hamming"))

# %%
# Receive r = (-1+i, 0).  In the Mannheim metric the unique nearest
# codeword is (-1+i, 1), one unit step away.
r = ["-1+i", "0"]
res = decode_bounded(C, r, "mannheim", t=1)
print("Mannheim:", show(res.codeword), "error", show(res.error), "weight", res.weight)

# %%
# Under Hamming distance, (0, 0) is equally close.
try:
    decode_bounded(C, r, "hamming", t=1)
except Ambiguous as exc:
    print("Hamming: tie between", " and ".join(show(w) for w in exc.tied))
