"""
Derivations and first cohomology
================================

Counting derivations, inner derivations and H1 for small algebras, into the
algebra itself and into its dual tower.
"""

from modext import derivation_space, iterated_dual, regular_bimodule
from modext.instances import matrix_full, matrix_upper, zero_algebra

# upper triangular 2x2 matrices: every derivation into T2 is inner
T2 = matrix_upper(2)
print(T2)
print(derivation_space(T2, regular_bimodule(T2)).summary())

# the zero-multiplication algebra: every linear map is a derivation, none non-zero is inner
for d in (1, 2, 3):
    Z = zero_algebra(d)
    print(Z.name, derivation_space(Z, regular_bimodule(Z)).h1_dim)

# M2 is separable, so H1 vanishes at every level of the dual tower
M2 = matrix_full(2)
for n in range(4):
    tower = iterated_dual(regular_bimodule(M2), n)
    print("M2 level", n, derivation_space(M2, tower.space).summary())

# the tower has period 2: levels n and n + 2 carry the same actions
T2_1 = iterated_dual(regular_bimodule(T2), 1).space
T2_3 = iterated_dual(regular_bimodule(T2), 3).space
print("T2* == T2***:", T2_1.same_structure(T2_3))
