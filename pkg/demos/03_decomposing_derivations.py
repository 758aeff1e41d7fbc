"""
Splitting a derivation into blocks
==================================

A derivation D on A⋈X into a dual level is a 2x2 block matrix
(D_A, T_A; D_X, T_X).  Each block satisfies its own identities, and an
inner D comes with a witness pair that produces every block at once.
"""

from modext import assemble, decompose, decompose_unital, derivation_space, find_certificate
from modext.constructions import self_bowtie
from modext.duals import product_dual_level
from modext.instances import matrix_upper, zero_algebra

p = self_bowtie(matrix_upper(2))
for k in (0, 1):
    space = derivation_space(p.carrier, product_dual_level(p, k).module)
    print(f"level {k}:", space.summary())
    for D in space.basis:
        blocks = decompose(p, D, k)
        assert (assemble(blocks) == D).all()
        cert = find_certificate(blocks)
        print("  inner with witnesses", [str(v) for v in cert.witness_a], [str(v) for v in cert.witness_x], cert.identities)

# X = T2 has an identity, so (D_A, T_X) already determine D
D = derivation_space(p.carrier, product_dual_level(p, 1).module).basis[0]
print(decompose_unital(p, D, 1).conditions)

# over the zero algebra most derivations are not inner; the proof is a vector
# y with y M = 0 and y b != 0 for the innerness system M w = b
z = self_bowtie(zero_algebra(1))
D = derivation_space(z.carrier, product_dual_level(z, 1).module).basis[0]
res = find_certificate(decompose(z, D, 1))
print("inner:", bool(res), "proof:", [str(v) for v in res.witness])
