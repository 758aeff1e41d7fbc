"""
Building A⋈X and its dual
=========================

An algebraic module X over A gives the product (a,x)(b,y) = (ab, ay + xb + xy).
The dual of A⋈X splits into an A-block and an X-block, with cross terms
linking the two.
"""

import numpy as np

from modext.constructions import bowtie, field_algebra, module_extension, self_bowtie, t_lau, theta_lau
from modext.duals import iterated_dual, product_dual_actions, product_dual_level
from modext.core import regular_bimodule
from modext.instances import matrix_upper, truncated_poly

T2, N2 = matrix_upper(2), truncated_poly(2)

# the self product T2⋈T2 has dimension 6 and is unital
p = self_bowtie(T2)
print(p.carrier.name, p.carrier.dim, "unital:", p.carrier.is_unital)

# the theta-Lau product is the special case where A acts through a character
q = theta_lau(T2, N2, [1, 0, 0])
print(q.carrier.name, q.provenance)

# T-Lau with a unital homomorphism Q -> T2
r = t_lau(field_algebra(), T2, np.array([[1], [0], [1]], dtype=object))
print(r.carrier.name, r.provenance)

# dropping the product on X gives the classical module extension
print(module_extension(p.module).warnings)

# the block formulas for the dual reproduce the directly computed dual
for n in range(4):
    direct = iterated_dual(regular_bimodule(p.carrier), n).space
    print("level", n, "blocks agree:", product_dual_actions(p, n).same_structure(direct))

# at odd levels x_s * (f, 0) lands back in the A-block of the dual
lvl = product_dual_level(bowtie(p.module), 1)
print("cross term for x_0 acting on the left:")
print(lvl.cross_left[0].astype(str))
