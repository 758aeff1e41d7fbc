"""
Checking the weak amenability characterisations
===============================================

Each characterisation is decided by exact linear algebra and compared with
a direct computation of H1 of the product into the relevant dual.
"""

from modext.constructions import field_algebra
from modext.instances import generate_corpus, matrix_full, matrix_upper, zero_algebra
from modext.theorems import check_cor_directsum, check_cor_selfbowtie, check_dgg_necessity, check_theorem

# the four conditions for every module in the default corpus
corpus = generate_corpus(0)
for parity in ("odd", "even"):
    reports = [check_theorem(m, 0, parity) for m in corpus]
    print(parity, "consistent:", sum(r.iff_consistent for r in reports), "of", len(reports))

rep = check_theorem(corpus[1], 0, "odd")
print(rep.instance)
for c in rep.conditions:
    print(f"  {c.holds!s:5}  {c.name}")
print("  H1 =", rep.direct_h1)

# A⋈A is weakly amenable exactly when A is
for A in (matrix_full(2), zero_algebra(2), field_algebra()):
    r = check_cor_selfbowtie(A, 0, "odd")
    print(A.name, "conditions:", r.conditions_hold, "H1:", r.direct_h1)

# direct sums need both summands to be weakly amenable
r = check_cor_directsum(matrix_upper(2), zero_algebra(1), 0, "odd")
print(r.instance, r.conditions_hold, r.direct_h1)

# a weakly amenable algebra is spanned by its products
print(all(check_dgg_necessity(A) for A in (matrix_full(2), zero_algebra(2), matrix_upper(2))))
