"""
Homological statistics of one algebra
=====================================

Resolutions of uniserial modules, and the two counts that the permutation
side predicts: injective-projective modules of dimension one, and the
dimension of Ext^1(J, J).
"""

from nakayama321 import nakayama as nk
from nakayama321 import bjs, fixed_points, kupisch_to_dyck, support_size

c = nk.parse_kupisch("4,6,5,4,4,3,2,2,1")
print("injective lengths d:", c.d)

# a module is M(top, length); build a coresolution by repeated cosyzygies
m = nk.Module(1, 3)
terms = nk.injective_coresolution(c, m)
print(m, "->", " -> ".join(map(str, terms)), "  id =", nk.inj_dim(c, m))

# and a projective resolution of a simple
s = nk.simple(0)
print(s, "<-", " <- ".join(map(str, nk.projective_resolution(c, s))), "  pd =", nk.proj_dim(c, s))
print("global dimension:", nk.global_dimension(c))

# the algebra side
print("projectives of id 1:", nk.count_proj_inj_dim_one(c))
print("dim Ext^1(J, J):    ", nk.ext1_JJ_dim(c))

# the permutation side
p = bjs(kupisch_to_dyck(c))
print("fixed points of", p, ":", fixed_points(p))
print("support size:       ", support_size(p))

# the Hom route gives the same Ext number
assert nk.ext1_JJ_dim_hom(c) == nk.ext1_JJ_dim(c)
