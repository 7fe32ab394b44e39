"""
One object, three views
=======================

A Dyck path, a 321-avoiding permutation and a Kupisch series are three
encodings of the same thing.  We walk the standard example through all of
them.
"""

from nakayama321 import (
    algebra_for_permutation,
    ascent_descent,
    bjs,
    bjs_inverse,
    dyck_to_kupisch,
    kupisch_to_dyck,
    parse_path,
    partial_code,
)

path = parse_path("UUUDUUUDDDUDDDUD")
print("path          ", path)

# runs of up steps and down steps
dec = ascent_descent(path)
print("ascents       ", dec.a)
print("descents      ", dec.d)

# partial sums, last entry dropped: these are the excedance data
code = partial_code(path)
print("A, D          ", code.A, code.D)

perm = bjs(path)
print("permutation   ", perm)
assert bjs_inverse(perm) == path

# the algebra side: dimensions of the indecomposable projectives
c = dyck_to_kupisch(path)
print("Kupisch series", c)
assert kupisch_to_dyck(c) == path
assert algebra_for_permutation(perm) == c
