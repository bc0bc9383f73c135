# coding: utf-8

# # Homology over GF(2)
#
# A tour of the basic objects: complexes are built from facets, every face is
# filled in, and homology ranks come from ranks of boundary matrices.

import numpy as np

from ihtools import build_complex, simplicial_homology
from ihtools.catalog import klein_bottle, rp2_6, torus7
from ihtools.complexes import barycentric_subdivision, euler_characteristic, validate_pseudomanifold


# ## A circle
#
# Three edges around a triangle. Only the maximal simplices are given.

circle = build_complex([[0, 1], [0, 2], [1, 2]])
print(circle.f_vector())
print(simplicial_homology(circle).ranks)


# The boundary matrix from edges to vertices, as a dense 0/1 array. Each
# column has exactly two ones.

d1 = circle.boundary_matrix(1).to_dense()
print(d1)
print(d1.sum(axis=0))


# ## Three closed surfaces
#
# The 7-vertex torus, the 6-vertex projective plane and a 9-vertex Klein
# bottle. Over GF(2) the torus and the Klein bottle look alike.

for name, K in [("torus", torus7()), ("RP2", rp2_6()), ("Klein", klein_bottle())]:
    report = validate_pseudomanifold(K)
    h = simplicial_homology(K)
    print(f"{name:6s} f={K.f_vector()}  kind={report.kind}  H={h.ranks}  chi={euler_characteristic(K)}")


# ## Generators
#
# Asking for generators returns one cycle per rank, expressed as chains on
# the edges of the complex.

h = simplicial_homology(torus7(), generators=True)
for g in h.generators[1]:
    print(torus7().support(1, g.bits))


# ## Subdivision does not change anything
#
# Barycentric subdivision multiplies the number of triangles by six but keeps
# the ranks.

T2, origin = barycentric_subdivision(torus7())
print(T2.f_vector(), simplicial_homology(T2).ranks)
print(np.array(T2.f_vector()) / np.array(torus7().f_vector()))
