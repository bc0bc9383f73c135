# coding: utf-8

# # Intersection homology
#
# A filtration marks singular vertices. Chains are then only allowed to touch
# the singular part in a controlled way, decided by a perversity.

from ihtools import ih, simplicial_homology
from ihtools.catalog import catalog_filtration
from ihtools.stratified import allowable_simplices, builtin_perversity, ic_basis, strata


# ## The cone on a triangle
#
# The apex (vertex 3) is the only singular point. With the zero perversity an
# edge may not touch the apex, but a triangle may.

D = catalog_filtration("disk_cone")
zero = builtin_perversity("0", 2)
print(allowable_simplices(D, zero, 1))
print(allowable_simplices(D, zero, 2))


# A triangle through the apex has boundary edges through the apex too, so
# only the sum of all three triangles survives: its boundary is the rim.

print([D.complex.support(2, v.bits) for v in ic_basis(D, zero, 2)])
print(ih(D, zero).ranks)


# ## A pinched sphere
#
# Two points of a sphere glued together. Ordinary homology sees the loop
# through the pinch; intersection homology does not.

P = catalog_filtration("pinched_torus")
m = builtin_perversity("m", 2)
print([(s.index, s.codimension) for s in strata(P)])
print("H  =", simplicial_homology(P.complex).ranks)
print("IH =", ih(P, m).ranks)


# ## The suspended torus
#
# In dimension three the two middle perversities differ at the suspension
# points, and so do the answers.

ST = catalog_filtration("susp_torus")
for kind in ("0", "m", "n", "t"):
    print(kind, ih(ST, builtin_perversity(kind, 3)).ranks)
