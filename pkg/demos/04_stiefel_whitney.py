# coding: utf-8

# # Stiefel-Whitney classes of triangulated surfaces
#
# On a closed triangulated manifold the sum of all i-simplices of the
# barycentric subdivision is a mod 2 cycle. Whether it bounds says something
# about orientability and about bounding a manifold.

from ihtools.catalog import catalog_filtration, klein_bottle, rp2_6, torus7
from ihtools.characteristic import bordism_shadow_report, fundamental_class, sw_homology_classes


# ## The fundamental class

f = fundamental_class(rp2_6())
print(f.chain.weight, f.is_cycle)


# ## Classes in each degree
#
# "boundary" means the class is zero in homology.

for name, K in [("torus", torus7()), ("RP2", rp2_6()), ("Klein", klein_bottle())]:
    s = sw_homology_classes(K)
    states = ["boundary" if v else "nonzero" for v in s.vanishing]
    print(f"{name:6s} {states}")


# ## Can it bound?
#
# The projective plane has odd Euler characteristic, so it is not the
# boundary of any compact manifold. The Klein bottle has a nonzero class in
# degree one but all its numbers vanish, and indeed it bounds.

for name, K in [("torus", torus7()), ("RP2", rp2_6()), ("Klein", klein_bottle())]:
    r = bordism_shadow_report(K)
    print(f"{name:6s} top number {r.top_number}: {r.verdict}")


# ## Away from manifolds
#
# At a suspension point over RP2 the link has odd Euler characteristic and
# the degree one chain is no longer a cycle.

print(sw_homology_classes(catalog_filtration("susp_rp2").complex).non_cycles)
