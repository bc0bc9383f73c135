# coding: utf-8

# # Witt spaces and duality
#
# Middle perversity intersection homology is symmetric when the links of the
# odd codimension strata have no middle dimensional classes.

from ihtools import duality_check, witt_check
from ihtools.catalog import catalog_filtration
from ihtools.stratified import strata, stratum_link


# ## Links of the suspension points
#
# Each suspension point of a suspended surface has that surface as its link.

ST = catalog_filtration("susp_torus")
apexes = next(s for s in strata(ST) if s.index == 0)
L = stratum_link(ST, apexes, 0)
print(apexes.codimension, L.complex.f_vector())


# ## The check itself

for name in ("susp_sphere2", "susp_torus", "susp_rp2", "pinched_torus"):
    w = witt_check(catalog_filtration(name))
    ranks = [e.link_rank for e in w.entries]
    print(f"{name:14s} witt={w.is_witt}  link ranks={ranks}")


# ## Duality
#
# On the suspended sphere both middle perversities agree and the ranks read
# the same forwards and backwards. On the suspended torus they do not.

for name in ("susp_sphere2", "susp_torus"):
    d = duality_check(catalog_filtration(name))
    print(name, d.lower_ranks, d.upper_ranks, "pass" if d.passed else "fail", d.asymmetries)
