"""Morphism complexes and their cohomology, slice by slice.

Hom(E, F) is a Z/2-graded complex of free modules.  With all variable
degrees positive each internal degree is a finite-dimensional slice, so
cohomology is exact rational linear algebra on one slice at a time.
"""
import time

from mfcat import cohomology_slice, ext_table, hom_complex
from mfcat.library import cubic_cone_brane, xy_brane

K = xy_brane()
table = ext_table(K, K, (-3, 3))
print("End(K) for K = (x, y) over xy")
for s in table:
    print(f"  degree {s.degree[0]:+d}: spaces ({s.dim_even_space}, {s.dim_odd_space})"
          f"  cohomology ({s.dim_H_even}, {s.dim_H_odd})")
print("  only degree 0 survives: End(K) is the skyscraper at the origin")

# A Koszul brane on the cone over a cubic curve: End is Q[x,y,z]/(x^3+y^3+z^3).
start = time.perf_counter()
C = cubic_cone_brane()
cubic = ext_table(C, C, (0, 5))
print("\nEnd of the cubic-cone brane, degrees 0..5:",
      [cubic[k].dim_H_even for k in range(6)], "odd:", [cubic[k].dim_H_odd for k in range(6)])
print(f"  ({time.perf_counter() - start:.2f}s)")

# The naive Euler identity on a single slice fails once w != 0: the even
# and odd pieces of a slice are linked to different neighbouring slices.
s = cohomology_slice(hom_complex(K, K), 0)
print("\nslice 0 of End(K):", s.as_dict())
print("  He - Ho == dimE - dimO ?", s.euler_identity_holds())
print("  rank-nullity form, with the ranks leaving the slice:", s.rank_nullity_holds())

# Cohomology classes come with explicit closed representatives.
rep = cohomology_slice(hom_complex(K, K), 0, representatives=True)
print("\nrepresentative of the degree-0 class:", rep.even_representatives[0].to_dict())
