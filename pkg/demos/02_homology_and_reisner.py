# Homology over different fields and Reisner's criterion.
#
# Betti numbers come from the integer Smith normal form of the boundary
# maps, so one computation serves every characteristic. The six-vertex
# real projective plane has 2-torsion in H_1, which is exactly what makes
# its face ring Cohen-Macaulay in every characteristic except 2.

from srhk import is_cohen_macaulay, rp2
from srhk.homology import boundary_matrix, link, reduced_betti_numbers, smith_normal_form, torsion_primes
from srhk.simplicial import cycle_complex

K = rp2()
for p in (0, 2, 3):
    print(f"char {p}: reduced Betti numbers {reduced_betti_numbers(K, p)}")
print("last invariant factors of the triangle-to-edge map:",
      smith_normal_form(boundary_matrix(K, 2)).factors[-3:])
print("torsion primes:", torsion_primes(K))

# Reisner: every link must have homology only in its top degree.
print("\nlink of vertex a:", link(K, ["a"]).facet_labels())
for p in (0, 2, 3, 5):
    print(f"RP2 Cohen-Macaulay in char {p}: {is_cohen_macaulay(K, p)}")

square = cycle_complex(4)
print("\nsquare (boundary of 4-gon) CM:", is_cohen_macaulay(square))
