# Lengths of quotients of the face ring.
#
# sr_colength(K, s, n) is l(S / (I + m^[s] m^n)), computed by
# inclusion-exclusion over minimal primes; each term is a colength in a
# polynomial ring with as many variables as the facets in the
# intersection share.

from srhk import conca_hk, hilbert_samuel, param_colength, path_complex, rp2, sr_colength
from srhk.lengths import intersection_profile, postulation_number

print("polynomial ring in 3 variables, s = 2:")
print("  n:", list(range(8)))
print("  l:", [param_colength(3, 2, n) for n in range(8)])

K = path_complex(5)
print("\npath on 5 vertices, profile (surviving variables, signed count):", intersection_profile(K))
s = 4
print(f"  sr_colength(s={s}, n) for n < s:", [sr_colength(K, s, n) for n in range(1, s)])
print("  closed form (r-1)(s^2+n^2+n) - (r-2)(s+n):",
      [4 * (s * s + n * n + n) - 3 * (s + n) for n in range(1, s)])

R = rp2()
print("\nRP2 Hilbert-Samuel l(R/n^n), n = 1..6:", [hilbert_samuel(R, n) for n in range(1, 7)])
print("RP2 l(R/n^[s]), s = 1..5:", [conca_hk(R, s) for s in range(1, 6)])
print("RP2 postulation number:", postulation_number(R))
