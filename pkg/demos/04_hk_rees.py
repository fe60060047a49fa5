# The Hilbert-Kunz function of the Rees algebra.
#
# For Cohen-Macaulay complexes the mode comes from the postulation
# number. Otherwise the caller supplies delta = max |a_i| and the sign of
# a_d; the catalog carries hand-computed values for its examples.

from srhk import hk_rees_at, hk_rees_polynomial, rp2
from srhk.catalog import ENTRIES
from srhk.hkrees import eto_yoshida_check

print("RP2 HK(s), s = 1..6:", [hk_rees_at(rp2(), s) for s in range(1, 7)])
print()

for name, entry in ENTRIES.items():
    rep = hk_rees_polynomial(entry.complex, entry.mode())
    verdict = eto_yoshida_check(rep)
    print(f"{name:14s} s >= {rep.s_min}:  {rep.binomial}")
    print(f"{'':14s} {rep.polynomial}")
    print(f"{'':14s} leading {verdict.leading}, c(d) e = {verdict.bound}, equal: {verdict.equal}")
