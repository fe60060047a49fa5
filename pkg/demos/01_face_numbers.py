# Face numbers of a few complexes.
#
# A complex is given by its facets. The f-vector counts faces by size
# (starting with the empty face), the h-vector is the numerator of the
# Hilbert series of the face ring over (1 - t)^d.

from srhk import from_facets, minimal_primes, path_complex, rp2
from srhk.simplicial import complete_bipartite, cycle_graph, independence_complex, minimal_vertex_covers

two_edges = from_facets(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x3", "x4"]])
print("two edges      f =", two_edges.f_vector, " h =", two_edges.h_vector)
print("path on 6      f =", path_complex(6).f_vector, " h =", path_complex(6).h_vector)
print("RP2 (6 verts)  f =", rp2().f_vector, " h =", rp2().h_vector)

# Minimal primes of the Stanley-Reisner ideal are complements of facets.
print("\nminimal primes of the two-edge complex:")
for p in minimal_primes(two_edges):
    print("  (" + ", ".join(sorted(p)) + ")")

# For a graph, the independence complex has the edge ideal as its
# Stanley-Reisner ideal, so minimal primes are minimal vertex covers.
G = cycle_graph(5)
K = independence_complex(G)
print("\n5-cycle: independence complex facets", K.facet_labels())
print("        minimal vertex covers      ", sorted(sorted(c) for c in minimal_vertex_covers(G)))

B = independence_complex(complete_bipartite(3, 4))
print("\nK_{3,4}: two simplices,", B.facet_labels(), " f =", B.f_vector)
