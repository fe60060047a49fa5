"""Exact Hilbert-Kunz functions of Rees algebras of Stanley-Reisner rings."""

from .hkrees import (HKMode, HKReport, c_constant, determine_mode, eto_yoshida_check,
                     hk_rees_at, hk_rees_polynomial)
from .homology import is_cohen_macaulay, link, reduced_betti, smith_normal_form
from .lengths import (binom, conca_hk, hilbert_samuel, hilbert_series, param_colength,
                      postulation_number, reduction_number_hoa, reduction_number_marley,
                      sr_colength)
from .polynomial import RationalPolynomial, interpolate, to_binomial_basis
from .simplicial import (Graph, SimplicialComplex, complete_bipartite, complete_bipartite_complex,
                         cycle_complex, cycle_graph, from_facets, independence_complex,
                         minimal_primes, minimal_vertex_covers, path_complex, rp2, simplex)

__version__ = "0.1.0"
