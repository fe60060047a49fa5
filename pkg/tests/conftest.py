import random
import sys

import pytest

from srhk.catalog import ENTRIES, edge_and_triangle, triangle_with_tail, two_edges
from srhk.simplicial import (SimplicialComplex, complete_bipartite, cycle_complex, cycle_graph,
                             independence_complex, path_complex, rp2, simplex)


def random_complex(rng: random.Random, r: int) -> SimplicialComplex:
    verts = [f"v{i}" for i in range(r)]
    facets = [rng.randrange(1, 1 << r) for _ in range(rng.randint(1, 5))]
    cover = 0
    for f in facets:
        cover |= f
    facets += [1 << i for i in range(r) if not cover >> i & 1]
    return SimplicialComplex(verts, facets)


def small_corpus() -> list[tuple[str, SimplicialComplex]]:
    """Complexes on at most 6 vertices used for oracle comparisons."""
    out = [(name, e.complex) for name, e in ENTRIES.items() if e.complex.r <= 6]
    out += [(f"simplex{r}", simplex(r)) for r in range(1, 7)]
    out += [(f"circle{r}", cycle_complex(r)) for r in range(3, 7)]
    out += [(f"path{r}", path_complex(r)) for r in (2, 3, 5, 6)]
    out += [("indep-C5", independence_complex(cycle_graph(5))),
            ("indep-K23", independence_complex(complete_bipartite(2, 3)))]
    rng = random.Random(20261017)
    out += [(f"random{i}", random_complex(rng, rng.randint(3, 6))) for i in range(12)]
    return out


def brute_monomials(r: int, max_degree: int):
    """All exponent vectors in r variables of total degree <= max_degree."""
    if r == 0:
        yield ()
        return
    for first in range(max_degree + 1):
        for rest in brute_monomials(r - 1, max_degree - first):
            yield (first,) + rest


@pytest.fixture
def ex41():
    return two_edges()


@pytest.fixture
def ex42():
    return edge_and_triangle()


@pytest.fixture
def ex43():
    return triangle_with_tail()


@pytest.fixture
def rp2_complex():
    return rp2()



def pytest_terminal_summary(terminalreporter):
    # the acceptance module may be imported under more than one name
    lines = []
    for mod in list(sys.modules.values()):
        lines = getattr(mod, "ACCEPTANCE_RESULTS", None) or lines
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
