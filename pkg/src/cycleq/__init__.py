"""Exact counting of permutation classes under two-sided rotation by a cycle.

Two permutations a and b of {1, .., n} are considered equivalent when
a = c^i * b * c^j for some integers i and j, where c is a fixed cycle
through all n points; the classes are the double cosets of the cyclic
subgroup generated by c.  This package counts the classes exactly: a
recursion over a divisor/residue digraph gives the closed-form count in
arbitrary-precision integers, and a brute-force orbit enumeration over all
of S_n serves as an independent check for small n.
"""

from cycleq.counting import (
    CountMatrix,
    MatrixColumn,
    classes_per_vertex,
    count_classes,
    count_classes_via_vertices,
    count_matrix,
)
from cycleq.divisor_graph import (
    Arc,
    DivisorGraph,
    Vertex,
    build_graph,
    count_below,
    is_vertex,
    level_count,
    level_residues,
    reachable,
    to_dot,
)
from cycleq.numtheory import distinct_prime_factors, divisors, euler_phi, gcd
from cycleq.oracle import (
    DEFAULT_ORBIT_CAP,
    OrbitReport,
    Permutation,
    brute_force_count,
    check_permutation,
    compose,
    full_cycle,
    identity,
    is_n_cycle,
    orbit,
    random_n_cycle,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CountMatrix",
    "DEFAULT_ORBIT_CAP",
    "DivisorGraph",
    "MatrixColumn",
    "OrbitReport",
    "Permutation",
    "Vertex",
    "brute_force_count",
    "build_graph",
    "check_permutation",
    "classes_per_vertex",
    "compose",
    "count_below",
    "count_classes",
    "count_classes_via_vertices",
    "count_matrix",
    "distinct_prime_factors",
    "divisors",
    "euler_phi",
    "full_cycle",
    "gcd",
    "identity",
    "is_n_cycle",
    "is_vertex",
    "level_count",
    "level_residues",
    "orbit",
    "random_n_cycle",
    "reachable",
    "to_dot",
]
