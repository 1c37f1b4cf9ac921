"""Exact class counts via the divisor-graph recursion.

classes_per_vertex(n, k) is the number of classes accounted to each single
level-k vertex.  Summing it over the divisors of n with multiplicity
phi(n/k) (the product row of the count matrix) gives the total number of
classes; summing it over the vertices of the built graph gives the same
number by a different route and serves as a cross-check.

Everything here is plain Python integer arithmetic.  The counts overflow
64-bit machine words long before n reaches 30, and floating point would
silently round them, so no value in this module ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from cycleq.divisor_graph import build_graph, count_below
from cycleq.numtheory import divisors, euler_phi


@cache
def classes_per_vertex(n: int, k: int) -> int:
    """Class count attached to each single vertex at level k.

    classes_per_vertex(n, 1) == 1, and for k > 1 the value is

        ((k-1)! * (n/k)**(k-1)
         - sum over proper divisors r of k of
               r * count_below(n, k, r) * classes_per_vertex(n, r)) / k

    where the division is always exact; an inexact division would mean a
    bug in this module, never a data condition, and raises ArithmeticError.
    Depends only on (n, k), never on the residue label, hence the memo key.
    Pure, so concurrent callers at worst duplicate a computation.
    """
    if n < 1 or k < 1 or n % k != 0:
        raise ValueError(f"k must divide n, got k={k}, n={n}")
    if k == 1:
        return 1
    numerator = math.factorial(k - 1) * (n // k) ** (k - 1)
    for r in divisors(k)[:-1]:
        numerator -= r * count_below(n, k, r) * classes_per_vertex(n, r)
    if numerator % k != 0:
        raise ArithmeticError(
            f"recursion numerator {numerator} is not divisible by k={k} at n={n}"
        )
    return numerator // k


@dataclass(frozen=True)
class MatrixColumn:
    """One column of the count matrix, for a single divisor of n."""

    divisor: int
    phi: int  # euler_phi(n // divisor)
    classes: int  # classes_per_vertex(n, divisor)
    product: int  # phi * classes


@dataclass(frozen=True)
class CountMatrix:
    """Four-row working table: divisors, phi row, per-vertex classes, products."""

    n: int
    columns: tuple[MatrixColumn, ...]


def count_matrix(n: int) -> CountMatrix:
    """Assemble the count matrix for n, columns ascending by divisor."""
    cols = []
    for k in divisors(n):
        phi = euler_phi(n // k)
        cls = classes_per_vertex(n, k)
        cols.append(MatrixColumn(divisor=k, phi=phi, classes=cls, product=phi * cls))
    return CountMatrix(n=n, columns=tuple(cols))


def count_classes(n: int) -> int:
    """Exact number of equivalence classes for order n.

    Sum of the product row of the count matrix.
    """
    return sum(col.product for col in count_matrix(n).columns)


def count_classes_via_vertices(n: int) -> int:
    """The same count, obtained by walking the built graph vertex by vertex.

    Sums classes_per_vertex over every vertex instead of using per-level
    multiplicities; must always agree with count_classes.
    """
    g = build_graph(n)
    return sum(classes_per_vertex(n, v.k) for v in g.vertices)
