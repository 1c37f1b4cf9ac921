"""Digraph of divisor/residue pairs whose levels organize the class count.

For a fixed order n the vertices are pairs <k, l> with k a divisor of n and
l a residue label in {1, .., n} (residue 0 is written as n).  The graph is
the closure of three rules:

  1. for every m in {1, .., n} coprime to n there is a start vertex <1, m>,
     and no arc ever enters a start vertex;
  2. every vertex <k, l> has k dividing n;
  3. from <k, l>, for each prime p dividing n/k, an arc labeled p leads to
     <p*k, (p*l) mod n>.

Reachability is a partial order on the vertex set, with phi(n) minimal
vertices <1, m>, a single maximal vertex <n, n>, and exactly phi(n/k)
vertices at each level k.  A constructed graph is immutable and safe to
share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from cycleq.numtheory import distinct_prime_factors, gcd


class Vertex(NamedTuple):
    """Pair <k, l>: level k divides the order n, residue label l in 1..n."""

    k: int
    l: int


class Arc(NamedTuple):
    """Labeled arc; dst = <prime * src.k, (prime * src.l) mod n>."""

    src: Vertex
    dst: Vertex
    prime: int


@dataclass(frozen=True)
class DivisorGraph:
    """Rule closure for a fixed order n; canonical regardless of build order."""

    n: int
    vertices: frozenset[Vertex]
    arcs: frozenset[Arc]


def build_graph(n: int) -> DivisorGraph:
    """Construct the full rule closure for order n.

    Breadth-first over levels with deduplication on the (k, l) key, so the
    resulting vertex and arc sets do not depend on traversal order.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    start = [Vertex(1, m) for m in range(1, n + 1) if gcd(m, n) == 1]
    vertices: set[Vertex] = set(start)
    arcs: set[Arc] = set()
    queue = deque(start)
    while queue:
        src = queue.popleft()
        for p in distinct_prime_factors(n // src.k):
            dst = Vertex(p * src.k, (p * src.l) % n or n)
            arcs.add(Arc(src, dst, p))
            if dst not in vertices:
                vertices.add(dst)
                queue.append(dst)
    return DivisorGraph(n=n, vertices=frozenset(vertices), arcs=frozenset(arcs))


def is_vertex(n: int, k: int, l: int) -> bool:
    """Whether <k, l> is a vertex of the order-n graph.

    Total: out-of-range or malformed input returns False rather than
    raising.  For k < n this tests the defining condition directly, the
    existence of m coprime to n with m*k congruent to l mod n.
    """
    if n < 1 or k < 1 or k > n or l < 1 or l > n or n % k != 0:
        return False
    if k == n:
        return l == n
    target = l % n
    return any(m * k % n == target for m in range(1, n + 1) if gcd(m, n) == 1)


def level_residues(n: int, k: int) -> tuple[int, ...]:
    """Ascending residue labels of the level-k vertices <k, .>."""
    if n < 1 or k < 1 or n % k != 0:
        raise ValueError(f"k must divide n, got k={k}, n={n}")
    labels = {(m * k) % n or n for m in range(1, n + 1) if gcd(m, n) == 1}
    return tuple(sorted(labels))


def level_count(n: int, k: int) -> int:
    """Number of level-k vertices; equals euler_phi(n // k)."""
    return len(level_residues(n, k))


def count_below(n: int, k: int, r: int) -> int:
    """Number of level-r vertices lying strictly below <k, k>.

    A level-r vertex <r, s> reaches <k, k> iff s * (k/r) is congruent to k
    mod n: the residue coordinate multiplies by the arc's prime along every
    step, so any factorization of k/r into primes realizes a path and every
    path multiplies by k/r in total.
    """
    if n < 1 or k < 1 or n % k != 0:
        raise ValueError(f"k must divide n, got k={k}, n={n}")
    if r < 1 or k % r != 0 or r >= k:
        raise ValueError(f"r must be a proper divisor of k, got r={r}, k={k}")
    step = k // r
    target = k % n
    return sum(1 for s in level_residues(n, r) if s * step % n == target)


def reachable(g: DivisorGraph, src: Vertex, dst: Vertex, *, strict: bool = False) -> bool:
    """Whether a directed path from src to dst exists in g.

    The empty path counts, so reachable(g, v, v) is True by default; pass
    strict=True to require at least one arc (the strict partial order).
    """
    for v in (src, dst):
        if v not in g.vertices:
            raise ValueError(f"{v!r} is not a vertex of the order-{g.n} graph")
    if src == dst and not strict:
        return True
    out: dict[Vertex, list[Vertex]] = {}
    for arc in g.arcs:
        out.setdefault(arc.src, []).append(arc.dst)
    seen = {src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in out.get(v, ()):
            if w == dst:
                return True
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False


def to_dot(g: DivisorGraph) -> str:
    """Deterministic DOT text for g.

    Node ids are "k_l" with labels in angle brackets, one edge per arc
    labeled with its prime.  Vertices are emitted in (k, l) order and arcs
    in (src, prime) order, so output bytes are stable across runs.
    """
    lines = [f"digraph divisor_graph_{g.n} {{"]
    for v in sorted(g.vertices):
        lines.append(f'    "{v.k}_{v.l}" [label="⟨{v.k},{v.l}⟩"];')
    for a in sorted(g.arcs, key=lambda arc: (arc.src, arc.prime)):
        lines.append(
            f'    "{a.src.k}_{a.src.l}" -> "{a.dst.k}_{a.dst.l}" [label="{a.prime}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
