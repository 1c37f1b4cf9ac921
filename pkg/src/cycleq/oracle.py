"""Brute-force check: enumerate all of S_n and close the orbits directly.

Permutations are tuples of images on {1, .., n}; p[i-1] is the image of i.
The closure generators are left and right composition with a fixed cycle c
through all n points, so the orbit of b is exactly {c^i * b * c^j}, and the
number of orbits is the class count that the recursion in
``cycleq.counting`` computes in closed form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from random import Random

Permutation = tuple[int, ...]

# 9! = 362880 states keeps a full enumeration at desk scale; raise per call
# via the cap argument if you have the memory for it.
DEFAULT_ORBIT_CAP = 9


def check_permutation(p: Permutation) -> None:
    """Raise ValueError unless p is a bijection of {1, .., len(p)}."""
    if len(p) < 1 or sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..n: {p!r}")


def identity(n: int) -> Permutation:
    """The identity permutation on {1, .., n}."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return tuple(range(1, n + 1))


def full_cycle(n: int) -> Permutation:
    """The cycle sending 1 to 2, .., n-1 to n, and n back to 1."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return tuple(range(2, n + 1)) + (1,)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Composition applying b first, then a: i maps to a(b(i)).

    This right-then-left convention is used consistently everywhere in the
    package.
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)} points")
    return tuple(a[i - 1] for i in b)


def is_n_cycle(p: Permutation) -> bool:
    """Whether p is a single cycle through all of its points."""
    check_permutation(p)
    length = 1
    j = p[0]
    while j != 1:
        j = p[j - 1]
        length += 1
    return length == len(p)


def random_n_cycle(n: int, rng: Random) -> Permutation:
    """A random cycle through all n points, drawn from rng."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    order = list(range(1, n + 1))
    rng.shuffle(order)
    images = [0] * n
    for i, point in enumerate(order):
        images[point - 1] = order[(i + 1) % n]
    return tuple(images)


def orbit(sigma: Permutation, start: Permutation) -> frozenset[Permutation]:
    """Closure of start under p -> sigma*p and p -> p*sigma."""
    check_permutation(sigma)
    check_permutation(start)
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for q in (compose(sigma, p), compose(p, sigma)):
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return frozenset(seen)


@dataclass(frozen=True)
class OrbitReport:
    """Class count and class sizes from one full enumeration of S_n."""

    n: int
    class_count: int
    class_sizes: tuple[int, ...]  # ascending


def brute_force_count(n: int, sigma: Permutation, *, cap: int = DEFAULT_ORBIT_CAP) -> OrbitReport:
    """Partition all n! permutations into classes and count them.

    Seeds are visited in lexicographic order and each orbit is closed
    breadth-first, but the resulting partition is the same for any order.
    Refuses n above cap (the state space is n!) and refuses a sigma that is
    not a single n-cycle, which the two-generator closure requires.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the orbit cap {cap} ({n}! states)")
    if len(sigma) != n:
        raise ValueError(f"sigma acts on {len(sigma)} points, expected {n}")
    if not is_n_cycle(sigma):
        raise ValueError("sigma must be a single cycle through all n points")
    seen: set[Permutation] = set()
    sizes: list[int] = []
    for seed in permutations(range(1, n + 1)):
        if seed in seen:
            continue
        cls = orbit(sigma, seed)
        seen |= cls
        sizes.append(len(cls))
    return OrbitReport(n=n, class_count=len(sizes), class_sizes=tuple(sorted(sizes)))
