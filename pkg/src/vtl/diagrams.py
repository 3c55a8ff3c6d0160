"""Planar-free matching diagrams on n top and n bottom points.

Endpoints are labelled T1..Tn across the top and B1..Bn across the bottom.
Internally endpoint k is an integer: 0..n-1 for T1..Tn, n..2n-1 for B1..Bn.
A diagram is a perfect matching of the 2n endpoints; virtual crossings make
every matching admissible, not just the planar ones.

The product x * y stacks x above y: x's bottom row is glued to y's top row,
the composite matching is read off the glued picture, and closed loops in the
middle layer are counted and returned separately.
"""

from __future__ import annotations

import random
from functools import total_ordering

from .errors import StrandMismatchError

Pair = tuple[int, int]


def _canonical(pairs) -> tuple[Pair, ...]:
    fixed = tuple(sorted((min(p, q), max(p, q)) for p, q in pairs))
    return fixed


@total_ordering
class Matching:
    __slots__ = ("n", "pairs")

    def __init__(self, n: int, pairs):
        if n < 1:
            raise ValueError("need at least one strand")
        pairs = _canonical(pairs)
        seen = [False] * (2 * n)
        for p, q in pairs:
            for e in (p, q):
                if not 0 <= e < 2 * n:
                    raise ValueError(f"endpoint {e} out of range for n={n}")
                if seen[e]:
                    raise ValueError(f"endpoint {endpoint_label(e, n)} used twice")
                seen[e] = True
        if len(pairs) != n:
            raise ValueError(f"expected {n} pairs, got {len(pairs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", pairs)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Matching is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n == other.n and self.pairs == other.pairs

    def __lt__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return (self.n, self.pairs) < (other.n, other.pairs)

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __repr__(self) -> str:
        body = ", ".join(
            f"({endpoint_label(p, self.n)},{endpoint_label(q, self.n)})"
            for p, q in self.pairs
        )
        return f"Matching(n={self.n}: {body})"

    def partner(self, endpoint: int) -> int:
        for p, q in self.pairs:
            if p == endpoint:
                return q
            if q == endpoint:
                return p
        raise ValueError(f"endpoint {endpoint} not present")

    def to_obj(self) -> list[list[str]]:
        return [
            [endpoint_label(p, self.n), endpoint_label(q, self.n)]
            for p, q in self.pairs
        ]


def endpoint_label(k: int, n: int) -> str:
    return f"T{k + 1}" if k < n else f"B{k - n + 1}"


def parse_endpoint(label: str, n: int) -> int:
    row, idx = label[0], int(label[1:])
    if not 1 <= idx <= n or row not in "TB":
        raise ValueError(f"bad endpoint label {label!r} for n={n}")
    return idx - 1 if row == "T" else n + idx - 1


def matching_from_labels(n: int, pairs) -> Matching:
    return Matching(n, [(parse_endpoint(p, n), parse_endpoint(q, n)) for p, q in pairs])


def identity_diagram(n: int) -> Matching:
    return Matching(n, [(i, n + i) for i in range(n)])


def e_diagram(i: int, n: int) -> Matching:
    """Cup-cap diagram: T_i-T_{i+1} and B_i-B_{i+1} joined, rest through."""
    _check_site(i, n)
    pairs = [(i - 1, i), (n + i - 1, n + i)]
    pairs += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
    return Matching(n, pairs)


def v_diagram(i: int, n: int) -> Matching:
    """Virtual crossing: strands i and i+1 swapped, rest through."""
    _check_site(i, n)
    pairs = [(i - 1, n + i), (i, n + i - 1)]
    pairs += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
    return Matching(n, pairs)


def permutation_diagram(n: int, image: list[int]) -> Matching:
    """Diagram wiring top j to bottom image[j] (0-based one-line notation)."""
    if sorted(image) != list(range(n)):
        raise ValueError("not a permutation")
    return Matching(n, [(j, n + image[j]) for j in range(n)])


def _check_site(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"site index {i} out of range for n={n}")


def compose(upper: Matching, lower: Matching) -> tuple[Matching, int]:
    """Stack `upper` above `lower`; return the glued matching and loop count.

    Nodes of the glued picture: upper tops (the new tops), a middle layer
    where upper bottoms meet lower tops, and lower bottoms (the new bottoms).
    Every middle node has exactly one edge from each layer, so paths from a
    boundary endpoint alternate layers until they exit at another boundary
    endpoint; middle components never reaching the boundary are closed loops.
    """
    if upper.n != lower.n:
        raise StrandMismatchError(f"cannot compose n={upper.n} with n={lower.n}")
    n = upper.n

    # Glued-picture node encoding: 0..n-1 new tops, n..2n-1 middle (upper
    # bottoms = lower tops), 2n..3n-1 new bottoms.  Upper endpoints keep
    # their indices; lower endpoints shift by n.
    up_nbr: dict[int, int] = {}
    low_nbr: dict[int, int] = {}
    for p, q in upper.pairs:
        up_nbr[p] = q
        up_nbr[q] = p
    for p, q in lower.pairs:
        low_nbr[p + n] = q + n
        low_nbr[q + n] = p + n

    def is_middle(node: int) -> bool:
        return n <= node < 2 * n

    visited: set[int] = set()
    new_pairs: list[Pair] = []
    starts = list(range(n)) + list(range(2 * n, 3 * n))
    for start in starts:
        if start in visited:
            continue
        visited.add(start)
        node = start
        layer_up = start < n  # leave a new top through the upper layer
        while True:
            node = up_nbr[node] if layer_up else low_nbr[node]
            visited.add(node)
            if not is_middle(node):
                break
            layer_up = not layer_up
        end = node
        a = start if start < n else n + (start - 2 * n)
        b = end if end < n else n + (end - 2 * n)
        new_pairs.append((a, b))

    loops = 0
    for m in range(n, 2 * n):
        if m in visited:
            continue
        loops += 1
        node, layer_up = m, True
        while True:
            visited.add(node)
            node = up_nbr[node] if layer_up else low_nbr[node]
            layer_up = not layer_up
            if node == m and layer_up:
                break
    return Matching(n, new_pairs), loops


def closure_loops(m: Matching) -> int:
    """Loops of the Markov closure, where T_i is joined back to B_i."""
    n = m.n
    parent = list(range(2 * n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for p, q in m.pairs:
        union(p, q)
    for i in range(n):
        union(i, n + i)
    return len({find(k) for k in range(2 * n)})


def random_matching(n: int, rng: random.Random) -> Matching:
    points = list(range(2 * n))
    rng.shuffle(points)
    return Matching(n, list(zip(points[0::2], points[1::2])))
