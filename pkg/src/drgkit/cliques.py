"""Maximal clique enumeration: Bron-Kerbosch with pivoting, run from a
degeneracy ordering, with an optional lower bound on clique order."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (smallest index on ties)."""
    deg = [len(a) for a in g.adjacency]
    buckets: dict[int, set[int]] = {}
    for v, d in enumerate(deg):
        buckets.setdefault(d, set()).add(v)
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        d = min(b for b, vs in buckets.items() if vs)
        v = min(buckets[d])
        buckets[d].discard(v)
        removed[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets.setdefault(deg[w], set()).add(w)
    return order


def maximal_cliques(g: Graph, min_size: int = 1) -> Iterator[tuple[int, ...]]:
    """Yield every maximal clique with at least ``min_size`` vertices, as a
    sorted tuple.  Branches that cannot reach ``min_size`` are cut."""
    nbr = g.neighbor_sets
    position = {v: i for i, v in enumerate(degeneracy_order(g))}

    def expand(r: list[int], p: set[int], x: set[int]) -> Iterator[tuple[int, ...]]:
        if not p:
            if not x and len(r) >= min_size:
                yield tuple(sorted(r))
            return
        if len(r) + len(p) < min_size:
            return
        pivot = max(p | x, key=lambda u: len(p & nbr[u]))
        for v in sorted(p - nbr[pivot]):
            r.append(v)
            yield from expand(r, p & nbr[v], x & nbr[v])
            r.pop()
            p.discard(v)
            x.add(v)

    for v in sorted(range(g.n), key=position.__getitem__):
        later = {w for w in nbr[v] if position[w] > position[v]}
        earlier = {w for w in nbr[v] if position[w] < position[v]}
        if 1 + len(later) < min_size:
            continue
        yield from expand([v], later, earlier)


def is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    nbr = g.neighbor_sets
    return all(vs[j] in nbr[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_maximal_clique(g: Graph, vertices) -> bool:
    vs = set(vertices)
    if not vs or not is_clique(g, vs):
        return False
    nbr = g.neighbor_sets
    common = set.intersection(*(set(nbr[v]) for v in vs))
    return not (common - vs)
