"""Brute-force reference implementations used as test oracles.

Everything here works on plain adjacency lists and shares no code with
drgkit, so agreement between the two is meaningful.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction

import numpy as np


def petersen_adj() -> list[list[int]]:
    # outer 5-cycle, inner pentagram, spokes
    adj = [set() for _ in range(10)]
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)):
            adj[a].add(b)
            adj[b].add(a)
    return [sorted(s) for s in adj]


def complete_adj(n: int) -> list[list[int]]:
    return [[v for v in range(n) if v != u] for u in range(n)]


def cycle_adj(n: int) -> list[list[int]]:
    return [sorted({(u - 1) % n, (u + 1) % n}) for u in range(n)]


def path_adj(n: int) -> list[list[int]]:
    return [[v for v in (u - 1, u + 1) if 0 <= v < n] for u in range(n)]


def star_adj(m: int) -> list[list[int]]:
    return [list(range(1, m + 1))] + [[0] for _ in range(m)]


def disjoint_union(*parts: list[list[int]]) -> list[list[int]]:
    out, offset = [], 0
    for adj in parts:
        out.extend([[v + offset for v in nbrs] for nbrs in adj])
        offset += len(adj)
    return out


def circulant_adj(n: int, jumps) -> list[list[int]]:
    adj = [set() for _ in range(n)]
    for u in range(n):
        for j in jumps:
            v = (u + j) % n
            if v != u:
                adj[u].add(v)
                adj[v].add(u)
    return [sorted(s) for s in adj]


def merge_intersect(a: list[int], b: list[int]) -> list[int]:
    i = j = 0
    out = []
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


def bfs(adj: list[list[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def brute_params(adj: list[list[int]]):
    """(n, k, lambda, mu, mu_exact) or None when degree or lambda varies."""
    n = len(adj)
    degs = {len(a) for a in adj}
    if len(degs) != 1:
        return None
    k = degs.pop()
    lams, mus = set(), set()
    for u in range(n):
        dist = bfs(adj, u)
        for v in range(u + 1, n):
            c = len(merge_intersect(adj[u], adj[v]))
            if dist[v] == 1:
                lams.add(c)
            elif dist[v] == 2:
                mus.add(c)
    if len(lams) != 1:
        return None
    return n, k, lams.pop(), max(mus, default=0), len(mus) <= 1


def brute_intersection_array(adj: list[list[int]]):
    """(b, c) by BFS from every vertex, or None if not distance-regular."""
    n = len(adj)
    bs, cs = {}, {}
    for u in range(n):
        dist = bfs(adj, u)
        if min(dist) < 0:
            return None
        for v in range(n):
            i = dist[v]
            b = sum(1 for w in adj[v] if dist[w] == i + 1)
            c = sum(1 for w in adj[v] if dist[w] == i - 1)
            bs.setdefault(i, set()).add(b)
            cs.setdefault(i, set()).add(c)
    if any(len(s) != 1 for s in list(bs.values()) + list(cs.values())):
        return None
    d = max(bs)
    return tuple(bs[i].pop() for i in range(d)), tuple(cs[i].pop() for i in range(1, d + 1))


def brute_maximal_cliques(adj: list[list[int]]) -> set[tuple[int, ...]]:
    n = len(adj)
    sets = [set(a) for a in adj]
    cliques = []
    for r in range(1, n + 1):
        for c in itertools.combinations(range(n), r):
            if all(b in sets[a] for a, b in itertools.combinations(c, 2)):
                cliques.append(frozenset(c))
    maximal = {c for c in cliques if not any(c < d for d in cliques)}
    return {tuple(sorted(c)) for c in maximal}


def is_induced_claw(adj: list[list[int]], center: int, leaves) -> bool:
    sets = [set(a) for a in adj]
    return all(x in sets[center] for x in leaves) and all(
        b not in sets[a] for a, b in itertools.combinations(leaves, 2)
    )


def has_claw(adj: list[list[int]], m: int) -> bool:
    sets = [set(a) for a in adj]
    for u in range(len(adj)):
        for leaves in itertools.combinations(adj[u], m):
            if all(b not in sets[a] for a, b in itertools.combinations(leaves, 2)):
                return True
    return False


def tridiagonal_eigenvalues(b, c) -> list[float]:
    """Eigenvalues of the intersection matrix via numpy."""
    d = len(b)
    k = b[0]
    bb = list(b) + [0]
    cc = [0] + list(c)
    L = np.zeros((d + 1, d + 1))
    for i in range(d + 1):
        L[i, i] = k - bb[i] - cc[i]
        if i > 0:
            L[i, i - 1] = cc[i]
        if i < d:
            L[i, i + 1] = bb[i]
    return sorted(np.linalg.eigvals(L).real.tolist(), reverse=True)


def adjacency_eigenvalues(adj: list[list[int]]) -> list[float]:
    n = len(adj)
    A = np.zeros((n, n))
    for u, nbrs in enumerate(adj):
        A[u, nbrs] = 1
    return sorted(np.linalg.eigvalsh(A).tolist(), reverse=True)


def std_sequence(b, c, x: Fraction) -> list[Fraction]:
    d = len(b)
    k = b[0]
    bb = list(b) + [0]
    cc = [0] + list(c)
    u = [Fraction(1), Fraction(x) / k]
    for i in range(1, d):
        a_i = k - bb[i] - cc[i]
        u.append((x * u[i] - cc[i] * u[i - 1] - a_i * u[i]) / bb[i])
    return u[: d + 1]


def brute_feasible(n_max: int) -> list[tuple[int, int, int, int]]:
    """All (n,k,lambda,mu), 5 <= n <= n_max, passing the identity and having
    non-negative integral multiplicities, or of conference form."""
    out = []
    for n in range(5, n_max + 1):
        for k in range(1, n - 1):
            for lam in range(0, k):
                for mu in range(1, k + 1):
                    if k * (k - lam - 1) != (n - k - 1) * mu:
                        continue
                    disc = (lam - mu) ** 2 + 4 * (k - mu)
                    root = math.isqrt(disc)
                    if root * root != disc:
                        if 4 * k == 2 * (n - 1) and 4 * lam == n - 5 and 4 * mu == n - 1:
                            out.append((n, k, lam, mu))
                        continue
                    r = Fraction(lam - mu + root, 2)
                    s = Fraction(lam - mu - root, 2)
                    # f + g = n - 1 and k + f r + g s = 0 (trace of A)
                    f = (-k - (n - 1) * s) / (r - s)
                    g = (n - 1) - f
                    if f.denominator == 1 and g.denominator == 1 and f >= 0 and g >= 0:
                        out.append((n, k, lam, mu))
    return out
