"""Immutable simple graphs and regularity-parameter extraction.

Vertices are the integers ``0 .. n-1``.  Adjacency is kept as sorted
neighbor tuples; a frozenset view is cached lazily for fast intersections.
"""

from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, TextIO

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


class GraphError(ValueError):
    """Malformed graph input or invalid vertex."""


class RegularityError(ValueError):
    """The graph fails a regularity condition.

    ``witness`` holds the first offending vertex or pair.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for {self.n} vertices")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"vertex {v} out of range [0, {self.n})")
                if v == u:
                    raise GraphError(f"self-loop at vertex {u}")
            if any(a >= b for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"neighbors of {u} not strictly increasing")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u not in self.neighbor_sets[v]:
                    raise GraphError(f"asymmetric edge {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_neighbor_sets(cls, nbrs: list[set[int]]) -> "Graph":
        return cls(len(nbrs), tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def _check_vertex(self, u: int) -> None:
        if not isinstance(u, (int, np.integer)) or not 0 <= u < self.n:
            raise GraphError(f"invalid vertex {u!r} for graph on {self.n} vertices")

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``; returns ``(graph, labels)`` with
        ``labels[i]`` the original index of new vertex ``i``."""
        labels = tuple(sorted(set(vertices)))
        for u in labels:
            self._check_vertex(u)
        index = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            adj.append(tuple(sorted(index[w] for w in self.adjacency[v] if w in index)))
        return Graph(len(labels), tuple(adj)), labels


@dataclass(frozen=True)
class AmpleParams:
    """(n, k, lambda, mu) of a (sub-)amply regular graph.

    ``mu_exact`` is False when distance-2 pairs disagree and ``mu`` is only
    the observed maximum.
    """

    n: int
    k: int
    lam: int
    mu: int
    mu_exact: bool = True

    @property
    def nklm(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise ValueError("intersection array needs b_0..b_{d-1} and c_1..c_d of equal length d >= 1")
        if self.c[0] != 1:
            raise ValueError(f"c_1 must be 1, got {self.c[0]}")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ValueError("intersection numbers b_i (i<d) and c_i must be positive")
        k = self.b[0]
        for i in range(1, self.diameter + 1):
            if self.b_at(i) + self.c[i - 1] > k:
                raise ValueError(f"b_{i} + c_{i} exceeds k at level {i}")

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.diameter else 0

    def c_at(self, i: int) -> int:
        return 0 if i == 0 else self.c[i - 1]

    def a_at(self, i: int) -> int:
        return self.k - self.b_at(i) - self.c_at(i)

    @property
    def lam(self) -> int:
        return self.b[0] - self.b_at(1) - 1

    @property
    def mu(self) -> int:
        return self.c[1] if self.diameter >= 2 else 0

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + "; " + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class Claw:
    center: int
    leaves: tuple[int, ...] = field(default=())


def regular_degree(g: Graph) -> Optional[int]:
    degrees = {len(a) for a in g.adjacency}
    return degrees.pop() if len(degrees) == 1 else None


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return g.neighbor_sets[u] & g.neighbor_sets[v]


def ample_parameters(g: Graph) -> AmpleParams:
    """Measure (n, k, lambda, mu) by an exhaustive scan of all adjacent and
    distance-2 pairs.

    Raises RegularityError if the degree or lambda is not constant.  A
    non-constant mu is not an error: the result is then sub-amply regular
    with ``mu`` the maximum count and ``mu_exact=False``.
    """
    if g.n < 2:
        raise RegularityError(f"graph on {g.n} vertices has no pairs to measure")
    k = len(g.adjacency[0])
    for u, nbrs in enumerate(g.adjacency):
        if len(nbrs) != k:
            raise RegularityError(f"degree not constant: vertex 0 has {k}, vertex {u} has {len(nbrs)}", (u,))
    if k == 0:
        raise RegularityError("graph has no edges", ())

    lam: Optional[int] = None
    mu_values: set[int] = set()
    adj = g.adjacency
    for u in range(g.n):
        # paths of length two from u, tallied by endpoint
        counts: Counter[int] = Counter()
        for w in adj[u]:
            counts.update(adj[w])
        nset = g.neighbor_sets[u]
        for v in adj[u]:
            c = counts.get(v, 0)
            if lam is None:
                lam = c
            elif c != lam:
                raise RegularityError(
                    f"lambda not constant: edge ({u}, {v}) has {c} common neighbors, expected {lam}", (u, v)
                )
        for v, c in counts.items():
            if v != u and v not in nset:
                mu_values.add(c)
    assert lam is not None
    if not mu_values:
        return AmpleParams(g.n, k, lam, 0, True)
    return AmpleParams(g.n, k, lam, max(mu_values), len(mu_values) == 1)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances; unreachable pairs are -1."""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    rows = [u for u, a in enumerate(g.adjacency) for _ in a]
    cols = [v for a in g.adjacency for v in a]
    m = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(g.n, g.n))
    dist = shortest_path(m, method="D", unweighted=True, directed=False)
    out = np.where(np.isinf(dist), -1, dist).astype(np.int64)
    return out


def adjacency_matrix(g: Graph, dtype=np.float64) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=dtype)
    for u, nbrs in enumerate(g.adjacency):
        a[u, list(nbrs)] = 1
    return a


def intersection_array(g: Graph) -> IntersectionArray:
    """Intersection array of a distance-regular graph.

    For every pair at distance i the number of neighbors at distance i-1
    and i+1 from the other endpoint must be constant.
    """
    if g.n == 0:
        raise RegularityError("empty graph")
    if regular_degree(g) is None:
        raise RegularityError("graph is not regular")
    dist = distance_matrix(g)
    if (dist < 0).any():
        u, v = map(int, np.argwhere(dist < 0)[0])
        raise RegularityError(f"graph is disconnected: no path {u} -> {v}", (u, v))
    d = int(dist.max())
    if d == 0:
        raise RegularityError("graph has no edges")
    a = adjacency_matrix(g, np.float32)
    # layer_counts[j][u, v] = #neighbors of u at distance j from v
    layers = [(dist == j).astype(np.float32) for j in range(d + 1)]
    b: list[int] = []
    c: list[int] = []
    for i in range(d + 1):
        mask = dist == i
        if i < d:
            up = (a @ layers[i + 1])[mask]
            b.append(_constant(up, mask, f"b_{i}"))
        if i > 0:
            down = (a @ layers[i - 1])[mask]
            c.append(_constant(down, mask, f"c_{i}"))
    try:
        return IntersectionArray(tuple(b), tuple(c))
    except ValueError as exc:
        raise RegularityError(str(exc)) from exc


def _constant(values: np.ndarray, mask: np.ndarray, name: str) -> int:
    first = values[0]
    bad = np.nonzero(values != first)[0]
    if bad.size:
        pairs = np.argwhere(mask)
        u, v = map(int, pairs[bad[0]])
        raise RegularityError(
            f"{name} not constant: pair ({u}, {v}) gives {int(values[bad[0]])}, "
            f"pair {tuple(map(int, pairs[0]))} gives {int(first)}",
            (u, v),
        )
    return int(round(float(first)))


def find_claw(g: Graph, m: int) -> Optional[Claw]:
    """Lexicographically first induced K_{1,m} (by center, then leaves)."""
    if m < 1:
        raise ValueError("m must be positive")
    sets = g.neighbor_sets
    for center in range(g.n):
        nbrs = g.adjacency[center]
        if len(nbrs) < m:
            continue
        leaves = _independent_set(nbrs, sets, m)
        if leaves is not None:
            return Claw(center, leaves)
    return None


def _independent_set(candidates, sets, m) -> Optional[tuple[int, ...]]:
    chosen: list[int] = []

    def extend(cands: list[int]) -> bool:
        if len(chosen) == m:
            return True
        if len(chosen) + len(cands) < m:
            return False
        for i, v in enumerate(cands):
            if len(chosen) + len(cands) - i < m:
                return False
            chosen.append(v)
            rest = [w for w in cands[i + 1:] if w not in sets[v]]
            if extend(rest):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend(list(candidates)) else None


def local_graph(g: Graph, u: int, closed: bool = False) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on N(u), or on N(u) plus u when ``closed``."""
    g._check_vertex(u)
    verts = set(g.adjacency[u])
    if closed:
        verts.add(u)
    return g.induced(verts)


def read_edge_list(stream: TextIO) -> Graph:
    """Parse the edge-list text format.

    One ``u v`` pair per line, 0-indexed.  Blank lines and ``#`` comments
    are skipped.  An optional first line ``n <count>`` fixes the vertex
    count; otherwise it is one more than the largest index.
    """
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_content or len(parts) != 2:
                raise GraphError(f"line {lineno}: header 'n <count>' must be the first entry")
            try:
                n = int(parts[1], 10)
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            seen_content = True
            continue
        seen_content = True
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex indices, got {line!r}")
        try:
            u, v = int(parts[0], 10), int(parts[1], 10)
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    stream.write(f"n {g.n}\n")
    for u, v in g.edges():
        stream.write(f"{u} {v}\n")


def to_edge_list_text(g: Graph) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()


def from_edge_list_text(text: str) -> Graph:
    return read_edge_list(io.StringIO(text))
