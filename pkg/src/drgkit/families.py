"""Deterministic generators for classical strongly/distance-regular families.

Every generator labels vertices in lexicographic order of the family's
natural objects (subsets, tuples, residues, cells, blocks).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Union

from .graph import AmpleParams, Graph
from .spectra import SrgParams

GRAMMAR = (
    "family spec grammar: triangular:M | johnson:V,D | hamming:D,Q | lattice:Q | "
    "paley:P | latin:Q | sts:V | cliques:COUNT,SIZE | complement:<spec>"
)

_ARITY = {
    "johnson": 2,
    "hamming": 2,
    "triangular": 1,
    "lattice": 1,
    "paley": 1,
    "latin_square": 1,
    "sts_block": 1,
    "disjoint_cliques": 2,
    "complement_of": 0,
}

_ALIASES = {
    "latin": "latin_square",
    "sts": "sts_block",
    "cliques": "disjoint_cliques",
    "complement": "complement_of",
}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    inner: Optional["FamilySpec"] = None

    def __post_init__(self):
        if self.family not in _ARITY:
            raise FamilyError(f"unknown family {self.family!r}; {GRAMMAR}")
        if len(self.params) != _ARITY[self.family]:
            raise FamilyError(f"{self.family} takes {_ARITY[self.family]} parameter(s); {GRAMMAR}")
        if (self.family == "complement_of") != (self.inner is not None):
            raise FamilyError("complement_of needs exactly one inner spec")
        _validate(self)

    def __str__(self) -> str:
        short = {v: k for k, v in _ALIASES.items()}.get(self.family, self.family)
        if self.inner is not None:
            return f"{short}:{self.inner}"
        return f"{short}:{','.join(map(str, self.params))}"


@dataclass(frozen=True)
class DesignParams:
    """Partial geometry with R lines per point, K points per line, and
    alpha lines through a point meeting a non-incident line."""

    R: int
    K: int
    alpha: int

    def __post_init__(self):
        if self.R < 2 or self.K < 2 or not 1 <= self.alpha <= self.K:
            raise ValueError(f"invalid partial geometry parameters {self}")

    def dual(self) -> "DesignParams":
        return DesignParams(self.K, self.R, self.alpha)

    def point_graph_parameters(self) -> SrgParams:
        s, t, a = self.K - 1, self.R - 1, self.alpha
        n, rem = divmod((s + 1) * (s * t + a), a)
        if rem:
            raise ValueError(f"{self} has a non-integral point count")
        return SrgParams(n, s * (t + 1), s - 1 + t * (a - 1), a * (t + 1))

    def line_graph_parameters(self) -> SrgParams:
        return self.dual().point_graph_parameters()


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    spec: FamilySpec
    expected: Optional[Union[SrgParams, AmpleParams]] = None
    labels: tuple = field(default=(), repr=False)


def parse_family(text: str) -> FamilySpec:
    """Parse strings like ``hamming:2,9`` or ``complement:paley:13``."""
    raw = text.strip().lower()
    m = re.fullmatch(r"([a-z_]+)\s*:\s*(.+)", raw)
    if not m:
        raise FamilyError(f"cannot parse family spec {text!r}; {GRAMMAR}")
    name, rest = m.group(1), m.group(2)
    family = _ALIASES.get(name, name)
    if family not in _ARITY:
        raise FamilyError(f"unknown family {name!r}; {GRAMMAR}")
    if family == "complement_of":
        return FamilySpec(family, (), parse_family(rest))
    try:
        params = tuple(int(p.strip(), 10) for p in rest.split(","))
    except ValueError:
        raise FamilyError(f"non-integer parameter in {text!r}; {GRAMMAR}") from None
    return FamilySpec(family, params)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q**0.5) + 1))


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(p for p in range(2, q + 1) if q % p == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _validate(spec: FamilySpec) -> None:
    f, p = spec.family, spec.params
    if f == "johnson":
        v, d = p
        if d < 2 or v < 2 * d:
            raise FamilyError(f"johnson(v,d) needs d >= 2 and v >= 2d, got {p}")
    elif f == "hamming":
        d, q = p
        if d < 1 or q < 2:
            raise FamilyError(f"hamming(d,q) needs d >= 1, q >= 2, got {p}")
    elif f == "triangular":
        if p[0] < 4:
            raise FamilyError(f"triangular(m) needs m >= 4, got {p[0]}")
    elif f == "lattice":
        if p[0] < 2:
            raise FamilyError(f"lattice(q) needs q >= 2, got {p[0]}")
    elif f == "paley":
        q = p[0]
        if q % 4 != 1:
            raise FamilyError(f"paley(q) needs q = 1 mod 4, got {q}")
        if not _is_prime(q):
            if _is_prime_power(q):
                raise FamilyError(f"paley({q}): prime powers that are not prime are unsupported")
            raise FamilyError(f"paley(q) needs a prime q, got {q}")
    elif f == "latin_square":
        if p[0] < 3:
            raise FamilyError(f"latin_square(q) needs q >= 3, got {p[0]}")
    elif f == "sts_block":
        v = p[0]
        if v < 7 or v % 6 not in (1, 3):
            raise FamilyError(f"sts_block(v) needs v = 1 or 3 mod 6 and v >= 7, got {v}")
    elif f == "disjoint_cliques":
        count, size = p
        if count < 1 or size < 1:
            raise FamilyError(f"disjoint_cliques(count,size) needs positive values, got {p}")


def steiner_triple_system(v: int) -> list[tuple[int, int, int]]:
    """Blocks of an STS(v), sorted lexicographically.

    Bose construction for v = 3 mod 6, Skolem construction for v = 1 mod 6.
    """
    if v < 7 or v % 6 not in (1, 3):
        raise FamilyError(f"no Steiner triple system construction for v={v}")
    blocks: list[tuple[int, ...]] = []
    if v % 6 == 3:
        m = v // 3  # order of the idempotent commutative quasigroup, odd
        half = (m + 1) // 2

        def op(x, y):
            return ((x + y) * half) % m

        def pt(x, i):
            return x + m * (i % 3)

        for x in range(m):
            blocks.append((pt(x, 0), pt(x, 1), pt(x, 2)))
        for i in range(3):
            for x, y in itertools.combinations(range(m), 2):
                blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    else:
        n = (v - 1) // 6
        m = 2 * n  # half-idempotent commutative quasigroup of order 2n
        inf = v - 1

        def op(x, y):
            s = (x + y) % m
            return s // 2 if s % 2 == 0 else s // 2 + n

        def pt(x, i):
            return x + m * (i % 3)

        for x in range(n):
            blocks.append((pt(x, 0), pt(x, 1), pt(x, 2)))
        for x in range(n):
            for i in range(3):
                blocks.append((inf, pt(x + n, i), pt(x, i + 1)))
        for i in range(3):
            for x, y in itertools.combinations(range(m), 2):
                blocks.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return sorted(tuple(sorted(b)) for b in blocks)


def _johnson(v: int, d: int) -> tuple[Graph, tuple]:
    subsets = list(itertools.combinations(range(v), d))
    index = {s: i for i, s in enumerate(subsets)}
    nbrs: list[set[int]] = [set() for _ in subsets]
    for i, s in enumerate(subsets):
        inside = set(s)
        outside = [x for x in range(v) if x not in inside]
        for out in s:
            for new in outside:
                t = tuple(sorted((inside - {out}) | {new}))
                nbrs[i].add(index[t])
    return Graph.from_neighbor_sets(nbrs), tuple(subsets)


def _hamming(d: int, q: int) -> tuple[Graph, tuple]:
    words = list(itertools.product(range(q), repeat=d))
    nbrs: list[set[int]] = [set() for _ in words]
    for i, w in enumerate(words):
        for pos in range(d):
            place = q ** (d - 1 - pos)
            base = i - w[pos] * place
            for a in range(q):
                if a != w[pos]:
                    nbrs[i].add(base + a * place)
    return Graph.from_neighbor_sets(nbrs), tuple(words)


def _paley(q: int) -> tuple[Graph, tuple]:
    squares = {(x * x) % q for x in range(1, q)}
    nbrs = [{(u + s) % q for s in squares} for u in range(q)]
    return Graph.from_neighbor_sets(nbrs), tuple(range(q))


def _latin_square(q: int) -> tuple[Graph, tuple]:
    cells = [(i, j) for i in range(q) for j in range(q)]
    nbrs: list[set[int]] = [set() for _ in cells]
    for a, (i, j) in enumerate(cells):
        for b, (x, y) in enumerate(cells):
            if a != b and (i == x or j == y or (i + j) % q == (x + y) % q):
                nbrs[a].add(b)
    return Graph.from_neighbor_sets(nbrs), tuple(cells)


def _block_graph(blocks: list[tuple[int, ...]]) -> Graph:
    by_point: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for p in b:
            by_point.setdefault(p, []).append(i)
    nbrs: list[set[int]] = [set() for _ in blocks]
    for members in by_point.values():
        for i in members:
            nbrs[i].update(members)
    for i in range(len(blocks)):
        nbrs[i].discard(i)
    return Graph.from_neighbor_sets(nbrs)


def _disjoint_cliques(count: int, size: int) -> Graph:
    nbrs = []
    for c in range(count):
        block = set(range(c * size, (c + 1) * size))
        nbrs.extend(block - {v} for v in sorted(block))
    return Graph.from_neighbor_sets(nbrs)


def complement(g: Graph) -> Graph:
    everyone = set(range(g.n))
    return Graph.from_neighbor_sets([everyone - set(a) - {u} for u, a in enumerate(g.adjacency)])


def complement_parameters(p: SrgParams) -> SrgParams:
    n, k, lam, mu = p.n, p.k, p.lam, p.mu
    return SrgParams(n, n - k - 1, n - 2 * k + mu - 2, n - 2 * k + lam)


def expected_parameters(spec: FamilySpec) -> Union[SrgParams, AmpleParams]:
    """Closed-form parameters of ``spec`` without building the graph.

    Strongly regular families give SrgParams.  Johnson and Hamming graphs of
    diameter at least 3 give AmpleParams read off their intersection arrays.
    """
    f, p = spec.family, spec.params
    if f == "triangular":
        (m,) = p
        return SrgParams(m * (m - 1) // 2, 2 * (m - 2), m - 2, 4)
    if f == "johnson":
        v, d = p
        if d == 2:
            return SrgParams(v * (v - 1) // 2, 2 * (v - 2), v - 2, 4)
        return AmpleParams(comb(v, d), d * (v - d), v - 2, 4, True)
    if f == "hamming":
        d, q = p
        n, k, lam = q**d, d * (q - 1), q - 2
        if d == 1:
            return SrgParams(n, k, lam, 0)
        if d == 2:
            return SrgParams(n, k, lam, 2)
        return AmpleParams(n, k, lam, 2, True)
    if f == "lattice":
        (q,) = p
        return SrgParams(q * q, 2 * (q - 1), q - 2, 2)
    if f == "paley":
        (q,) = p
        return SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)
    if f == "latin_square":
        (q,) = p
        return SrgParams(q * q, 3 * (q - 1), q, 6)
    if f == "sts_block":
        (v,) = p
        if v == 7:
            # Fano plane: every two lines meet, so the block graph is K_7
            return SrgParams(7, 6, 5, 0)
        return DesignParams((v - 1) // 2, 3, 3).line_graph_parameters()
    if f == "disjoint_cliques":
        count, size = p
        return SrgParams(count * size, size - 1, size - 2, 0)
    if f == "complement_of":
        inner = expected_parameters(spec.inner)
        if not isinstance(inner, SrgParams):
            raise FamilyError(f"complement of non-SRG family {spec.inner} has no closed form")
        return complement_parameters(inner)
    raise FamilyError(f"no closed form for {spec}")


def design_params(spec: FamilySpec) -> Optional[DesignParams]:
    """Partial geometry whose line graph is the family's graph, if any."""
    f, p = spec.family, spec.params
    if f == "triangular" or (f == "johnson" and p[1] == 2):
        m = p[0]
        return DesignParams(m - 1, 2, 2)  # K_m as a Steiner 2-design with block size 2
    if f == "lattice" or (f == "hamming" and p[0] == 2):
        q = p[-1]
        return DesignParams(q, 2, 1)
    if f == "latin_square":
        return DesignParams(p[0], 3, 2)
    if f == "sts_block" and p[0] > 7:
        return DesignParams((p[0] - 1) // 2, 3, 3)
    return None


def generate(spec: FamilySpec) -> LabeledGraph:
    f, p = spec.family, spec.params
    labels: tuple = ()
    if f == "triangular":
        g, labels = _johnson(p[0], 2)
    elif f == "johnson":
        g, labels = _johnson(*p)
    elif f == "hamming":
        g, labels = _hamming(*p)
    elif f == "lattice":
        g, labels = _hamming(2, p[0])
    elif f == "paley":
        g, labels = _paley(p[0])
    elif f == "latin_square":
        g, labels = _latin_square(p[0])
    elif f == "sts_block":
        blocks = steiner_triple_system(p[0])
        g, labels = _block_graph(blocks), tuple(blocks)
    elif f == "disjoint_cliques":
        g = _disjoint_cliques(*p)
    elif f == "complement_of":
        inner = generate(spec.inner)
        g, labels = complement(inner.graph), inner.labels
    else:  # pragma: no cover - FamilySpec validates the tag
        raise FamilyError(f"unknown family {f}")
    try:
        expected = expected_parameters(spec)
    except FamilyError:
        expected = None
    return LabeledGraph(g, spec, expected, labels)
