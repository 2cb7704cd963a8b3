"""Metsch clique geometries, the local clique partition procedure, and
Delsarte clique checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

from .cliques import is_maximal_clique, maximal_cliques
from .graph import AmpleParams, Graph, GraphError

Number = Union[int, Fraction, float]


class GeometryError(ValueError):
    """The clique geometry axioms failed.  ``witness`` names the edge."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class PartitionError(ValueError):
    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class MetschWitness:
    """An integer t meeting both hypotheses of Metsch's theorem.

    ``order_threshold`` is lambda + 2 - (t-1)(mu-1); maximal cliques at
    least that large are the special cliques.
    """

    t: int
    order_threshold: int
    source: str
    params: AmpleParams

    @property
    def degree_threshold(self) -> int:
        # lambda - (t-1)(mu-1) - 1
        return self.order_threshold - 3


def metsch_hypotheses(p: AmpleParams, t: int) -> bool:
    k, lam, mu = p.k, p.lam, p.mu
    first = lam > (2 * t - 1) * (mu - 1) - 1
    second = 2 * k < 2 * (t + 1) * (lam + 1) - t * (t + 1) * (mu - 1)
    return first and second


def _threshold(p: AmpleParams, t: int) -> int:
    return p.lam + 2 - (t - 1) * (p.mu - 1)


def metsch_t_min(p: AmpleParams) -> Optional[MetschWitness]:
    for t in range(1, p.k + 1):
        if metsch_hypotheses(p, t):
            return MetschWitness(t, _threshold(p, t), "theorem-search", p)
    return None


def satisfies_main(p) -> bool:
    """(lambda+1)^2 > (3k + lambda + 1)(mu - 1), in integers."""
    return (p.lam + 1) ** 2 > (3 * p.k + p.lam + 1) * (p.mu - 1)


def metsch_t_corollary(p: AmpleParams) -> Optional[MetschWitness]:
    if not satisfies_main(p):
        return None
    t = -(-3 * p.k // (2 * (p.lam + 1)))
    return MetschWitness(t, _threshold(p, t), "corollary-formula", p)


@dataclass(frozen=True)
class CliqueGeometry:
    cliques: tuple[tuple[int, ...], ...]
    edge_index: dict = field(repr=False)
    vertex_membership: tuple[tuple[int, ...], ...] = field(repr=False)
    witness: Optional[MetschWitness] = None

    def clique_of(self, u: int, v: int) -> tuple[int, ...]:
        return self.cliques[self.edge_index[(min(u, v), max(u, v))]]


def _direct_cliques(g: Graph) -> list[tuple[int, ...]]:
    # mu <= 1: an edge plus its common neighbors is already a clique
    nbr = g.neighbor_sets
    seen = set()
    for u, v in g.edges():
        seen.add(tuple(sorted({u, v} | (nbr[u] & nbr[v]))))
    return sorted(seen)


def extract_geometry(g: Graph, w: MetschWitness) -> CliqueGeometry:
    """Collect the maximal cliques of order >= the witness threshold and
    verify that they form a clique geometry with at most t cliques per
    vertex.  Any axiom failure raises GeometryError."""
    if w.params.mu <= 1:
        cliques = _direct_cliques(g)
    else:
        cliques = sorted(maximal_cliques(g, max(w.order_threshold, 2)))
    edge_index: dict[tuple[int, int], int] = {}
    membership: list[list[int]] = [[] for _ in range(g.n)]
    for idx, c in enumerate(cliques):
        if not is_maximal_clique(g, c):
            raise GeometryError(f"clique {c} is not maximal", tuple(c))
        for v in c:
            membership[v].append(idx)
        for i, u in enumerate(c):
            for v in c[i + 1:]:
                if (u, v) in edge_index:
                    raise GeometryError(
                        f"edge ({u}, {v}) lies in special cliques {edge_index[(u, v)]} and {idx}", (u, v)
                    )
                edge_index[(u, v)] = idx
    for e in g.edges():
        if e not in edge_index:
            raise GeometryError(f"edge {e} lies in no special clique", e)
    for v, m in enumerate(membership):
        if len(m) > w.t:
            raise GeometryError(f"vertex {v} lies in {len(m)} > t={w.t} special cliques", (v,))
    return CliqueGeometry(tuple(cliques), edge_index, tuple(tuple(m) for m in membership), w)


def special_clique_of_edge(g: Graph, w: MetschWitness, u: int, v: int) -> tuple[int, ...]:
    """Special clique through edge uv, recognised from degrees inside the
    common neighborhood of u and v."""
    g._check_vertex(u)
    g._check_vertex(v)
    if not g.adjacent(u, v):
        raise GraphError(f"vertices {u} and {v} are not adjacent")
    nbr = g.neighbor_sets
    common = nbr[u] & nbr[v]
    if w.params.mu <= 1:
        keep = set(common)
    else:
        keep = {x for x in common if len(nbr[x] & common) >= w.degree_threshold}
    return tuple(sorted(keep | {u, v}))


@dataclass(frozen=True)
class CliquePartitionResult:
    cliques: tuple[tuple[int, ...], ...]
    seeds: tuple[int, ...]
    deficient_set_sizes: tuple[int, ...]
    kappa: Fraction
    flags: tuple[str, ...] = ()

    @property
    def in_lemma_regime(self) -> bool:
        return not self.flags


def _check_local_hypotheses(h: Graph, lam: int, mu: int) -> None:
    nbr = h.neighbor_sets
    for u, a in enumerate(h.adjacency):
        if len(a) != lam:
            raise PartitionError(f"vertex {u} has degree {len(a)}, expected {lam}", (u,))
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if v not in nbr[u]:
                c = len(nbr[u] & nbr[v])
                if c > mu - 1:
                    raise PartitionError(
                        f"nonadjacent pair ({u}, {v}) has {c} > mu-1 = {mu - 1} common neighbors", (u, v)
                    )


def partition_local(h: Graph, lam: int, mu: int) -> CliquePartitionResult:
    """Sweep seeds in index order, splitting each seed's closed neighborhood
    (among uncovered vertices) into a clique C and a deficient set D.

    D holds vertices whose codegree inside the neighborhood is at least
    kappa = (lambda - mu)/2.  Vertices of codegree 0 are never placed in D,
    which only matters when kappa <= 0.
    """
    _check_local_hypotheses(h, lam, mu)
    kappa = Fraction(lam - mu, 2)
    nbr = h.neighbor_sets
    remaining = set(range(h.n))
    classes, seeds, dsizes = [], [], []
    flags: set[str] = set()
    if kappa <= 0:
        flags.add("kappa-nonpositive")
    for seed in range(h.n):
        if seed not in remaining:
            continue
        H = (nbr[seed] & remaining) | {seed}
        deficient = set()
        for x in H:
            codeg = len(H) - 1 - len(nbr[x] & H)
            if codeg > 0 and codeg >= kappa:
                deficient.add(x)
        C = H - deficient
        cl = tuple(sorted(C))
        for i, x in enumerate(cl):
            for y in cl[i + 1:]:
                if y not in nbr[x]:
                    raise PartitionError(
                        f"class of seed {seed} is not a clique: ({x}, {y}) nonadjacent", (x, y)
                    )
        if len(cl) < lam + 1:
            flags.add("class-below-lambda+1")
        if not is_maximal_clique(h, cl):
            flags.add("class-not-maximal")
        classes.append(cl)
        seeds.append(seed)
        dsizes.append(len(deficient))
        remaining -= C
    return CliquePartitionResult(tuple(classes), tuple(seeds), tuple(dsizes), kappa, tuple(sorted(flags)))


@dataclass(frozen=True)
class PairCount:
    count: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.count <= self.bound

    @property
    def tight(self) -> bool:
        return self.count == self.bound


def nonadjacent_pair_count(h: Graph, u: int, lam: int, mu: int, check: bool = True) -> PairCount:
    """Ordered nonadjacent pairs inside N(u), against (k - lambda - 1)(mu - 1)."""
    h._check_vertex(u)
    if check:
        _check_local_hypotheses(h, lam, mu)
    nbr = h.neighbor_sets
    local = h.adjacency[u]
    x = sum(1 for a in local for b in local if a != b and b not in nbr[a])
    return PairCount(x, (h.n - lam - 1) * (mu - 1))


@dataclass(frozen=True)
class DelsarteCheck:
    clique_order: int
    bound: Number
    ratio: Number
    is_delsarte: bool


def delsarte_check(clique_order: int, k: int, s: Number, tol: float = 1e-9) -> DelsarteCheck:
    """Compare a clique order with 1 + k/|s|."""
    if s >= 0:
        raise ValueError(f"least eigenvalue must be negative, got {s}")
    if isinstance(s, Rational):
        bound: Number = 1 + Fraction(k) / Fraction(-s)
        ratio: Number = Fraction(clique_order) / bound
        exact = ratio == 1
    else:
        bound = 1 + k / -float(s)
        ratio = clique_order / bound
        exact = abs(ratio - 1) <= tol
    return DelsarteCheck(clique_order, bound, ratio, exact)


def geometry_report(geom: CliqueGeometry, k: int, s: Optional[Number]) -> dict:
    orders = Counter(len(c) for c in geom.cliques)
    memberships = Counter(len(m) for m in geom.vertex_membership)
    report = {
        "clique_count": len(geom.cliques),
        "order_histogram": {str(o): orders[o] for o in sorted(orders)},
        "membership_histogram": {str(m): memberships[m] for m in sorted(memberships)},
        "max_membership": max(memberships) if memberships else 0,
    }
    if geom.witness is not None:
        report["witness"] = {
            "t": geom.witness.t,
            "order_threshold": geom.witness.order_threshold,
            "source": geom.witness.source,
        }
    if s is not None and s < 0:
        ratios = sorted({float(delsarte_check(o, k, s).ratio) for o in orders})
        report["delsarte_bound"] = float(delsarte_check(1, k, s).bound)
        report["delsarte_ratios"] = ratios
        report["all_delsarte"] = all(delsarte_check(o, k, s).is_delsarte for o in orders)
    return report
