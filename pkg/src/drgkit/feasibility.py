"""Feasible strongly regular parameter sets and the eq.-main scan.

"Feasible" here means: the counting identity k(k-lambda-1) = (n-k-1)mu,
1 <= k <= n-2, 0 <= lambda <= k-1, 1 <= mu <= k, and either integral
non-negative eigenvalue multiplicities or conference form.  Krein
conditions, the absolute bound and a clique-divisibility test are
optional extra filters.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, TextIO

from .bounds import Classification, classify
from .geometry import satisfies_main
from .spectra import InfeasibleError, SrgParams, Spectrum, srg_spectrum

__all__ = [
    "FeasibleRecord",
    "TableError",
    "EXTRA_FILTERS",
    "satisfies_main",
    "candidate_params",
    "enumerate_feasible",
    "load_table",
    "scan_main",
    "krein_ok",
    "absolute_bound_ok",
    "clique_divisibility_ok",
]

EXTRA_FILTERS = ("krein", "absolute", "clique-divisibility")


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class FeasibleRecord:
    params: SrgParams
    spectrum: Spectrum
    satisfies_main: bool
    classification: Classification
    source: str = "enumerated"
    status: str = ""


def candidate_params(n: int) -> Iterable[SrgParams]:
    """Tuples on n vertices meeting the identity and the range conditions.

    For fixed (n, k) the identity pins lambda, and mu must be a multiple of
    k / gcd(k, n-k-1).
    """
    for k in range(1, n - 1):
        m = n - k - 1
        step = k // math.gcd(k, m)
        mu_max = min(k, k * (k - 1) // m)
        # descending mu gives ascending lambda
        for mu in reversed(range(step, mu_max + 1, step)):
            lam = k - 1 - m * mu // k
            yield SrgParams(n, k, lam, mu)


def _primitive(p: SrgParams) -> bool:
    return 0 < p.mu < p.k


def krein_ok(p: SrgParams, spec: Spectrum) -> bool:
    if not _primitive(p):
        return True
    k, r, s = p.k, spec.r, spec.s
    if spec.integral:
        r, s = Fraction(r), Fraction(s)
        slack = 0
    else:
        slack = 1e-9
    first = (k + r) * (s + 1) ** 2 - (r + 1) * (k + r + 2 * r * s)
    second = (k + s) * (r + 1) ** 2 - (s + 1) * (k + s + 2 * r * s)
    return first >= -slack and second >= -slack


def absolute_bound_ok(p: SrgParams, spec: Spectrum) -> bool:
    if not _primitive(p):
        return True
    f, g = spec.mult_r, spec.mult_s
    return 2 * p.n <= f * (f + 3) and 2 * p.n <= g * (g + 3)


def clique_divisibility_ok(p: SrgParams) -> bool:
    """When mu = 1, or mu = 2 and k < lambda(lambda+3)/2, the common
    neighbors of every edge form a clique, so each vertex lies in
    k/(lambda+1) cliques of order lambda+2 and lambda+1 must divide k."""
    forced = p.mu == 1 or (p.mu == 2 and 2 * p.k < p.lam * (p.lam + 3))
    return not forced or p.k % (p.lam + 1) == 0


def _passes(p: SrgParams, spec: Spectrum, filters: tuple[str, ...]) -> bool:
    if "krein" in filters and not krein_ok(p, spec):
        return False
    if "absolute" in filters and not absolute_bound_ok(p, spec):
        return False
    if "clique-divisibility" in filters and not clique_divisibility_ok(p):
        return False
    return True


def _record(p: SrgParams, spec: Spectrum, source: str, status: str = "") -> FeasibleRecord:
    return FeasibleRecord(p, spec, satisfies_main(p), classify(p, spec), source, status)


def _enumerate_range(args: tuple[int, int, tuple[str, ...]]) -> list[FeasibleRecord]:
    lo, hi, filters = args
    out = []
    for n in range(lo, hi + 1):
        for p in candidate_params(n):
            try:
                spec = srg_spectrum(p)
            except InfeasibleError:
                continue
            if _passes(p, spec, filters):
                out.append(_record(p, spec, "enumerated"))
    return out


def enumerate_feasible(
    n_max: int, extra_filters: Iterable[str] = (), workers: int = 1, n_min: int = 5
) -> list[FeasibleRecord]:
    """All feasible tuples with n_min <= n <= n_max, ascending in (n,k,lambda,mu).

    With ``workers > 1`` the n-range is split into chunks that run in
    separate processes; the merged output is identical.
    """
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    filters = tuple(sorted(set(extra_filters)))
    unknown = set(filters) - set(EXTRA_FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}; choose from {EXTRA_FILTERS}")
    lo = max(n_min, 5)
    if workers <= 1:
        return _enumerate_range((lo, n_max, filters))
    # balance chunks by roughly equal n^2 work
    bounds = [lo]
    chunks = workers * 4
    for i in range(1, chunks):
        bounds.append(max(bounds[-1] + 1, int(lo + (n_max - lo) * math.sqrt(i / chunks))))
    bounds = [b for b in bounds if b <= n_max] + [n_max + 1]
    jobs = [(a, b - 1, filters) for a, b in zip(bounds, bounds[1:]) if a <= b - 1]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_enumerate_range, jobs))
    return [rec for part in parts for rec in part]


def load_table(stream: TextIO) -> list[FeasibleRecord]:
    """Read ``n,k,lambda,mu[,status]`` rows (header optional).

    Every bad row is collected and reported in a single TableError.
    """
    records = []
    errors = []
    for lineno, row in enumerate(csv.reader(stream), 1):
        if not row or all(not c.strip() for c in row) or row[0].lstrip().startswith("#"):
            continue
        if lineno == 1 and row[0].strip().lower() == "n":
            continue
        if len(row) not in (4, 5):
            errors.append(f"line {lineno}: expected 4 or 5 columns, got {len(row)}")
            continue
        try:
            n, k, lam, mu = (int(c.strip(), 10) for c in row[:4])
        except ValueError:
            errors.append(f"line {lineno}: non-integer parameter in {row[:4]}")
            continue
        status = row[4] if len(row) == 5 else ""
        p = SrgParams(n, k, lam, mu)
        if not p.satisfies_identity():
            errors.append(
                f"line {lineno}: identity violated for {p}: "
                f"k(k-lambda-1) = {k * (k - lam - 1)} but (n-k-1)mu = {(n - k - 1) * mu}"
            )
            continue
        try:
            spec = srg_spectrum(p)
        except InfeasibleError as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        records.append(_record(p, spec, "table", status))
    if errors:
        raise TableError("; ".join(errors))
    return records


@dataclass(frozen=True)
class ScanReport:
    n_max: int
    filters_active: tuple[str, ...]
    total_feasible: int
    main_satisfiers: tuple[FeasibleRecord, ...]
    matched: tuple[FeasibleRecord, ...]
    unmatched: tuple[FeasibleRecord, ...]
    trivially_satisfying: tuple[FeasibleRecord, ...]

    @property
    def min_unmatched_n(self) -> Optional[int]:
        return min((r.params.n for r in self.unmatched), default=None)


def scan_main(
    n_max: int,
    table: Optional[list[FeasibleRecord]] = None,
    extra_filters: Iterable[str] = (),
    workers: int = 1,
    allow_large: bool = False,
) -> ScanReport:
    """Feasible tuples satisfying (lambda+1)^2 > (3k+lambda+1)(mu-1), split
    into closed-form geometric family matches and the rest.

    Tuples with mu <= 1 satisfy the inequality for free and are listed
    separately.  With a table, only tuples present in it are kept.
    """
    if n_max > 5000 and not allow_large:
        raise ValueError("n_max > 5000 needs allow_large=True")
    filters = tuple(sorted(set(extra_filters)))
    feasible = enumerate_feasible(n_max, filters, workers)
    if table is not None:
        keys = {r.params.nklm for r in table}
        feasible = [r for r in feasible if r.params.nklm in keys]
    sat = [r for r in feasible if r.satisfies_main]
    trivial = tuple(r for r in sat if r.params.mu <= 1)
    rest = [r for r in sat if r.params.mu >= 2]
    matched = tuple(r for r in rest if "geometric-family-match" in r.classification.tags)
    unmatched = tuple(r for r in rest if "geometric-family-match" not in r.classification.tags)
    return ScanReport(n_max, filters, len(feasible), tuple(sat), matched, unmatched, trivial)
