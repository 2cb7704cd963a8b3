"""Parameter inequalities for sub-amply regular and strongly regular graphs.

Verdicts are exact whenever the inputs are integers: inequalities
involving sqrt(13) or other square roots are squared out or decided with
``surd_sign``.  Reported bound values and margins are floats computed from
50-digit decimals.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import Any, Optional, Union

from .geometry import satisfies_main
from .graph import AmpleParams, Graph, find_claw
from .spectra import SrgParams, Spectrum

Number = Union[int, Fraction, float]

ENTRY_NAMES = (
    "lambda_bound",
    "r_bound",
    "claw_bound",
    "spielman_a",
    "spielman_b",
    "pyber_a",
    "pyber_b",
    "g",
    "h",
    "godsil",
    "bang_koolen",
)

FLOAT_SLACK = 1e-9


class TrivialParametersError(ValueError):
    pass


@dataclass
class BoundEntry:
    """One inequality: ``observed`` against ``bound``.

    ``margin`` is bound - observed in the direction where positive means
    the inequality holds.  ``holds`` is None when no finite verdict applies.
    """

    name: str
    inputs: dict
    bound: Optional[float]
    observed: Optional[float]
    holds: Optional[bool]
    margin: Optional[float]
    case: Optional[str] = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def surd_sign(a: Number, b: Number, d: int) -> int:
    """Sign of a + b*sqrt(d) for rationals a, b and a non-negative integer d."""
    a, b = Fraction(a), Fraction(b)
    if d == 0 or b == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    diff = a * a - b * b * d
    if a > 0:
        return (diff > 0) - (diff < 0)
    return (diff < 0) - (diff > 0)


def _dec(x) -> Decimal:
    if isinstance(x, Fraction):
        return Decimal(x.numerator) / Decimal(x.denominator)
    return Decimal(x)


def _sqrt(x) -> Decimal:
    return _dec(x).sqrt()


def _is_trivial(p) -> bool:
    return p.mu == 0 or p.lam == p.k - 1 or p.mu == p.k


def _exact(x: Number) -> bool:
    return isinstance(x, Rational)


def lambda_envelope(n: int, k: int, mu: int) -> tuple[float, float]:
    """The two terms 4 sqrt(2n) and (6/(sqrt(13)-1)) sqrt(k(mu-1))."""
    with localcontext() as ctx:
        ctx.prec = 50
        t1 = 4 * _sqrt(2 * n)
        t2 = (_sqrt(13) + 1) / 2 * _sqrt(k * (mu - 1)) if mu > 1 else Decimal(0)
        return float(t1), float(t2)


def _lambda_holds(n: int, k: int, mu: int, x: int) -> bool:
    """x < max{4 sqrt(2n), ((sqrt(13)+1)/2) sqrt(k(mu-1))} for x >= 0, exactly."""
    if x * x < 32 * n:
        return True
    if mu <= 1:
        return False
    K = k * (mu - 1)
    # x^2 < ((7 + sqrt(13))/2) K  <=>  7K - 2x^2 + K sqrt(13) > 0
    return surd_sign(7 * K - 2 * x * x, K, 13) > 0


def proof_case(p) -> str:
    """Which branch of the lambda-bound argument the parameters fall in."""
    if satisfies_main(p):
        return "case-1"
    lp1, m1 = p.lam + 1, p.mu - 1
    # mu - 1 >= delta (lambda + 1), delta = (sqrt(13) - 1)/6
    if surd_sign(6 * m1 + lp1, -lp1, 13) >= 0:
        return "case-2a"
    return "case-2b"


def lambda_bound(p) -> BoundEntry:
    if p.lam + 1 == p.k or p.mu == 0:
        raise TrivialParametersError(f"{p.nklm}: disjoint-clique parameters are excluded")
    if p.mu < 0:
        raise ValueError("mu must be non-negative")
    t1, t2 = lambda_envelope(p.n, p.k, p.mu)
    bound = max(t1, t2)
    obs = p.lam + 1
    return BoundEntry(
        "lambda_bound",
        {"n": p.n, "k": p.k, "lambda": p.lam, "mu": p.mu},
        bound,
        float(obs),
        _lambda_holds(p.n, p.k, p.mu, obs),
        bound - obs,
        proof_case(p),
        {"sqrt_term": t1, "mu_term": t2, "active_term": "sqrt_term" if t1 >= t2 else "mu_term"},
    )


def hypergraph_bound(n: int, r_min: int, R_max: int, ell: int) -> BoundEntry:
    if r_min < 2:
        raise ValueError("r_min must be at least 2")
    if R_max < r_min or ell < 1:
        raise ValueError("need R_max >= r_min and ell >= 1")
    bound = R_max / math.sqrt(r_min * (r_min - 1)) * math.sqrt(n)
    holds = ell * ell * r_min * (r_min - 1) <= R_max * R_max * n
    return BoundEntry(
        "hypergraph", {"n": n, "r_min": r_min, "R_max": R_max, "ell": ell}, bound, float(ell), holds, bound - ell
    )


def claw_bound(spec: Spectrum, mu: int) -> BoundEntry:
    r, s = spec.r, spec.s
    if s >= 0:
        raise ValueError("least eigenvalue must be negative")
    if _exact(s):
        first = 2 * (-s - 1) * (mu + 1 + s) + s
        second = Fraction(s * (s + 1) * (mu + 1), 2) - 1
        rhs = max(first, second)
        holds = r <= rhs
    else:
        s = float(s)
        first = 2 * (-s - 1) * (mu + 1 + s) + s
        second = s * (s + 1) * (mu + 1) / 2 - 1
        rhs = max(first, second)
        holds = r <= rhs + FLOAT_SLACK
    return BoundEntry(
        "claw_bound",
        {"r": float(r), "s": float(s), "mu": mu},
        float(rhs),
        float(r),
        holds,
        float(rhs - r),
        "first-branch" if first >= second else "second-branch",
        {"first_branch": float(first), "second_branch": float(second)},
    )


def _cube_root_bound(k: int, mu: int) -> float:
    return k ** (2 / 3) * (mu + 1) ** (1 / 3)


def spielman_bounds(p: SrgParams, spec: Spectrum, claw_holds: Optional[bool] = None) -> list[BoundEntry]:
    """r and lambda against k^(2/3) (mu+1)^(1/3).  Meaningful under the claw
    bound, whose status is echoed in the detail."""
    k, mu = p.k, p.mu
    bound = _cube_root_bound(k, mu)
    cube = k * k * (mu + 1)
    r = spec.r
    r_holds = r**3 < cube if _exact(r) else r < bound - FLOAT_SLACK
    lam_holds = p.lam**3 < cube
    detail = {"claw_bound_holds": claw_holds}
    inputs = {"k": k, "mu": mu}
    return [
        BoundEntry("spielman_a", inputs, bound, float(r), r_holds, bound - float(r), None, dict(detail)),
        BoundEntry("spielman_b", inputs, bound, float(p.lam), lam_holds, bound - p.lam, None, dict(detail)),
    ]


def pyber_bounds(p: SrgParams, spec: Spectrum) -> list[BoundEntry]:
    if _is_trivial(p):
        raise TrivialParametersError(f"{p.nklm}: trivial parameters are excluded")
    n, k, lam, mu = p.nklm
    root = n**0.25 * math.sqrt(k)
    r = spec.r
    if _exact(r):
        a_holds = r < 0 or r**4 < n * k * k
    else:
        a_holds = r < root - FLOAT_SLACK
    x = lam - mu
    b_holds = x < 0 or x**4 < n * k * k
    inputs = {"n": n, "k": k, "mu": mu}
    return [
        BoundEntry("pyber_a", inputs, root, float(r), a_holds, root - float(r)),
        BoundEntry("pyber_b", inputs, root + mu, float(lam), b_holds, root + mu - lam),
    ]


def r_bound(p: SrgParams, spec: Spectrum) -> BoundEntry:
    if _is_trivial(p):
        raise TrivialParametersError(f"{p.nklm}: trivial parameters are excluded")
    n, k, lam, mu = p.nklm
    with localcontext() as ctx:
        ctx.prec = 50
        t1 = 4 * _sqrt(2 * n)
        t2 = (_sqrt(13) + 1) / 2 * _sqrt(k * (mu - 1)) if mu > 1 else Decimal(0)
        bound = max(t1, t2) + _sqrt(k)
        r = _dec(spec.r) if _exact(spec.r) else Decimal(repr(spec.r))
        margin = bound - r
    s = spec.s
    branch = "abs-s-at-least-sqrt-k" if s * s >= k else "via-r-plus-s"
    return BoundEntry(
        "r_bound", {"n": n, "k": k, "mu": mu}, float(bound), float(spec.r), margin > 0, float(margin), branch
    )


# Each piece of g and h is n^a k^b; logs are exact when n and k are powers of two.
_G_PIECES = {
    "(k/n)^(4/3)": (Fraction(-4, 3), Fraction(4, 3)),
    "n^(-1/2)": (Fraction(-1, 2), Fraction(0)),
    "(k/n)^(3/2)": (Fraction(-3, 2), Fraction(3, 2)),
    "k^(1/2)n^(-3/4)": (Fraction(-3, 4), Fraction(1, 2)),
}
_H_PIECES = dict(_G_PIECES, **{"(k/n)^2": (Fraction(-2), Fraction(2))})


@dataclass(frozen=True)
class PiecewiseValue:
    value: float
    piece: str
    pieces: dict
    exact: bool
    in_convention: bool


def _log2_exact(x: int) -> Optional[int]:
    return x.bit_length() - 1 if x > 0 and x & (x - 1) == 0 else None


def _piece_logs(n: int, k: int, table: dict) -> tuple[dict, bool]:
    ln, lk = _log2_exact(n), _log2_exact(k)
    exact = ln is not None and lk is not None
    if not exact:
        ln, lk = math.log2(n), math.log2(k)
    return {name: a * ln + b * lk if exact else float(a) * ln + float(b) * lk for name, (a, b) in table.items()}, exact


def _pick(logs: dict, exact: bool, candidates: list[str], want_max: bool) -> tuple[Any, str]:
    best = max(logs[c] for c in candidates) if want_max else min(logs[c] for c in candidates)
    for c in candidates:
        if logs[c] == best or (not exact and abs(logs[c] - best) <= 1e-12 * max(1.0, abs(best))):
            return best, c
    raise AssertionError("unreachable")


def _evaluate(n: int, k: int, table: dict, groups: list[list[str]], order: list[str]) -> PiecewiseValue:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    logs, exact = _piece_logs(n, k, table)
    reduced = {}
    for group in groups:
        val, name = _pick(logs, exact, group, want_max=len(group) > 1)
        reduced[name] = val
    # ties resolve to the earliest row of the regime table
    best = min(reduced.values())
    tied = [name for name, v in reduced.items()
            if v == best or (not exact and abs(v - best) <= 1e-12 * max(1.0, abs(best)))]
    winner = min(tied, key=order.index)
    value = 2.0 ** float(best)
    pieces = {name: 2.0 ** float(v) for name, v in logs.items()}
    return PiecewiseValue(value, winner, pieces, exact, k <= (n - 1) / 2)


def g_func(n: int, k: int) -> PiecewiseValue:
    """min{(k/n)^(4/3), k^(1/2) n^(-3/4), max{(k/n)^(3/2), n^(-1/2)}}."""
    groups = [["(k/n)^(4/3)"], ["k^(1/2)n^(-3/4)"], ["(k/n)^(3/2)", "n^(-1/2)"]]
    return _evaluate(n, k, _G_PIECES, groups, list(_G_PIECES))


def h_func(n: int, k: int) -> PiecewiseValue:
    """min{(k/n)^(4/3), max{k^(1/2) n^(-3/4), (k/n)^2}, max{(k/n)^(3/2), n^(-1/2)}}."""
    groups = [["(k/n)^(4/3)"], ["k^(1/2)n^(-3/4)", "(k/n)^2"], ["(k/n)^(3/2)", "n^(-1/2)"]]
    return _evaluate(n, k, _H_PIECES, groups, list(_H_PIECES))


def piece_log2(n: int, k: int, piece: str) -> Union[Fraction, float]:
    """log2 of a single table piece; exact Fraction for power-of-two inputs."""
    logs, _ = _piece_logs(n, k, _H_PIECES)
    return logs[piece]


@dataclass(frozen=True)
class GodsilVerdict:
    claw_size: int
    claw_free: Optional[bool]
    parametric: bool
    margin: float

    @property
    def holds(self) -> Optional[bool]:
        if self.claw_free is None:
            return None if self.parametric else False
        return self.claw_free and self.parametric


def godsil_condition(p, s: Number, claw_free: Optional[bool] = None) -> GodsilVerdict:
    """``claw_free`` states that the graph has no m-claws for m = floor(|s|)+1;
    None when unknown (parameter-only input)."""
    if s >= 0:
        raise ValueError("least eigenvalue must be negative")
    m = math.floor(-s) + 1
    if _exact(s):
        rhs = (2 * Fraction(-s) - 1) * (p.mu - 1)
        parametric = p.lam + 1 > rhs
    else:
        rhs = (2 * -float(s) - 1) * (p.mu - 1)
        parametric = p.lam + 1 > rhs + FLOAT_SLACK
    return GodsilVerdict(m, claw_free, parametric, float(p.lam + 1 - rhs))


def godsil_for_graph(g: Graph, p, s: Number) -> GodsilVerdict:
    m = math.floor(-s) + 1
    return godsil_condition(p, s, find_claw(g, m) is None)


@dataclass(frozen=True)
class BangKoolenVerdict:
    holds: bool
    margin: int


def bang_koolen_condition(p, s: Number) -> BangKoolenVerdict:
    if s >= 0:
        raise ValueError("least eigenvalue must be negative")
    margin = p.lam - math.floor(s) ** 2 * p.mu
    return BangKoolenVerdict(margin > 0, margin)


def family_matches(p) -> list[str]:
    """Closed-form parameter matches against geometric families.

    Only the parameters are compared; a match says nothing about whether a
    graph with those parameters exists or is geometric.
    """
    n, k, lam, mu = p.nklm
    out = []
    # Steiner 2-designs S(2,K,v): block graph has mu = K^2
    K = math.isqrt(mu)
    if K >= 2 and K * K == mu and k % K == 0:
        r = k // K + 1
        v = r * (K - 1) + 1
        if (
            r >= K
            and v * (v - 1) % (K * (K - 1)) == 0
            and n == v * (v - 1) // (K * (K - 1))
            and lam == r - 2 + (K - 1) ** 2
        ):
            if K == 2:
                out.append(f"triangular T({v})")
            elif K == 3:
                out.append(f"sts_block STS({v})")
            else:
                out.append(f"steiner_2_design S(2,{K},{v})")
    # nets from g-1 mutually orthogonal Latin squares of order q
    q = math.isqrt(n)
    if q * q == n and q >= 2 and k % (q - 1) == 0:
        g = k // (q - 1)
        if 2 <= g <= q and lam == q - 2 + (g - 1) * (g - 2) and mu == g * (g - 1):
            out.append(f"lattice L2({q})" if g == 2 else f"latin_square L{g}({q})")
    if mu == k and k < n - 1:
        a = n - k
        if n % a == 0 and lam == n - 2 * a:
            out.append(f"complete_multipartite K({n // a}x{a})")
    return out


def is_conference_form(p) -> bool:
    n, k, lam, mu = p.nklm
    return 4 * k == 2 * (n - 1) and 4 * lam == n - 5 and 4 * mu == n - 1


@dataclass(frozen=True)
class Classification:
    tag: str
    tags: tuple[str, ...]
    families: tuple[str, ...] = ()
    detail: dict = field(default_factory=dict)


def classify(p: SrgParams, spec: Spectrum) -> Classification:
    tags = []
    if p.lam == p.k - 1 or p.mu == p.k or p.mu == 0:
        tags.append("trivial")
    if not spec.integral:
        tags.append("conference")
    fams = tuple(family_matches(p))
    if fams:
        tags.append("geometric-family-match")
    claw = claw_bound(spec, p.mu) if spec.s < 0 else None
    if claw is not None and claw.holds:
        tags.append("claw-bound-regime")
    detail = {}
    if claw is not None:
        detail["claw_margin"] = claw.margin
    if not spec.integral:
        detail["conference_form"] = is_conference_form(p)
    tag = tags[0] if tags else "unclassified-by-parameters"
    return Classification(tag, tuple(tags), fams, detail)


def _na(name: str, reason: str) -> BoundEntry:
    return BoundEntry(name, {}, None, None, None, None, "not-applicable", {"reason": reason})


def bound_report(
    p: SrgParams, spec: Spectrum, claw_free: Optional[bool] = None
) -> dict[str, BoundEntry]:
    """Every named inequality for one parameter set, keyed by ENTRY_NAMES."""
    out: dict[str, BoundEntry] = {}
    try:
        out["lambda_bound"] = lambda_bound(p)
    except TrivialParametersError as exc:
        out["lambda_bound"] = _na("lambda_bound", str(exc))
    try:
        out["r_bound"] = r_bound(p, spec)
    except TrivialParametersError as exc:
        out["r_bound"] = _na("r_bound", str(exc))
    if spec.s < 0:
        claw = claw_bound(spec, p.mu)
        out["claw_bound"] = claw
        sa, sb = spielman_bounds(p, spec, claw.holds)
    else:
        out["claw_bound"] = _na("claw_bound", "no negative eigenvalue")
        sa, sb = spielman_bounds(p, spec, None)
    out["spielman_a"], out["spielman_b"] = sa, sb
    try:
        out["pyber_a"], out["pyber_b"] = pyber_bounds(p, spec)
    except TrivialParametersError as exc:
        out["pyber_a"], out["pyber_b"] = _na("pyber_a", str(exc)), _na("pyber_b", str(exc))
    for name, fn, observed in (("g", g_func, spec.r), ("h", h_func, p.lam)):
        pv = fn(p.n, p.k)
        out[name] = BoundEntry(
            name,
            {"n": p.n, "k": p.k},
            pv.value,
            float(observed) / p.n,
            None,
            None,
            pv.piece,
            {"pieces": pv.pieces, "in_convention": pv.in_convention, "exact": pv.exact},
        )
    if spec.s < 0:
        gv = godsil_condition(p, spec.s, claw_free)
        out["godsil"] = BoundEntry(
            "godsil",
            {"lambda": p.lam, "mu": p.mu, "s": float(spec.s)},
            None,
            None,
            gv.holds,
            gv.margin,
            None,
            {"claw_size": gv.claw_size, "claw_free": gv.claw_free, "parametric": gv.parametric},
        )
        bk = bang_koolen_condition(p, spec.s)
        out["bang_koolen"] = BoundEntry(
            "bang_koolen",
            {"lambda": p.lam, "mu": p.mu, "s": float(spec.s)},
            float(math.floor(spec.s) ** 2 * p.mu),
            float(p.lam),
            bk.holds,
            float(bk.margin),
        )
    else:
        out["godsil"] = _na("godsil", "no negative eigenvalue")
        out["bang_koolen"] = _na("bang_koolen", "no negative eigenvalue")
    return {name: out[name] for name in ENTRY_NAMES}
