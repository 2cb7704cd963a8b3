"""Spectra of strongly regular parameter sets and distance-regular
intersection arrays, plus standard sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

from .graph import IntersectionArray

Number = Union[int, Fraction, float]


class InfeasibleError(ValueError):
    """Parameters cannot belong to a strongly regular graph."""


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    @property
    def nklm(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    def satisfies_identity(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu

    def __str__(self) -> str:
        return f"({self.n},{self.k},{self.lam},{self.mu})"


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues in descending order with multiplicities.

    ``r`` and ``s`` are ints when ``integral``; otherwise floats (the
    conference case).  ``discriminant`` is (lambda-mu)^2 + 4(k-mu), so the
    exact values are ((lambda-mu) +/- sqrt(discriminant)) / 2.
    """

    theta: tuple[Number, ...]
    multiplicities: tuple[int, ...]
    r: Number
    s: Number
    mult_r: int
    mult_s: int
    integral: bool
    discriminant: int

    @property
    def k(self) -> Number:
        return self.theta[0]


@dataclass(frozen=True)
class StandardSequence:
    values: tuple[Number, ...]
    at_eigenvalue: Number


def srg_spectrum(p: SrgParams) -> Spectrum:
    n, k, lam, mu = p.nklm
    if not (n >= 2 and 1 <= k <= n - 1 and 0 <= lam <= k - 1 and mu >= 0):
        raise InfeasibleError(f"{p}: parameters out of range")
    if not p.satisfies_identity():
        raise InfeasibleError(
            f"{p}: k(k-lambda-1) = {k * (k - lam - 1)} != (n-k-1)mu = {(n - k - 1) * mu}"
        )
    e = lam - mu
    disc = e * e + 4 * (k - mu)
    root = math.isqrt(disc)
    skew = 2 * k + (n - 1) * e
    if root * root == disc:
        r, s = (e + root) // 2, (e - root) // 2
        if (e + root) % 2:
            # e and root always share parity since disc = e^2 (mod 4)
            raise AssertionError("parity")
        f = Fraction((n - 1) * root - skew, 2 * root)
        g = Fraction((n - 1) * root + skew, 2 * root)
        if f < 0 or g < 0:
            raise InfeasibleError(f"{p}: negative multiplicity ({f}, {g})")
        if f.denominator != 1 or g.denominator != 1:
            raise InfeasibleError(f"{p}: non-integral multiplicities ({f}, {g})")
        mult_r, mult_s = int(f), int(g)
        integral = True
        r_val: Number = r
        s_val: Number = s
    else:
        # irrational eigenvalues force equal multiplicities (conference graphs)
        if skew != 0 or (n - 1) % 2:
            raise InfeasibleError(f"{p}: irrational eigenvalues with unequal multiplicities")
        mult_r = mult_s = (n - 1) // 2
        integral = False
        r_val = (e + math.sqrt(disc)) / 2
        s_val = (e - math.sqrt(disc)) / 2
    theta: list[Number] = [k]
    mults = [1]
    for val, m in ((r_val, mult_r), (s_val, mult_s)):
        if m == 0:
            continue
        if val == theta[-1]:
            mults[-1] += m
        else:
            theta.append(val)
            mults.append(m)
    return Spectrum(tuple(theta), tuple(mults), r_val, s_val, mult_r, mult_s, integral, disc)


def _tridiagonal(a: IntersectionArray) -> tuple[list[int], list[int]]:
    """Diagonal and squared off-diagonal of the symmetrized intersection matrix."""
    d = a.diameter
    diag = [a.a_at(i) for i in range(d + 1)]
    offsq = [a.b_at(i) * a.c_at(i + 1) for i in range(d)]
    return diag, offsq


def _count_below(diag, offsq, x: float) -> int:
    """Sturm count: number of eigenvalues strictly less than x."""
    count = 0
    q = diag[0] - x
    for i in range(len(diag)):
        if i:
            if q == 0.0:
                q = 1e-300
            q = diag[i] - x - offsq[i - 1] / q
        if q < 0:
            count += 1
    return count


def char_poly(a: IntersectionArray, x: Number) -> Number:
    """det(xI - L) for the intersection matrix L, via the three-term recurrence."""
    diag, offsq = _tridiagonal(a)
    prev, cur = 1, x - diag[0]
    for i in range(1, len(diag)):
        prev, cur = cur, (x - diag[i]) * cur - offsq[i - 1] * prev
    return cur


def drg_eigenvalues(a: IntersectionArray, tol: float = 1e-13) -> list[Number]:
    """The d+1 distinct eigenvalues of a distance-regular graph, descending.

    Computed by bisection with Sturm counts.  Eigenvalues that are integers
    (checked exactly on the characteristic polynomial) are returned as int.
    """
    diag, offsq = _tridiagonal(a)
    k = a.k
    size = len(diag)
    out: list[Number] = []
    for j in range(size):
        lo, hi = -k - 1.0, k + 1.0
        while hi - lo > tol * max(1.0, abs(lo), abs(hi)):
            mid = (lo + hi) / 2
            if mid in (lo, hi):
                break
            if _count_below(diag, offsq, mid) <= j:
                lo = mid
            else:
                hi = mid
        theta = (lo + hi) / 2
        nearest = round(theta)
        if abs(theta - nearest) < 1e-6 and char_poly(a, nearest) == 0:
            out.append(int(nearest))
        else:
            out.append(theta)
    out.reverse()
    for x, y in zip(out, out[1:]):
        if x - y <= 1e-9:
            raise ValueError(f"intersection array {a} gave non-distinct eigenvalues {x}, {y}")
    return out


def standard_sequence(a: IntersectionArray, x: Number) -> StandardSequence:
    """u_0(x), ..., u_d(x) from c_i u_{i-1} + a_i u_i + b_i u_{i+1} = x u_i.

    Rational ``x`` gives exact Fractions; float ``x`` gives floats.
    """
    if isinstance(x, Rational):
        xv: Number = Fraction(x)
        one: Number = Fraction(1)
    else:
        xv, one = float(x), 1.0
    d = a.diameter
    vals = [one, xv / a.k]
    for i in range(1, d):
        b = a.b_at(i)
        if b == 0:
            raise ZeroDivisionError(f"b_{i} = 0 before level d={d}")
        vals.append(((xv - a.a_at(i)) * vals[i] - a.c_at(i) * vals[i - 1]) / b)
    return StandardSequence(tuple(vals[: d + 1]), x)


def sign_changes(seq: Union[StandardSequence, Sequence[Number]]) -> int:
    values = seq.values if isinstance(seq, StandardSequence) else tuple(seq)
    for i, v in enumerate(values):
        if v == 0:
            raise ValueError(f"zero entry at position {i}; sign changes are undefined")
    return sum(1 for x, y in zip(values, values[1:]) if (x > 0) != (y > 0))


@dataclass(frozen=True)
class LambdaSCheck:
    margin: Number
    holds: bool
    bang_koolen_margin: Number
    bang_koolen_holds: bool


def check_lambda_s(k: int, lam: int, s: Number) -> LambdaSCheck:
    """Evaluate lambda + k/lambda > k/|s| and the variant lambda + |s| > k/|s|.

    Exact when ``s`` is rational.
    """
    if lam == 0:
        raise ValueError("lambda = 0 is degenerate: k/lambda is undefined")
    if s >= 0:
        raise ValueError(f"least eigenvalue must be negative, got {s}")
    if isinstance(s, Rational):
        abs_s: Number = Fraction(-s)
        kk: Number = Fraction(k)
    else:
        abs_s, kk = -float(s), float(k)
    margin = lam + kk / lam - kk / abs_s
    bk = lam + abs_s - kk / abs_s
    return LambdaSCheck(margin, margin > 0, bk, bk > 0)
