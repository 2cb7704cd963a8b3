import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drgkit.feasibility import enumerate_feasible
from drgkit.graph import IntersectionArray, ample_parameters
from drgkit.spectra import (
    InfeasibleError,
    SrgParams,
    char_poly,
    check_lambda_s,
    drg_eigenvalues,
    sign_changes,
    srg_spectrum,
    standard_sequence,
)

from . import oracles
from .conftest import drg_arrays, drg_fixtures

PETERSEN = IntersectionArray((3, 2), (1, 1))
K5 = IntersectionArray((4,), (1,))
C6 = IntersectionArray((2, 1, 1), (1, 1, 2))


# --- srg_spectrum -----------------------------------------------------------

def test_srg_spectrum_petersen():
    sp = srg_spectrum(SrgParams(10, 3, 0, 1))
    assert (sp.r, sp.s) == (1, -2)
    assert sp.multiplicities == (1, 5, 4)
    assert sp.theta == (3, 1, -2)
    assert -sp.r * sp.s == 3 - 1 and sp.integral


def test_srg_spectrum_rook():
    sp = srg_spectrum(SrgParams(81, 16, 7, 2))
    assert (sp.r, sp.s) == (7, -2)
    assert sp.r + sp.s == 7 - 2
    assert sum(sp.multiplicities) == 81


def test_srg_spectrum_conference():
    sp = srg_spectrum(SrgParams(13, 6, 2, 3))
    assert not sp.integral
    assert sp.r == pytest.approx((-1 + math.sqrt(13)) / 2, abs=1e-12)
    assert sp.s == pytest.approx((-1 - math.sqrt(13)) / 2, abs=1e-12)
    assert sp.mult_r == sp.mult_s == 6


def test_srg_spectrum_matches_adjacency_eigenvalues():
    for spec in ["triangular:25", "latin:4", "sts:13", "paley:13"]:
        g = drg_fixtures()[spec]
        eig = oracles.adjacency_eigenvalues([list(a) for a in g.adjacency])
        sp = srg_spectrum(SrgParams(*ample_parameters(g).nklm))
        expanded = [float(t) for t, m in zip(sp.theta, sp.multiplicities) for _ in range(m)]
        assert eig == pytest.approx(expanded, abs=1e-8)


@pytest.mark.parametrize(
    "nklm, pattern",
    [
        ((10, 4, 1, 2), "!="),
        ((10, 12, 0, 1), "range"),
        ((5, 3, 1, 3), "non-integral multiplicit"),
        ((7, 3, 0, 2), "irrational"),
    ],
)
def test_srg_spectrum_errors(nklm, pattern):
    with pytest.raises(InfeasibleError, match=pattern):
        srg_spectrum(SrgParams(*nklm))


def test_srg_spectrum_disjoint_cliques_merges_k():
    sp = srg_spectrum(SrgParams(15, 4, 3, 0))
    assert sp.theta == (4, -1)
    assert sp.multiplicities == (3, 12)


def test_spectral_identities_over_enumeration():
    for rec in enumerate_feasible(300):
        p, sp = rec.params, rec.spectrum
        assert sum(sp.multiplicities) == p.n
        assert all(m >= 0 and isinstance(m, int) for m in sp.multiplicities)
        if sp.integral:
            assert -sp.r * sp.s == p.k - p.mu
            assert sp.r + sp.s == p.lam - p.mu
        else:
            assert -sp.r * sp.s == pytest.approx(p.k - p.mu, abs=1e-12 * p.n)
            assert sp.r + sp.s == pytest.approx(p.lam - p.mu, abs=1e-12)
            assert sp.mult_r == sp.mult_s
            # non-square discriminant happens only in conference form
            assert (4 * p.k, 4 * p.lam, 4 * p.mu) == (2 * (p.n - 1), p.n - 5, p.n - 1)


# --- drg_eigenvalues --------------------------------------------------------

def test_drg_eigenvalues_examples():
    assert drg_eigenvalues(PETERSEN) == [3, 1, -2]
    assert drg_eigenvalues(K5) == [4, -1]
    assert drg_eigenvalues(C6) == [2, 1, -1, -2]
    assert all(isinstance(x, int) for x in drg_eigenvalues(C6))


def test_char_poly_vanishes_at_eigenvalues():
    for x in (3, 1, -2):
        assert char_poly(PETERSEN, x) == 0
    assert char_poly(PETERSEN, 0) != 0


@pytest.mark.parametrize("name", list(drg_fixtures()))
def test_drg_eigenvalues_match_numpy_and_adjacency(name):
    a = drg_arrays()[name]
    eig = drg_eigenvalues(a)
    assert eig[0] == a.k
    assert [float(x) for x in eig] == pytest.approx(oracles.tridiagonal_eigenvalues(a.b, a.c), abs=1e-9)
    g = drg_fixtures()[name]
    if g.n <= 300:
        distinct = sorted({round(x, 6) for x in oracles.adjacency_eigenvalues([list(r) for r in g.adjacency])},
                          reverse=True)
        assert [float(x) for x in eig] == pytest.approx(distinct, abs=1e-6)


@pytest.mark.parametrize("name", ["triangular:25", "hamming:2,9", "latin:4", "lattice:5", "sts:13", "paley:13"])
def test_srg_and_drg_eigenvalues_agree(name):
    a = drg_arrays()[name]
    sp = srg_spectrum(SrgParams(*ample_parameters(drg_fixtures()[name]).nklm))
    assert [float(x) for x in drg_eigenvalues(a)] == pytest.approx([float(sp.k), float(sp.r), float(sp.s)],
                                                                    abs=1e-9)


@st.composite
def arrays(draw):
    d = draw(st.integers(1, 5))
    k = draw(st.integers(2, 20))
    b, c = [k], [1]
    for i in range(1, d):
        # b_i pairs with c_i, which is already drawn
        b.append(draw(st.integers(1, k - c[-1])))
        c.append(draw(st.integers(c[-1], k - 1 if i < d - 1 else k)))
    return IntersectionArray(tuple(b), tuple(c))


@settings(max_examples=80, deadline=None)
@given(a=arrays())
def test_drg_eigenvalues_property(a):
    got = drg_eigenvalues(a)
    assert len(got) == a.diameter + 1
    assert got[0] == pytest.approx(a.k)
    assert all(x > y for x, y in zip(got, got[1:]))
    assert [float(x) for x in got] == pytest.approx(oracles.tridiagonal_eigenvalues(a.b, a.c), abs=1e-7)


# --- standard_sequence and sign_changes -------------------------------------

def test_standard_sequence_examples():
    seq = standard_sequence(PETERSEN, -2)
    assert seq.values == (1, Fraction(-2, 3), Fraction(1, 6))
    assert all(isinstance(v, Fraction) for v in seq.values)
    assert standard_sequence(PETERSEN, 1).values == (1, Fraction(1, 3), Fraction(-1, 3))
    assert standard_sequence(PETERSEN, 3).values == (1, 1, 1)


def test_standard_sequence_matches_oracle():
    for name, a in drg_arrays().items():
        for x in (-3, -1, 2, Fraction(1, 2)):
            assert standard_sequence(a, x).values == tuple(oracles.std_sequence(a.b, a.c, Fraction(x)))
        assert set(standard_sequence(a, a.k).values) == {1}


def test_standard_sequence_float_input():
    seq = standard_sequence(PETERSEN, 1.5)
    assert isinstance(seq.values[1], float)
    assert seq.values[1] == pytest.approx(0.5)


def test_sign_changes_examples():
    assert sign_changes([1, Fraction(-2, 3), Fraction(1, 6)]) == 2
    assert sign_changes([1, Fraction(1, 3), Fraction(-1, 3)]) == 1
    assert sign_changes([1, 1, 1]) == 0
    with pytest.raises(ValueError, match="zero"):
        sign_changes([1, 0, -1])


@pytest.mark.parametrize("name", list(drg_fixtures()))
def test_sign_change_law(name):
    a = drg_arrays()[name]
    assert a.diameter <= 4
    for i, theta in enumerate(drg_eigenvalues(a)):
        assert sign_changes(standard_sequence(a, theta)) == i


# --- check_lambda_s ---------------------------------------------------------

def test_check_lambda_s_examples():
    chk = check_lambda_s(6, 3, -2)
    assert chk.margin == 2 and chk.holds
    chk = check_lambda_s(16, 7, -2)
    assert chk.margin == Fraction(9, 7)
    assert float(chk.margin) == pytest.approx(1.286, abs=1e-3)
    assert chk.bang_koolen_margin == 7 + 2 - 8


def test_check_lambda_s_rejects_degenerate():
    with pytest.raises(ValueError, match="degenerate"):
        check_lambda_s(3, 0, -2)
    with pytest.raises(ValueError):
        check_lambda_s(3, 1, 0)


def test_check_lambda_s_float_eigenvalue():
    sp = srg_spectrum(SrgParams(13, 6, 2, 3))
    chk = check_lambda_s(6, 2, sp.s)
    assert chk.holds
    assert chk.margin == pytest.approx(2 + 3 - 6 / ((1 + math.sqrt(13)) / 2))


def test_lambda_s_over_enumeration_and_fixtures():
    for rec in enumerate_feasible(400):
        if rec.params.lam >= 1:
            assert check_lambda_s(rec.params.k, rec.params.lam, rec.spectrum.s).holds, rec.params
    for name, a in drg_arrays().items():
        if a.lam >= 1:
            assert check_lambda_s(a.k, a.lam, drg_eigenvalues(a)[-1]).holds, name
