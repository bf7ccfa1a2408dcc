from collections import Counter
from fractions import Fraction

import pytest

from so5racah.angmom import Chain3Ops, chain3_basis, chain3_branch, \
    chain3_brackets, chain3_generator_matrices, chain3_mult, \
    coupled_commutator, lsquared, op_add, op_is_zero, op_scale, \
    verify_chain3_brackets, chain3_transform
from so5racah.exact import RS_ZERO, Radical, render_value, rs
from so5racah.halfint import HalfInt, hi
from so5racah.racah import solve_isoscalars
from so5racah.so5 import So5Irrep, so5_branch_so4

H = Fraction(1, 2)


def test_branchings_frozen():
    cases = {
        (0, 0): [("0", 1)],
        (1, 1): [("2", 1)],  # (1/2,1/2)
        (2, 0): [("1", 1), ("3", 1)],  # (1,0)
        (2, 1): [("1/2", 1), ("5/2", 1), ("7/2", 1)],  # (1,1/2)
        (2, 2): [("2", 1), ("4", 1)],  # (1,1)
        (3, 3): [("0", 1), ("3", 1), ("4", 1), ("6", 1)],  # (3/2,3/2)
        (4, 2): [("1", 1), ("2", 1), ("3", 2), ("4", 1), ("5", 2),
                 ("6", 1), ("7", 1)],  # (2,1)
    }
    for (tr, ts), want in cases.items():
        g = So5Irrep(HalfInt(tr), HalfInt(ts))
        assert [(str(l), mu) for l, mu in chain3_branch(g)] == want


def test_mult_and_dim_conservation():
    assert chain3_mult(So5Irrep(2, 1), hi(3)) == 2
    assert chain3_mult(So5Irrep(2, 1), hi(8)) == 0
    for tr in range(0, 7):
        for ts in range(0, tr + 1):
            g = So5Irrep(HalfInt(tr), HalfInt(ts))
            assert sum((l.twice + 1) * mu
                       for l, mu in chain3_branch(g)) == g.dim


def test_commutator_identities():
    # the generator algebra closes with fixed structure constants; a
    # wrong normalization or phase in L or O breaks at least one of
    # these on some irrep
    for g in [So5Irrep(H, H), So5Irrep(1, 0)]:
        ops = chain3_generator_matrices(g)
        root2 = rs(Radical(Fraction(1), 2))
        for q in (-1, 0, 1):
            got = coupled_commutator(ops.L, 1, ops.L, 1, 1, q)
            want = op_scale(-root2, ops.L[q])
            assert op_is_zero(op_add(got, op_scale(-1, want))), ("LL", g, q)
        for q in range(-3, 4):
            got = coupled_commutator(ops.L, 1, ops.O, 3, 3, q)
            want = op_scale(-2 * rs(Radical(Fraction(1), 3)), ops.O[q])
            assert op_is_zero(op_add(got, op_scale(-1, want))), ("LO", g, q)
        for q in (-1, 0, 1):
            got = coupled_commutator(ops.O, 3, ops.O, 3, 1, q)
            want = op_scale(-2 * rs(Radical(Fraction(1), 7)), ops.L[q])
            assert op_is_zero(op_add(got, op_scale(-1, want))), ("OO1", g, q)
        for q in range(-3, 4):
            got = coupled_commutator(ops.O, 3, ops.O, 3, 3, q)
            want = op_scale(rs(Radical(Fraction(1), 6)), ops.O[q])
            assert op_is_zero(op_add(got, op_scale(-1, want))), ("OO3", g, q)


def test_lsquared_trace():
    # trace is basis independent: sum of mult * (2L+1) * L(L+1)
    g = So5Irrep(1, 0)
    ops = chain3_generator_matrices(g)
    l2 = lsquared(ops)
    tr = RS_ZERO
    for j, colmap in l2.items():
        if j in colmap:
            tr = tr + colmap[j]
    assert tr == rs(3 * 2 + 7 * 12)


def test_ml_census_matches_branching():
    for g in [So5Irrep(1, H), So5Irrep(2, 1)]:
        census = Counter()
        for (lam, mx, my) in chain3_basis(g):
            census[mx.twice + 3 * my.twice] += 1
        want = Counter()
        for l, mu in chain3_branch(g):
            for tml in range(-l.twice, l.twice + 1, 2):
                want[tml] += mu
        assert census == want


def test_brackets_top_state():
    bs = chain3_brackets(So5Irrep(1, 0))
    v = bs.vector((1, hi(3), hi(3)))
    assert [(str(lam), str(w[0]), str(w[1]), render_value(c))
            for (lam, w), c in v] == [("(0,1)", "0", "1", "sqrt(1)")]


def test_brackets_verify_clean():
    for (r, s) in [(H, 0), (H, H), (1, 0), (1, H), (1, 1), (2, 1)]:
        g = So5Irrep(r, s)
        bs = chain3_brackets(g)
        assert verify_chain3_brackets(g, bs) == []
        alphas = {a for (a, l, ml) in bs.labels()}
        if (r, s) == (2, 1):
            assert alphas == {1, 2}


def test_transform_scalar_product():
    rows = chain3_transform(solve_isoscalars(
        So5Irrep(H, H), So5Irrep(H, H), So5Irrep(0, 0)))
    assert len(rows) == 1
    r = rows[0]
    assert (r.a1, str(r.l1), r.a2, str(r.l2), r.a, str(r.l)) \
        == (1, "2", 1, "2", 1, "0")
    assert render_value(r.values[0]) == "sqrt(1)"


def test_transform_frozen_rows():
    rows = chain3_transform(solve_isoscalars(
        So5Irrep(1, 0), So5Irrep(1, H), So5Irrep(1, H)))
    got = {(r.a1, str(r.l1), r.a2, str(r.l2), r.a, str(r.l)):
           [render_value(v) for v in r.values] for r in rows}
    assert got[(1, "1", 1, "1/2", 1, "1/2")] == ["-sqrt(1/50)", "sqrt(21/50)"]
    assert got[(1, "1", 1, "5/2", 1, "5/2")] == ["-sqrt(7/30)", "sqrt(1/490)"]
    assert got[(1, "1", 1, "5/2", 1, "7/2")] == ["sqrt(0)", "sqrt(12/49)"]
    assert got[(1, "1", 1, "7/2", 1, "5/2")] == ["sqrt(0)", "-sqrt(16/49)"]


def test_transform_rows_orthonormal_per_bra():
    rows = chain3_transform(solve_isoscalars(
        So5Irrep(1, 0), So5Irrep(1, H), So5Irrep(1, H)))
    groups = {}
    for r in rows:
        groups.setdefault((r.a, r.l.twice), []).append(r)
    for key, grp in groups.items():
        for rho in (0, 1):
            n2 = RS_ZERO
            for r in grp:
                n2 = n2 + r.values[rho] * r.values[rho]
            assert n2 == rs(1), (key, rho)
        cross = RS_ZERO
        for r in grp:
            cross = cross + r.values[0] * r.values[1]
        assert cross == RS_ZERO, key
