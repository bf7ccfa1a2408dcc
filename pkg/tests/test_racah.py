import time
from fractions import Fraction

import pytest

from so5racah.errors import NotInSeries
from so5racah.exact import RS_ZERO, parse_value, render_value, rs
from so5racah.halfint import hi
from so5racah.linalg import vec_dot
from so5racah.racah import CONVENTIONS, build_system, enumerate_columns, \
    outer_multiplicity, solve_isoscalars, verify_block, verify_series
from so5racah.so4 import So4Irrep, so4_cg, so4_kronecker
from so5racah.so5 import So5Irrep, so5_branch_so4, so5_kronecker

H = Fraction(1, 2)


def _vals(block, rho=1):
    return [render_value(v) for v in block.vectors[rho - 1]]


def test_outer_multiplicity():
    assert outer_multiplicity(So5Irrep(H, 0), So5Irrep(H, 0), So5Irrep(1, 0)) == 1
    assert outer_multiplicity(So5Irrep(1, 0), So5Irrep(1, H), So5Irrep(1, H)) == 2
    assert outer_multiplicity(So5Irrep(H, 0), So5Irrep(H, 0), So5Irrep(1, 1)) == 0


def test_columns_in_series_order():
    cols = enumerate_columns(So5Irrep(H, H), So5Irrep(H, 0), So5Irrep(H, 0))
    assert [tuple(str(x) for x in c) for c in cols] == [
        ("(0,0)", "(0,1/2)", "(0,1/2)"),
        ("(1/2,1/2)", "(1/2,0)", "(0,1/2)"),
        ("(0,0)", "(1/2,0)", "(1/2,0)"),
        ("(1/2,1/2)", "(0,1/2)", "(1/2,0)"),
    ]
    with pytest.raises(NotInSeries):
        enumerate_columns(So5Irrep(H, 0), So5Irrep(H, 0), So5Irrep(1, 1))


def test_vector_coupling_block():
    # the 4x4 system with a one-dimensional null space
    sys_ = build_system(So5Irrep(H, H), So5Irrep(H, 0), So5Irrep(H, 0))
    assert sys_.matrix.nrows == 4
    assert sys_.matrix.ncols == 4
    assert sys_.matrix.rank() == 3
    blk = solve_isoscalars(So5Irrep(H, H), So5Irrep(H, 0), So5Irrep(H, 0))
    assert _vals(blk) == ["-sqrt(1/5)", "-sqrt(4/5)", "sqrt(1/5)", "sqrt(4/5)"]
    assert verify_block(blk, sys_) == []


def test_identity_coupling():
    g = So5Irrep(1, H)
    blk = solve_isoscalars(g, So5Irrep(0, 0), g)
    assert blk.D == 1
    for (lam1, lam2, lam), v in zip(blk.columns, blk.vectors[0]):
        assert lam1 == lam and str(lam2) == "(0,0)"
        assert v == rs(1)


def test_exceptional_coupling_needs_augmentation():
    g1 = So5Irrep(H, 0)
    sys_ = build_system(g1, g1, So5Irrep(0, 0))
    assert sys_.n_augmented > 0
    blk = solve_isoscalars(g1, g1, So5Irrep(0, 0))
    assert _vals(blk) == ["sqrt(1/2)", "sqrt(1/2)"]
    assert verify_block(blk, sys_) == []


def test_multiplicity_two_block():
    g1, g2, g = So5Irrep(1, 0), So5Irrep(1, H), So5Irrep(1, H)
    sys_ = build_system(g1, g2, g)
    assert sys_.matrix.ncols == 18
    assert sys_.matrix.rank() == 16
    blk = solve_isoscalars(g1, g2, g)
    assert blk.D == 2
    assert not blk.meta["sign_fallback"]
    m = blk.meta["m_matrix"]
    assert [[str(x) for x in row] for row in m] == [
        ["sqrt(225/64)", "sqrt(45/32)"],
        ["sqrt(45/32)", "sqrt(961/16)"]]
    assert verify_block(blk, sys_) == []


def test_value_lookup():
    blk = solve_isoscalars(So5Irrep(H, H), So5Irrep(H, 0), So5Irrep(H, 0))
    v = blk.value(So4Irrep(0, 0), So4Irrep(H, 0), So4Irrep(H, 0))
    assert render_value(v) == "sqrt(1/5)"
    # off-column lookups are zero, not errors
    assert blk.value(So4Irrep(1, 1), So4Irrep(H, 0), So4Irrep(H, 0)) == RS_ZERO


def test_first_value_sign_convention():
    # scan order: highest weight(L1), then weight(L), then weight(L2);
    # the first nonzero coefficient of rho=1 there is positive
    for (a, b, c) in [((H, 0), (H, H), (H, 0)), ((1, 0), (1, 0), (1, 1)),
                      ((1, H), (H, H), (1, H)), ((1, 0), (1, H), (1, H))]:
        blk = solve_isoscalars(So5Irrep(*a), So5Irrep(*b), So5Irrep(*c))
        best = None
        for i, (l1, l2, l) in enumerate(blk.columns):
            if blk.vectors[0][i].is_zero():
                continue
            key = (l1.weight_key(), l.weight_key(), l2.weight_key())
            if best is None or key > best[0]:
                best = (key, i)
        lead = blk.vectors[0][best[1]]
        assert render_value(lead)[0] != "-"


def test_verify_series_clean():
    for (a, b) in [((H, 0), (H, 0)), ((H, H), (H, H)), ((H, H), (1, 0)),
                   ((1, 0), (1, H))]:
        assert verify_series(So5Irrep(*a), So5Irrep(*b)) == []


def test_conventions_are_stamped():
    blk = solve_isoscalars(So5Irrep(H, 0), So5Irrep(H, 0), So5Irrep(1, 0))
    for k in CONVENTIONS:
        assert blk.meta[k] == CONVENTIONS[k]


def test_unreduced_expansion_is_unitary():
    # assemble the full product-space coupling matrix for a small pair
    # and check orthonormality state by state
    g1, g2 = So5Irrep(H, 0), So5Irrep(H, H)
    blocks = []
    for g, mult in so5_kronecker(g1, g2).items():
        blk = solve_isoscalars(g1, g2, g)
        for rho in range(1, mult + 1):
            blocks.append((g, rho, blk))
    rows = []
    states1 = [(l, w) for l in so5_branch_so4(g1) for w in l.weights()]
    states2 = [(l, w) for l in so5_branch_so4(g2) for w in l.weights()]
    cols = [(s1, s2) for s1 in states1 for s2 in states2]
    for g, rho, blk in blocks:
        for lam in so5_branch_so4(g):
            for w in lam.weights():
                row = []
                for (l1, w1), (l2, w2) in cols:
                    c = RS_ZERO
                    if (w1[0] + w2[0], w1[1] + w2[1]) == w:
                        iso = blk.value(l1, l2, lam, rho)
                        if not iso.is_zero():
                            c = iso * so4_cg(l1, w1, l2, w2, lam, w)
                    row.append(c)
                rows.append(row)
    n = len(cols)
    assert len(rows) == n
    for i in range(n):
        for j in range(i, n):
            got = vec_dot(rows[i], rows[j])
            assert got == (rs(1) if i == j else RS_ZERO)


def test_small_blocks_are_fast():
    t0 = time.time()
    build_system(So5Irrep(H, H), So5Irrep(H, 0), So5Irrep(H, 0))
    assert time.time() - t0 < 1.0
