import random

import pytest

from bgb.rings import GF, BiPoly, UniPoly
from bgb.sylvester import (RankDeficientError, build_extended_sylvester, pi_n,
                           pi_n_inverse, squarify)
from conftest import pp, random_bipoly

F5 = GF(5)


def u(s, ring=F5):
    f = pp(s, ring)
    return f.rows[0] if not f.is_zero else UniPoly.zero(ring)


def test_pi_n_examples():
    f = pp("y - x", F5)
    assert pi_n(f, 2) == [u("1"), u("-x")]
    assert pi_n(pp("x^2", F5), 3) == [u("0"), u("0"), u("x^2")]
    assert pi_n(pp("5", GF(7)), 1) == [u("5", GF(7))]
    with pytest.raises(ValueError):
        pi_n(pp("y^2", F5), 2)


def test_pi_inverse_roundtrip():
    rng = random.Random(1)
    for _ in range(30):
        f = random_bipoly(rng, F5, 3, 3)
        n = (f.deg_y if not f.is_zero else 0) + rng.randint(1, 3)
        back = pi_n_inverse(pi_n(f, n), F5)
        assert back == f


def test_build_examples():
    # F = (y - x, x^2), D = 1 -> S = [[1, 0], [-x, x^2]]
    S = build_extended_sylvester([pp("y - x", F5), pp("x^2", F5)], 1)
    assert S.nrows == 2 and len(S.cols) == 2
    assert S.cols[0] == [u("1"), u("-x")]
    assert S.cols[1] == [u("0"), u("x^2")]
    # F = (y, x), D = 2 -> 3x4, columns pi_3(y^2), pi_3(y), pi_3(xy), pi_3(x)
    S2 = build_extended_sylvester([pp("y", F5), pp("x", F5)], 2)
    assert S2.nrows == 3 and len(S2.cols) == 4
    assert S2.cols[0] == pi_n(pp("y^2", F5), 3)
    assert S2.cols[1] == pi_n(pp("y", F5), 3)
    assert S2.cols[2] == pi_n(pp("x*y", F5), 3)
    assert S2.cols[3] == pi_n(pp("x", F5), 3)
    with pytest.raises(ValueError):
        build_extended_sylvester([pp("y", F5)], 1)


def _apply(S, ws):
    """S acting on stacked cofactor vectors = sum w_i f_i."""
    acc = [UniPoly.zero(S.ring)] * S.nrows
    flat = []
    for w in ws:
        flat.extend(pi_n(w, S.D))
    for col, wv in zip(S.cols, flat):
        for i in range(S.nrows):
            acc[i] = acc[i] + col[i] * wv
    return pi_n_inverse(acc, S.ring)


def test_matrix_is_combination_map():
    rng = random.Random(4)
    for _ in range(30):
        F = [random_bipoly(rng, F5, 2, 2) for _ in range(rng.randint(2, 3))]
        if any(f.is_zero for f in F):
            continue
        D = rng.randint(1, 3)
        S = build_extended_sylvester(F, D)
        ws = [random_bipoly(rng, F5, 2, D - 1) for _ in F]
        direct = BiPoly.zero(F5)
        for w, f in zip(ws, F):
            direct = direct + w * f
        assert _apply(S, ws) == direct
    # unit cofactor: S . pi(w_1=1, w_2=0) = pi(f_1)
    F = [pp("y - x", F5), pp("x^2", F5)]
    S = build_extended_sylvester(F, 1)
    assert _apply(S, [pp("1", F5), pp("0", F5)]) == F[0]


def test_squarify_identity_when_square():
    S = build_extended_sylvester([pp("y - x", F5), pp("x^2", F5)], 1)
    sq = squarify(S, random.Random(0))
    assert sq.permutation == [0, 1]
    assert sq.cols == S.cols
    assert sq.top_rows == sq.nrows == 2


def test_squarify_moves_zero_column():
    # wide matrix (t=3) keeps full rank after a redundant column is zeroed
    F = [pp("y^2 - x", F5), pp("x^2 - y", F5), pp("x*y - 1", F5)]
    S = build_extended_sylvester(F, 2)
    S.cols[0], S.cols[2] = S.cols[2], S.cols[0]
    S.cols[0] = [UniPoly.zero(F5)] * S.nrows  # force a zero leading column
    sq = squarify(S, random.Random(0))
    assert sq.permutation[0] != 0
    top = [c[:S.nrows] for c in sq.cols]
    for pos, j in enumerate(sq.permutation):
        assert top[pos] == S.cols[j]
    extra = sq.nrows - S.nrows
    for pos in range(len(sq.cols)):
        tail = sq.cols[pos][S.nrows:]
        if pos >= S.nrows:
            assert tail[pos - S.nrows] == u("1")
        else:
            assert all(e.is_zero for e in tail)


def test_squarify_bottom_block_layout():
    F = [pp("y^2 - x", F5), pp("x^2 - y", F5), pp("x*y - 1", F5)]
    S = build_extended_sylvester(F, 2)
    sq = squarify(S, random.Random(3))
    assert sq.nrows == len(sq.cols) == 6
    # bottom block is [0 | I]
    for pos in range(6):
        tail = sq.cols[pos][4:]
        if pos < 4:
            assert all(e.is_zero for e in tail)
        else:
            assert tail[pos - 4] == u("1")
            assert sum(1 for e in tail if not e.is_zero) == 1


def test_squarify_rejects_rank_deficiency():
    # proportional generators: the column span collapses
    F = [pp("x*y", F5), pp("2*x*y", F5)]
    S = build_extended_sylvester(F, 1)
    with pytest.raises(RankDeficientError):
        squarify(S, random.Random(0))


def test_squarify_rejects_small_D():
    F = [pp("y^2 - x", F5), pp("x^2 - y", F5)]
    S = build_extended_sylvester(F, 1)
    with pytest.raises(ValueError):
        squarify(S, random.Random(0))
