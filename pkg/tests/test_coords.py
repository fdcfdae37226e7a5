import random

import pytest

from bgb import oracle
from bgb.coords import (Coords2x2, apply_coords, change_coordinates_groebner,
                        sample_gamma)
from bgb.rings import ZZ, GF, NonInvertibleError, reduce_mod
from conftest import gb_equal, pp, ppl, random_bipoly, random_noether_system

F7 = GF(7)
IDENT = Coords2x2(1, 0, 0, 1)
SWAP = Coords2x2(0, 1, 1, 0)


def test_apply_examples():
    f = pp("y - x^2")
    assert apply_coords(f, IDENT) == f
    assert apply_coords(f, SWAP) == pp("x - y^2")
    # g12 = 1: the second substitution slot picks up x, so y -> x + y
    assert apply_coords(pp("y"), Coords2x2(1, 1, 0, 1)) == pp("x + y")
    assert apply_coords(pp("y"), Coords2x2(1, 0, 1, 1)) == pp("y")


def test_apply_is_ring_homomorphism():
    rng = random.Random(50)
    for _ in range(25):
        f = random_bipoly(rng, ZZ, 2, 2, bound=5)
        g = random_bipoly(rng, ZZ, 2, 2, bound=5)
        gam = Coords2x2(*(rng.randint(-4, 4) for _ in range(4)))
        assert apply_coords(f + g, gam) == apply_coords(f, gam) + apply_coords(g, gam)
        assert apply_coords(f * g, gam) == apply_coords(f, gam) * apply_coords(g, gam)


def test_apply_preserves_degree():
    rng = random.Random(51)
    for _ in range(25):
        f = random_bipoly(rng, ZZ, 3, 2, bound=6)
        if f.is_zero:
            continue
        gam = sample_gamma(2, 3, rng)
        assert apply_coords(f, gam).total_degree == f.total_degree


def test_sample_gamma_ranges():
    rng = random.Random(52)
    g = sample_gamma(1, 2, rng)
    assert all(0 <= e <= 8 * 18 for e in g.entries())
    assert g.det() != 0
    g = sample_gamma(4, 1, rng)
    assert all(0 <= e <= 128 for e in g.entries())


def test_gamma_inverse_mod():
    g = Coords2x2(2, 1, 1, 1)
    inv = g.inverse_mod(F7)
    assert (inv.g11, inv.g12, inv.g21, inv.g22) == (1, 6, 6, 2)
    with pytest.raises(NonInvertibleError):
        Coords2x2(2, 4, 1, 2).inverse_mod(F7)  # det = 0


def test_change_coordinates_identity_and_swap():
    B = ppl("y - x\nx^2", F7)
    assert gb_equal(change_coordinates_groebner(B, Coords2x2(1, 0, 0, 1)), B)
    got = change_coordinates_groebner(B, Coords2x2(0, 1, 1, 0))
    want = oracle.buchberger(ppl("x - y\ny^2", F7))
    assert gb_equal(got, want)
    # the maximal ideal at the origin is stable under linear changes
    B = ppl("y\nx", F7)
    assert gb_equal(change_coordinates_groebner(B, Coords2x2(3, 1, 2, 4)), B)


def test_change_coordinates_roundtrip():
    rng = random.Random(53)
    for _ in range(10):
        F, B = random_noether_system(rng, F7, 2, 2, 2)
        while True:
            gam = Coords2x2(*(rng.randrange(7) for _ in range(4)))
            if F7.of(gam.det()) != 0:
                break
        inv = gam.inverse_mod(F7)
        there = change_coordinates_groebner(B, gam)
        back = change_coordinates_groebner(there, inv)
        assert gb_equal(back, B)


def test_noether_success_rate():
    # fraction of draws killing the y^d coefficient stays below 1/2^(P+1)
    rng = random.Random(54)
    P = 1
    fails = 0
    trials = 220
    for _ in range(trials):
        f = random_bipoly(rng, ZZ, 3, 1, bound=8, density=0.9)
        if f.is_zero or f.total_degree < 1:
            continue
        d = f.total_degree
        gam = sample_gamma(P, d, rng)
        if apply_coords(f, gam).coeff(0, d) == 0:
            fails += 1
    assert fails / trials < 1 / 2 ** (P + 1)
