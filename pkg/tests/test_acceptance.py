"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; the whole module takes several minutes.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from bgb import oracle
from bgb.bounds import height_bound_H, prime_interval_bounds, BoundContext
from bgb.coords import Coords2x2, apply_coords
from bgb.driver import (DriverConfig, PositiveDimensionalError,
                        RetriesExhaustedError, groebner_basis_main)
from bgb.groebner_engine import (DeltaCase, groebner_basis_at_zero,
                                 hermite_groebner_basis, howell_groebner_basis)
from bgb.lifting import (UnluckyPrimeError, init_lift, lift_step,
                         rational_reconstruct, reconstruct_basis)
from bgb.normal_forms import (_verify_hermite_checks, _verify_howell_checks,
                              hermite_form, howell_form,
                              reduce_against_hermite)
from bgb.primes import random_prime_in
from bgb.rings import (ZZ, QQ, GF, BiPoly, UniPoly, height, rational_mod,
                       reduce_mod)
from conftest import (gb_equal, pp, ppl, random_bipoly, random_degree_system,
                      random_noether_system)
from test_lifting import _box_search
from test_normal_forms import random_matrix, random_unimodular_ops, trunc_cols

SEED = 20260810
CORPUS_SIZE = 200


def _report(num, name, ok, detail=""):
    line = "ACCEPTANCE %2d %-28s %s" % (num, name, "PASS" if ok else "FAIL")
    if detail:
        line += "  (%s)" % detail
    print("\n" + line)
    assert ok, line


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(SEED)
    out = []
    while len(out) < CORPUS_SIZE:
        t = rng.choice([2, 3])
        d = rng.choice([2, 3, 4])
        out.append(random_degree_system(rng, t, d))
    return out


@pytest.fixture(scope="module")
def corpus_runs(corpus):
    runs = []
    for i, (F, _) in enumerate(corpus):
        runs.append(groebner_basis_main(F, DriverConfig(seed=SEED + i, P=20)))
    return runs


def test_criterion_1_oracle_equivalence(corpus, corpus_runs):
    bad = sum(0 if gb_equal(r.basis, G) else 1
              for (F, G), r in zip(corpus, corpus_runs))
    _report(1, "full-pipeline oracle match", bad == 0,
            "%d systems, %d mismatches" % (len(corpus), bad))


def test_criterion_2_hermite_engine():
    rng = random.Random(SEED + 1)
    bad = 0
    n = 0
    while n < 500:
        field = GF(rng.choice([5, 7, 101, 32003]))
        t = rng.choice([2, 3])
        d_y = rng.randint(1, 3)
        F, G_oracle = random_noether_system(rng, field, t, d_y, rng.randint(1, 3))
        G = hermite_groebner_basis(F, max(f.deg_y for f in F), rng)
        if not gb_equal(G, G_oracle):
            bad += 1
        n += 1
    # Delta_2 path: t = 2, no Noether condition, d <= 2, D = 21
    m = 0
    while m < 12:
        field = GF(rng.choice([5, 7, 101]))
        F = [random_bipoly(rng, field, 2, 2, density=0.6) for _ in range(2)]
        if any(f.is_zero or f.total_degree > 2 for f in F):
            continue
        G_oracle = oracle.buchberger(F)
        if not G_oracle or not oracle.is_zero_dimensional(G_oracle):
            continue
        if not gb_equal(hermite_groebner_basis(F, 21, rng), G_oracle):
            bad += 1
        m += 1
    _report(2, "Hermite engine vs oracle", bad == 0,
            "%d Noether + %d Delta2 instances" % (n, m))


def test_criterion_3_howell_engine():
    rng = random.Random(SEED + 2)
    bad = 0
    n = 0
    ks = [1, 2, 4, 8]
    while n < 104:
        field = GF(rng.choice([5, 7, 101]))
        t = rng.choice([2, 3])
        F = [random_bipoly(rng, field, 2, 2, density=0.6) for _ in range(t)]
        if any(f.is_zero for f in F):
            continue
        k = ks[n % 4]
        D = max(max(f.total_degree for f in F), max(f.deg_y for f in F), 1)
        xk = BiPoly.from_terms(field, {(k, 0): 1})
        want = oracle.buchberger(F + [xk])
        if not oracle.is_zero_dimensional(want):
            continue  # the engine's contract assumes dimension zero
        if not gb_equal(howell_groebner_basis(F, k, D), want):
            bad += 1
        n += 1
    # at-zero vs the primary oracle, after a random shear
    m = 0
    while m < 30:
        field = GF(rng.choice([7, 101]))
        F = [random_bipoly(rng, field, 2, 2, density=0.7) for _ in range(2)]
        if any(f.is_zero for f in F):
            continue
        c = rng.randrange(1, field.p)
        shear = Coords2x2(1, 0, c, 1)  # x -> x + c y in the first slot
        H = [apply_coords(f, shear) for f in F]
        d = max(f.total_degree for f in H)
        want = oracle.primary_at_origin_oracle(H, d)
        try:
            got = groebner_basis_at_zero(H)
        except Exception:
            continue  # shear failed to make the projection one-to-one
        if not gb_equal(got, want):
            bad += 1
        m += 1
    _report(3, "Howell engine vs oracle", bad == 0,
            "%d k-instances + %d at-zero instances" % (n, m))


def test_criterion_4_detaching_formula():
    from bgb.normal_forms import HermiteNF
    from bgb.groebner_engine import detaching_from_hermite
    from bgb.sylvester import build_extended_sylvester, squarify
    rng = random.Random(SEED + 3)
    bad = 0
    for trial in range(50):
        field = GF(32003) if trial % 5 else QQ
        df = rng.randint(0, 5)
        dg = rng.randint(df + 1, 6)
        if field is QQ:
            f = UniPoly(QQ, [Fraction(rng.randint(-9, 9)) for _ in range(df + 1)])
            g = UniPoly(QQ, [Fraction(rng.randint(-9, 9)) for _ in range(dg)] + [Fraction(1)])
        else:
            f = UniPoly(field, [rng.randrange(field.p) for _ in range(df + 1)])
            g = UniPoly(field, [rng.randrange(field.p) for _ in range(dg)] + [1])
        if f.is_zero:
            continue
        F = [BiPoly(field, [-f, UniPoly.const(field, 1)]), BiPoly(field, [g])]
        S = build_extended_sylvester(F, 6)
        sq = squarify(S, rng) if field is not QQ else None
        if sq is None:
            # over Q take the matrix directly: it is already full rank
            H = hermite_form(S.cols, S.nrows)
        else:
            Hsq = hermite_form(sq.cols, sq.nrows)
            H = HermiteNF(cols=[col[:S.nrows] for col in Hsq.cols],
                          nrows=S.nrows, pivot_rows=[])
        A = detaching_from_hermite(H, S.d_y, 6, up_to=6)
        if A[0] != BiPoly(field, [g]):
            bad += 1
        fp = f
        for i in range(1, 7):
            want = BiPoly.from_terms(field, {(0, i): 1}) - BiPoly(field, [fp % g])
            if A[i] != want:
                bad += 1
            fp = fp * f
    _report(4, "detaching-basis formula", bad == 0, "50 pairs, degrees <= 6")


def test_criterion_5_rational_reconstruction():
    p, k = 11, 4
    bad = 0
    for alpha in range(p ** k):
        want = _box_search(alpha, p, k)
        got = rational_reconstruct(alpha, p, k)
        if want is None or want == "ambiguous":
            ok = got is None or want == "ambiguous"
        else:
            ok = got == want
        if not ok:
            bad += 1
    # threshold law: reconstruction succeeds at the first k with p^(k/2) > 2 e^b
    rng = random.Random(SEED + 4)
    checked = 0
    for _ in range(200):
        eta = rng.randint(-9999, 9999)
        theta = rng.randint(1, 9999)
        g = math.gcd(abs(eta), theta)
        eta //= g
        theta //= g
        if theta % p == 0:
            continue
        b = max(math.log(abs(eta)) if eta else 0.0, math.log(theta))
        kk = 2
        while p ** (kk // 2) <= 2 * math.exp(b):
            kk *= 2
        alpha = (eta * pow(theta, -1, p ** kk)) % p ** kk
        if rational_reconstruct(alpha, p, kk) != (eta, theta):
            bad += 1
        checked += 1
    _report(5, "rational reconstruction", bad == 0,
            "14641-residue sweep + %d threshold checks" % checked)


def test_criterion_6_bad_prime():
    F = ppl("2*y^2 - x\nx^2 - y")
    accepted_wrong = False
    try:
        r = groebner_basis_main(F, DriverConfig(seed=1, forced_p=2,
                                                forced_p2=32003, max_rounds=4,
                                                practical_prime_bits=29))
        want = oracle.buchberger([f.map_coeffs(Fraction, QQ) for f in F])
        accepted_wrong = not gb_equal(r.basis, want)
    except (RetriesExhaustedError, PositiveDimensionalError):
        pass
    ok_half = False
    r = groebner_basis_main(F, DriverConfig(seed=2, practical_prime_bits=29))
    ok_half = r.basis[1].coeff(1, 0) == Fraction(-1, 2)
    _report(6, "bad-prime behavior", (not accepted_wrong) and ok_half,
            "p=2 rejected, -1/2 recovered otherwise")


def _case_of(F):
    d_y = max(f.deg_y for f in F)
    if any(f.deg_y == d_y and f.row(d_y).degree == 0 for f in F):
        return DeltaCase.NOETHER
    return DeltaCase.TWO_GEN if len(F) == 2 else DeltaCase.GENERAL


def test_criterion_7_height_bounds(corpus, corpus_runs):
    bad = 0
    for (F, G), r in zip(corpus, corpus_runs):
        t = len(F)
        d = max(f.total_degree for f in F)
        d_y = max(f.deg_y for f in F)
        h = max(height(f) for f in F)
        try:
            cap = height_bound_H(_case_of(F), t, d, d_y, h)
        except OverflowError:
            continue
        if r.height_nats > cap:
            bad += 1
    # lucky-prime density over [B+1, 2B]
    rng = random.Random(SEED + 5)
    trials = 0
    unlucky = 0
    for (F, G) in corpus[:8]:
        t = len(F)
        d = max(f.total_degree for f in F)
        d_y = max(f.deg_y for f in F)
        h = max(height(f) for f in F)
        rep = prime_interval_bounds(BoundContext(t=t, d=d, d_y=d_y, h=h, P=20))
        for _ in range(25):
            p = random_prime_in(rep.B + 1, 2 * rep.B, rng)
            fld = GF(p)
            mod_gb = oracle.buchberger([reduce_mod(f, fld) for f in F])
            true_red = [g.map_coeffs(lambda c: rational_mod(c, fld), fld)
                        for g in G]
            if not gb_equal(mod_gb, true_red):
                unlucky += 1
            trials += 1
    density_ok = unlucky / trials <= 1 / 2 ** 22
    _report(7, "height-bound soundness", bad == 0 and density_ok,
            "%d/%d unlucky among sampled primes" % (unlucky, trials))


def test_criterion_8_precision_accounting(corpus_runs):
    bad = 0
    for r in corpus_runs:
        b_eff = max(r.height_nats, 1.0)  # log2(8b) is undefined at b = 0
        if r.iterations > math.log2(8 * b_eff) + 2:
            bad += 1
    _report(8, "precision accounting", bad == 0,
            "iterations <= log2(8 b) + 2 on %d runs" % len(corpus_runs))


def test_criterion_9_normal_form_axioms():
    rng = random.Random(SEED + 6)
    F3, F5 = GF(3), GF(5)
    checks = 0
    failures = 0
    matrices = 0
    while checks < 100_000:
        field = F3 if matrices % 2 else F5
        n, m = rng.randint(2, 4), rng.randint(2, 5)
        M = random_matrix(rng, field, n, m)
        H = hermite_form(M, n)
        hc = _verify_hermite_checks(H)
        failures += sum(1 for _, ok in hc if not ok)
        checks += len(hc)
        for col in M:
            rem = reduce_against_hermite(col, H)
            if not all(e.is_zero for e in rem):
                failures += 1
            checks += 1
        for _ in range(10):
            MU = random_unimodular_ops(rng, M, n, field)
            if hermite_form(MU, n).cols != H.cols:
                failures += 1
            checks += 1
        k = rng.randint(2, 3)
        Mk = trunc_cols(M, k)
        B = howell_form(Mk, n, k)
        bc = _verify_howell_checks(B, original=Mk, rng=rng)
        failures += sum(1 for _, ok in bc if not ok)
        checks += len(bc)
        for _ in range(5):
            MUk = trunc_cols(random_unimodular_ops(rng, Mk, n, field), k)
            B2 = howell_form(MUk, n, k)
            if B2.cols != B.cols:
                failures += 1
            checks += 1
        matrices += 1
    _report(9, "normal-form axioms", failures == 0,
            "%d checks over %d matrices" % (checks, matrices))


def test_success_accounting_soak():
    # driver invariant: zero verification-accepted wrong outputs across
    # >= 10^4 randomized runs (P = 20)
    rng = random.Random(SEED + 7)
    pool = [random_degree_system(rng, 2, 2) for _ in range(20)]
    wrong_accepted = 0
    runs = 10_000
    for i in range(runs):
        F, G = pool[i % len(pool)]
        try:
            r = groebner_basis_main(F, DriverConfig(seed=i, P=20,
                                                    practical_prime_bits=29))
        except (RetriesExhaustedError, PositiveDimensionalError):
            continue  # a refusal is not a wrong acceptance
        if not gb_equal(r.basis, G):
            wrong_accepted += 1
    _report(0, "success-accounting soak", wrong_accepted == 0,
            "%d runs, %d wrong accepted" % (runs, wrong_accepted))


def test_criterion_10_lift_step_trend():
    F = ppl("y^3 - x^2 + 2*x*y + 1\nx^3 + x - 3")
    p = 7
    G1 = oracle.buchberger([reduce_mod(f, GF(p)) for f in F])
    times = {}
    for rep in range(3):
        st = init_lift(F, p, G1)
        while st.k < 256:
            t0 = time.perf_counter()
            st = lift_step(st)
            dt = time.perf_counter() - t0
            times[st.k] = min(times.get(st.k, dt), dt)
    # per-step cost should scale (at most) linearly in k log p; log p fixed
    base = max(times[16], 1e-4)
    ok = True
    details = []
    for k in (32, 64, 128, 256):
        ratio = times[k] / base
        allowed = 1.5 * (k / 16)
        details.append("k=%d %.1fx<=%.1fx" % (k, ratio, allowed))
        if ratio > allowed:
            ok = False
    _report(10, "lift-step time trend", ok, ", ".join(details))
