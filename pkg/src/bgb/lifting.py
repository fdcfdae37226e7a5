"""p-adic lifting of a Groebner basis, rational reconstruction, witness test.

Each basis element g is pinned by the linear system "g equals its leading
term plus an unknown tail supported on standard monomials, AND g lies in
the column span of the extended Sylvester matrix of the generators".  The
system matrix has integer entries fixed once; init_lift echelonizes it
modulo p, and every doubling step runs a Hensel/Dixon solve of the scaled
residual against that single factorization, digit by digit.  A digit that
fails its consistency rows means the prime is unlucky and the caller
restarts with fresh primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rings import QQ, BiPoly, GF, Zpk, rational_mod, NonInvertibleError

_NUMPY_ELIM_MAX_P = 1 << 31    # row operations stay within int64
_NUMPY_DOT_MAX_P = 1 << 25     # dot products stay within int64
_MAX_CELLS = 3_000_000


class UnluckyPrimeError(RuntimeError):
    """The modular data cannot be lifted; restart with a fresh prime."""


def staircase_of(lts):
    """Standard monomials under a zero-dimensional staircase of leading terms."""
    n0 = max(n for _, n in lts)
    out = []
    for b in range(n0):
        ms = [m for m, n in lts if n <= b]
        if not ms:
            raise UnluckyPrimeError("leading terms do not reach y-degree %d" % b)
        for a in range(min(ms)):
            out.append((a, b))
    return out


class _ModRREF:
    """Reduced row echelon form mod p of an integer matrix, with the row
    transform retained so later right-hand sides reuse the elimination."""

    def __init__(self, rows, p):
        self.p = p
        self.R = len(rows)
        self.C = len(rows[0]) if rows else 0
        if p < _NUMPY_ELIM_MAX_P:
            self._init_numpy(rows)
        else:
            self._init_python(rows)

    def _init_numpy(self, rows):
        p = self.p
        R, C = self.R, self.C
        A = np.zeros((R, C + R), dtype=np.int64)
        if R:
            if C:
                A[:, :C] = np.array(rows, dtype=np.int64) % p
            A[:, C:] = np.eye(R, dtype=np.int64)
        pivcols = []
        r = 0
        for c in range(C):
            if r == R:
                break
            nz = np.nonzero(A[r:, c])[0]
            if nz.size == 0:
                continue
            s = r + int(nz[0])
            if s != r:
                A[[r, s]] = A[[s, r]]
            inv = pow(int(A[r, c]), -1, p)
            if inv != 1:
                A[r] = (A[r] * inv) % p
            col = A[:, c].copy()
            col[r] = 0
            nzr = np.nonzero(col)[0]
            if nzr.size:
                A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
            pivcols.append(c)
            r += 1
        self.rank = r
        self.pivcols = pivcols
        self.T = A[:, C:]
        self._np = True

    def _init_python(self, rows):
        p = self.p
        R, C = self.R, self.C
        A = [[x % p for x in row] + [0] * R for row in rows]
        for i in range(R):
            A[i][C + i] = 1
        pivcols = []
        r = 0
        for c in range(C):
            if r == R:
                break
            s = next((i for i in range(r, R) if A[i][c]), None)
            if s is None:
                continue
            A[r], A[s] = A[s], A[r]
            inv = pow(A[r][c], -1, p)
            if inv != 1:
                A[r] = [(x * inv) % p for x in A[r]]
            piv = A[r]
            for i in range(R):
                f = A[i][c]
                if f and i != r:
                    A[i] = [(x - f * y) % p for x, y in zip(A[i], piv)]
            pivcols.append(c)
            r += 1
        self.rank = r
        self.pivcols = pivcols
        self.T = [row[C:] for row in A]
        self._np = False

    def transform(self, vec):
        """T . vec mod p as a Python list."""
        p = self.p
        if self._np and p < _NUMPY_DOT_MAX_P:
            v = np.array(vec, dtype=np.int64) % p
            return [int(x) for x in (self.T @ v) % p]
        T = self.T
        idx = [j for j, x in enumerate(vec) if x]
        return [sum(int(T[i][j]) * vec[j] for j in idx) % p for i in range(self.R)]

    def t_column(self, j):
        """Column j of T, i.e. the transform of a unit vector."""
        if self._np:
            return [int(x) for x in self.T[:, j]]
        return [row[j] for row in self.T]

    def solve_transformed(self, u):
        """Solution x of A x = rhs given u = T . rhs; None if inconsistent."""
        p = self.p
        if any(x % p for x in u[self.rank:]):
            return None
        x = [0] * self.C
        for i, c in enumerate(self.pivcols):
            x[c] = u[i] % p
        return x


def _lex_smaller(mon, lt):
    return (mon[1], mon[0]) < (lt[1], lt[0])


@dataclass
class _ElementSystem:
    lt: tuple
    tail: list            # standard monomials lex-below lt
    tail_rows: list       # row index of each tail monomial
    tcols: list           # cached T columns for the tail rows
    small: _ModRREF       # consistency system pinning the tail digits
    w: list               # cofactor unknowns, canonical mod p^k
    c: list               # tail unknowns, canonical mod p^k
    rh: list              # exact integer residual (v - M w + C c) / p^k


class _MembershipSystem:
    """Shared Sylvester-membership matrix for all basis elements: columns
    are the coefficients of x^a y^b f_j, rows are monomials."""

    def __init__(self, gens, p, D_w, X):
        self.gens = gens
        self.p = p
        self.D_w = D_w
        self.X = X
        self.d_y = max(g.deg_y for g in gens)
        self.d_x = max(g.deg_x for g in gens)
        self.NY = self.d_y + D_w
        self.NX = X + self.d_x + 1
        self.R = self.NY * self.NX
        self.col_shifts = [(j, a, b)
                           for j in range(len(gens))
                           for b in range(D_w)
                           for a in range(X + 1)]
        self.W = len(self.col_shifts)
        rows = [[0] * self.W for _ in range(self.R)]
        for cidx, (j, a, b) in enumerate(self.col_shifts):
            for (ga, gb), coef in gens[j].terms():
                rows[(gb + b) * self.NX + (ga + a)][cidx] = int(coef)
        self.rref = _ModRREF(rows, p)

    def row_of(self, mon):
        return mon[1] * self.NX + mon[0]

    def matvec(self, w):
        """Exact integer M . w, exploiting the shift structure of columns."""
        out = [0] * self.R
        NX = self.NX
        for cidx, wj in enumerate(w):
            if not wj:
                continue
            j, a, b = self.col_shifts[cidx]
            for (ga, gb), coef in self.gens[j].terms():
                out[(gb + b) * NX + (ga + a)] += int(coef) * wj
        return out


@dataclass
class LiftState:
    p: int
    k: int
    basis: list           # current basis image over Z/p^k
    staircase: list
    trivial: bool
    sys: object = None
    elements: list = None

    @property
    def ring(self):
        return Zpk(self.p, self.k)


def _element_basis_poly(ring, lt, tail, c):
    terms = {lt: 1}
    m = ring.modulus
    for mon, coef in zip(tail, c):
        if coef % m:
            terms[mon] = coef % m
    return BiPoly.from_terms(ring, terms)


def _pin_element(sys, lt, tail):
    """Assemble and solve one element's system mod p; None if the current
    window cannot express the element."""
    rref = sys.rref
    p = sys.p
    tail_rows = [sys.row_of(m) for m in tail]
    tcols = [rref.t_column(tr) for tr in tail_rows]
    nrows = rref.R - rref.rank
    small_rows = [[tc[rref.rank + i] for tc in tcols] for i in range(nrows)]
    small = _ModRREF(small_rows, p)
    if small.rank < len(tail):
        raise UnluckyPrimeError("tail coefficients are not pinned mod %d" % p)
    u = rref.t_column(sys.row_of(lt))
    neg_uN = [(-x) % p for x in u[rref.rank:]]
    c = small.solve_transformed(small.transform(neg_uN))
    if c is None:
        return None
    up = list(u)
    for coef, tc in zip(c, tcols):
        if coef:
            for i in range(rref.R):
                up[i] = (up[i] + coef * tc[i]) % p
    w = rref.solve_transformed(up)
    if w is None:
        return None
    return _ElementSystem(lt=lt, tail=tail, tail_rows=tail_rows, tcols=tcols,
                          small=small, w=w, c=c, rh=None)


def _exact_residual(sys, elem, power):
    """(v - M w + C c) / p^power, exactly; raises if not divisible."""
    out = sys.matvec(elem.w)
    for i in range(sys.R):
        out[i] = -out[i]
    out[sys.row_of(elem.lt)] += 1
    for coef, tr in zip(elem.c, elem.tail_rows):
        out[tr] += coef
    q = sys.p ** power
    rh = []
    for x in out:
        if x % q:
            raise UnluckyPrimeError("membership residual not divisible by p^k")
        rh.append(x // q)
    return rh


def init_lift(F, p, G1):
    """Set up the lift at precision k = 1 from the basis G1 of <F> mod p.

    F has integer coefficients; G1 is over GF(p).  Raises UnluckyPrimeError
    when the membership systems cannot be assembled consistently, which is
    also how an inconsistent G1 is detected.
    """
    if len(G1) == 1 and G1[0].lt()[0] == (0, 0):
        ring = Zpk(p, 1)
        return LiftState(p=p, k=1, basis=[BiPoly.const(ring, 1)],
                         staircase=[], trivial=True)
    lts = [g.lt()[0] for g in G1]
    if not any(n == 0 for _, n in lts) or not any(
            m == 0 and n > 0 for m, n in lts):
        raise UnluckyPrimeError("modular basis is not zero-dimensional")
    stair = staircase_of(lts)
    n0 = max(n for _, n in lts)
    m_top = max(m for m, _ in lts)
    d_y = max(g.deg_y for g in F)
    d_x = max(g.deg_x for g in F)
    D0 = max(1, d_y, n0 + 1 - d_y)
    X0 = m_top + d_x + 2
    for level in range(4):
        D_w = D0 << level
        X = X0 << level
        R = (d_y + D_w) * (X + d_x + 1)
        if level > 0 and R * (R + len(F) * D_w * (X + 1)) > _MAX_CELLS:
            break
        sys = _MembershipSystem(F, p, D_w, X)
        elements = []
        for g in G1:
            lt = g.lt()[0]
            tail = [m for m in stair if _lex_smaller(m, lt)]
            try:
                elem = _pin_element(sys, lt, tail)
            except UnluckyPrimeError:
                elem = None  # window too narrow to pin the tail; escalate
            if elem is None:
                elements = None
                break
            for mon, coef in zip(tail, elem.c):
                if g.coeff(*mon) != coef % p:
                    raise UnluckyPrimeError(
                        "solved tail disagrees with the given modular basis")
            elem.rh = _exact_residual(sys, elem, 1)
            elements.append(elem)
        if elements is not None:
            ring = Zpk(p, 1)
            basis = [_element_basis_poly(ring, e.lt, e.tail, e.c) for e in elements]
            return LiftState(p=p, k=1, basis=basis, staircase=stair,
                             trivial=False, sys=sys, elements=elements)
    raise UnluckyPrimeError("membership system inconsistent at every window level")


def _digit_solve(sys, elem, r_mod):
    """One Dixon digit: solve M dw - C dc = r mod p against the stored
    factorizations; raises UnluckyPrimeError on inconsistency."""
    rref = sys.rref
    p = sys.p
    u = rref.transform(r_mod)
    neg_uN = [(-x) % p for x in u[rref.rank:]]
    dc = elem.small.solve_transformed(elem.small.transform(neg_uN))
    if dc is None:
        raise UnluckyPrimeError("digit consistency rows failed")
    up = u
    for coef, tc in zip(dc, elem.tcols):
        if coef:
            for i in range(rref.R):
                up[i] = (up[i] + coef * tc[i]) % p
    dw = rref.solve_transformed(up)
    if dw is None:
        raise UnluckyPrimeError("digit pivot rows failed")
    return dw, dc


def lift_step(state):
    """Advance from precision k to 2k; the new basis image agrees with the
    old one mod p^k (nested-precision law)."""
    if state.trivial:
        return LiftState(p=state.p, k=2 * state.k, basis=state.basis,
                         staircase=state.staircase, trivial=True)
    p, k = state.p, state.k
    sys = state.sys
    pk = p ** k
    mod2 = pk * pk
    new_elements = []
    for elem in state.elements:
        rh = list(elem.rh)
        Dw = [0] * sys.W
        Dc = [0] * len(elem.tail)
        scale = 1
        for _ in range(k):
            dw, dc = _digit_solve(sys, elem, [x % p for x in rh])
            mw = sys.matvec(dw)
            for i in range(sys.R):
                rh[i] -= mw[i]
            for coef, tr in zip(dc, elem.tail_rows):
                rh[tr] += coef
            for i in range(sys.R):
                if rh[i] % p:
                    raise UnluckyPrimeError("digit residual not divisible by p")
                rh[i] //= p
            for j, x in enumerate(dw):
                if x:
                    Dw[j] += scale * x
            for j, x in enumerate(dc):
                if x:
                    Dc[j] += scale * x
            scale *= p
        new_elements.append(_ElementSystem(
            lt=elem.lt, tail=elem.tail, tail_rows=elem.tail_rows,
            tcols=elem.tcols, small=elem.small,
            w=[(a + pk * b) % mod2 for a, b in zip(elem.w, Dw)],
            c=[(a + pk * b) % mod2 for a, b in zip(elem.c, Dc)],
            rh=rh))
    ring = Zpk(p, 2 * k)
    basis = [_element_basis_poly(ring, e.lt, e.tail, e.c) for e in new_elements]
    return LiftState(p=p, k=2 * k, basis=basis, staircase=state.staircase,
                     trivial=False, sys=sys, elements=new_elements)


def rational_reconstruct(alpha, p, k):
    """The unique (eta, theta) with |eta| < p^(k/2)/2, 0 < theta <= p^(k/2),
    gcd(theta, p) = 1, gcd(eta, theta) = 1 and eta = theta * alpha mod p^k;
    None when no such pair exists."""
    m = p ** k
    alpha %= m
    s = math.isqrt(m)  # p^(k/2) for even k
    r0, r1 = m, alpha
    t0, t1 = 0, 1
    while 2 * r1 >= s:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    eta, theta = (r1, t1) if t1 > 0 else (-r1, -t1)
    if theta == 0 or theta > s or 2 * abs(eta) >= s:
        return None
    if math.gcd(theta, p) != 1 or math.gcd(eta, theta) != 1:
        return None
    return eta, theta


def reconstruct_basis(state):
    """Coefficient-wise rational reconstruction of the current basis image;
    None as soon as one coefficient fails."""
    p, k = state.p, state.k
    out = []
    for g in state.basis:
        terms = {}
        for mon, coef in g.terms():
            rec = rational_reconstruct(int(coef), p, k)
            if rec is None:
                return None
            terms[mon] = Fraction(rec[0], rec[1])
        out.append(BiPoly.from_terms(QQ, terms))
    return out


def verify_with_witness(G_rec, p_prime, G1_prime):
    """True iff every denominator is invertible mod p' and the reduction of
    G_rec equals the witness basis polynomial by polynomial."""
    if len(G_rec) != len(G1_prime):
        return False
    field = GF(p_prime)
    for g, wit in zip(G_rec, G1_prime):
        try:
            red = g.map_coeffs(lambda c: rational_mod(c, field), field)
        except NonInvertibleError:
            return False
        if red != wit:
            return False
    return True
