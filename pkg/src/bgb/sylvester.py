"""Extended Sylvester matrices and their squarification.

Matrices over K[x] are stored column-major: a matrix is a list of columns,
each column a list of UniPoly entries of a fixed length (the row count).
Rows are indexed top to bottom by y^(n-1), ..., y, 1 so that a column is
the pi_n image of a bivariate polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import BiPoly, QuadraticExtension, UniPoly


def pi_n(f, n):
    """Vector [f_{n-1} ... f_0]^T of y-coefficients of f, top degree first."""
    if not f.is_zero and f.deg_y >= n:
        raise ValueError("deg_y(f) = %d is not below %d" % (f.deg_y, n))
    return [f.row(n - 1 - i) for i in range(n)]


def pi_n_inverse(col, ring=None):
    """Bivariate polynomial with y^(n-1-i) coefficient col[i]."""
    ring = ring if ring is not None else col[0].ring
    return BiPoly(ring, list(reversed(col)))


@dataclass
class ExtendedSylvester:
    """Block matrix [S_1 ... S_t]; column j of S_i is pi(y^(D-1-j) * f_i)."""

    cols: list
    nrows: int
    d_y: int
    D: int
    t: int
    ring: object


def build_extended_sylvester(F, D):
    if len(F) < 2:
        raise ValueError("need at least two generators, got %d" % len(F))
    if D < 1:
        raise ValueError("cofactor window D must be positive")
    ring = F[0].ring
    d_y = max(f.deg_y for f in F)
    n = d_y + D
    cols = []
    for f in F:
        for j in range(D):
            cols.append(pi_n(f.mul_monomial(0, D - 1 - j), n))
    return ExtendedSylvester(cols=cols, nrows=n, d_y=d_y, D=D, t=len(F), ring=ring)


@dataclass
class SquareSylvester:
    """S^sq: permuted S on top, [0 | I] below, square of size tD."""

    cols: list
    nrows: int
    top_rows: int
    permutation: list
    base: ExtendedSylvester


class RankDeficientError(ValueError):
    """S does not have full row rank: ideal not zero-dimensional at this
    modulus, or the window D is too small."""


def _column_rank_profile(scalar_cols, nrows, field):
    """Leftmost independent column set of a scalar matrix, by elimination."""
    work = [list(c) for c in scalar_cols]
    profile = []
    pivots = []  # (row, col_index_in_work) with rows distinct
    for j, col in enumerate(work):
        # reduce against established pivots
        for (r, pj) in pivots:
            if col[r] != field.zero:
                f = field.mul(col[r], field.inv(work[pj][r]))
                pc = work[pj]
                for i in range(nrows):
                    col[i] = field.sub(col[i], field.mul(f, pc[i]))
        r = next((i for i in range(nrows) if col[i] != field.zero), None)
        if r is not None:
            pivots.append((r, j))
            profile.append(j)
            if len(profile) == nrows:
                break
    return profile


def squarify(S, rng, max_tries=8):
    """Column-permute S so the leading (d_y+D) minor is nonzero, then pad
    with a [0 | I] block to a square matrix.

    The permutation comes from the column rank profile of S evaluated at a
    random point; callers certify it afterwards through the Hermite pivot
    count and may retry.
    """
    if S.D < S.d_y:
        raise ValueError("window D = %d below d_y = %d is not supported" % (S.D, S.d_y))
    n, m = S.nrows, len(S.cols)
    field = S.ring
    # Small fields cannot feed Schwartz-Zippel; evaluate in a quadratic extension.
    if field.p < 4 * m * m:
        ev_field = QuadraticExtension(field.p)
        draw = lambda: (rng.randrange(field.p), rng.randrange(field.p))
    else:
        ev_field = field
        draw = lambda: rng.randrange(field.p)
    profile = None
    for _ in range(max_tries):
        a = draw()
        scalar = [[e.eval(a, ev_field) if ev_field is not field else e.eval(a)
                   for e in col] for col in S.cols]
        profile = _column_rank_profile(scalar, n, ev_field)
        if len(profile) == n:
            break
    if profile is None or len(profile) != n:
        raise RankDeficientError(
            "extended Sylvester matrix is rank deficient: ideal not "
            "zero-dimensional at this modulus")
    rest = [j for j in range(m) if j not in set(profile)]
    perm = list(profile) + rest
    extra = m - n
    zero = UniPoly.zero(field)
    one = UniPoly.const(field, field.one)
    cols = []
    for pos, j in enumerate(perm):
        col = list(S.cols[j])
        tail = [zero] * extra
        if pos >= n:
            tail[pos - n] = one
        cols.append(col + tail)
    return SquareSylvester(cols=cols, nrows=n + extra, top_rows=n,
                           permutation=perm, base=S)
