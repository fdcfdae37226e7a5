"""Hermite normal form over K[x] and Howell normal form over K[x]/x^k.

Both forms use column operations and are lower echelon: nonzero columns
first, pivot rows strictly increasing, where the pivot of a column is its
first nonzero entry from the top.  Hermite pivots are monic; Howell pivots
are powers of x.  Matrices are column-major lists as in sylvester.py.

The algorithms are classical cubic elimination.  Howell closure comes from
the augmentation trick: whenever a pivot x^c with c > 0 is established, the
annihilating multiple x^(k-c) times that column re-enters the worklist.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .rings import UniPoly


@dataclass
class HermiteNF:
    cols: list
    nrows: int
    pivot_rows: list  # row index of each nonzero column's pivot


@dataclass
class HowellNF:
    cols: list
    nrows: int
    k: int
    pivot_rows: list
    pivot_vals: list  # exponents c_i, pivot of column i is x^(c_i)


def _first_nonzero(col):
    for i, e in enumerate(col):
        if not e.is_zero:
            return i
    return None


def hermite_form(cols, nrows):
    """Hermite normal form of a column-major matrix over a field K[x]."""
    if not cols:
        return HermiteNF(cols=[], nrows=nrows, pivot_rows=[])
    ring = cols[0][0].ring
    work = [list(c) for c in cols]
    m = len(work)
    npiv = 0
    pivot_rows = []
    for row in range(nrows):
        live = [j for j in range(npiv, m) if not work[j][row].is_zero]
        if not live:
            continue
        # Euclid across the candidate columns until one survives at this row.
        while len(live) > 1:
            live.sort(key=lambda j: work[j][row].degree)
            base = live[0]
            e0 = work[base][row]
            keep = [base]
            for j in live[1:]:
                q, _ = work[j][row].divrem(e0)
                cj, cb = work[j], work[base]
                for i in range(row, nrows):
                    cj[i] = cj[i] - q * cb[i]
                if not cj[row].is_zero:
                    keep.append(j)
            live = keep
        j = live[0]
        work[npiv], work[j] = work[j], work[npiv]
        col = work[npiv]
        inv = ring.inv(col[row].lc)
        if col[row].lc != ring.one:
            for i in range(row, nrows):
                col[i] = col[i].scale(inv)
        # Degree-reduce this pivot row across the earlier pivot columns.
        for l in range(npiv):
            e = work[l][row]
            if e.degree >= col[row].degree:
                q, _ = e.divrem(col[row])
                cl = work[l]
                for i in range(row, nrows):
                    cl[i] = cl[i] - q * col[i]
        pivot_rows.append(row)
        npiv += 1
        if npiv == m:
            break
    for j in range(npiv, m):
        work[j] = [UniPoly.zero(ring)] * nrows
    return HermiteNF(cols=work, nrows=nrows, pivot_rows=pivot_rows)


def _verify_hermite_checks(H):
    """Individual (name, ok) Hermite property checks, for tests and audits."""
    checks = []
    seen_zero = False
    order_ok = True
    for col in H.cols:
        if _first_nonzero(col) is None:
            seen_zero = True
        elif seen_zero:
            order_ok = False
    checks.append(("nonzero-columns-first", order_ok))
    pivots = [(_first_nonzero(c), j) for j, c in enumerate(H.cols)
              if _first_nonzero(c) is not None]
    rows = [r for r, _ in pivots]
    checks.append(("pivot-rows-increasing", rows == sorted(rows) and len(set(rows)) == len(rows)))
    for r, j in pivots:
        piv = H.cols[j][r]
        checks.append(("pivot-monic", (not piv.is_zero) and piv.lc == piv.ring.one))
        for l in range(j):
            e = H.cols[l][r]
            checks.append(("left-entry-reduced", e.degree < piv.degree))
    return checks


def verify_hermite(H):
    return all(ok for _, ok in _verify_hermite_checks(H))


def reduce_against_hermite(col, H):
    """Remainder of a column vector against the span of a Hermite form."""
    out = list(col)
    pivots = [(r, j) for j, c in enumerate(H.cols)
              for r in [_first_nonzero(c)] if r is not None]
    for r, j in pivots:
        if out[r].is_zero:
            continue
        piv = H.cols[j][r]
        q, _ = out[r].divrem(piv)
        if q.is_zero:
            continue
        pc = H.cols[j]
        for i in range(r, H.nrows):
            out[i] = out[i] - q * pc[i]
    return out


def _val_unit(e, k):
    """Write e = x^v * u mod x^k with u a unit; e must be nonzero."""
    v = e.valuation()
    u = UniPoly(e.ring, e.coeffs[v:])
    return v, u


def howell_form(cols, nrows, k):
    """Howell normal form over K[x]/x^k of a column-major matrix.

    Entries must already be reduced mod x^k.  The output is padded with
    zero columns up to max(len(cols), nrows) so the closure columns fit.
    """
    ncols_out = max(len(cols), nrows)
    if not cols:
        return HowellNF(cols=[], nrows=nrows, k=k, pivot_rows=[], pivot_vals=[])
    ring = cols[0][0].ring
    zero = UniPoly.zero(ring)
    pivots = {}  # row -> (column, valuation)
    work = deque(list(c) for c in cols)

    def scaled(col, u, start):
        out = list(col)
        for i in range(start, nrows):
            out[i] = (out[i] * u).truncate(k)
        return out

    while work:
        col = work.popleft()
        for row in range(nrows):
            e = col[row]
            if e.is_zero:
                continue
            v, u = _val_unit(e, k)
            if row not in pivots:
                col = scaled(col, u.inverse_mod_xk(k), row)
                pivots[row] = (col, v)
                if v > 0:
                    work.append(scaled(col, UniPoly.x_pow(ring, k - v), row))
                break
            pcol, pv = pivots[row]
            if v >= pv:
                q = UniPoly.x_pow(ring, v - pv) * u
                for i in range(row, nrows):
                    col[i] = (col[i] - q * pcol[i]).truncate(k)
            else:
                col = scaled(col, u.inverse_mod_xk(k), row)
                pivots[row] = (col, v)
                work.append(pcol)
                if v > 0:
                    work.append(scaled(col, UniPoly.x_pow(ring, k - v), row))
                break
        # fully reduced columns fall off the end and are dropped

    rows_sorted = sorted(pivots)
    out_cols = [pivots[r][0] for r in rows_sorted]
    pivot_vals = [pivots[r][1] for r in rows_sorted]
    # Canonical off-pivot reduction: left of each pivot, entries mod x^c.
    for i, r in enumerate(rows_sorted):
        c = pivot_vals[i]
        pc = out_cols[i]
        for l in range(i):
            e = out_cols[l][r]
            if e.degree >= c:
                q = UniPoly(ring, e.coeffs[c:])
                for ii in range(r, nrows):
                    out_cols[l][ii] = (out_cols[l][ii] - q * pc[ii]).truncate(k)
    while len(out_cols) < ncols_out:
        out_cols.append([zero] * nrows)
    return HowellNF(cols=out_cols, nrows=nrows, k=k,
                    pivot_rows=rows_sorted, pivot_vals=pivot_vals)


def reduce_against_howell(col, B):
    """Remainder of a column against a Howell form over K[x]/x^k."""
    out = [e.truncate(B.k) for e in col]
    ring = out[0].ring if out else None
    for i, r in enumerate(B.pivot_rows):
        e = out[r]
        if e.is_zero:
            continue
        c = B.pivot_vals[i]
        v = e.valuation()
        if v < c:
            break  # not reducible; remainder is nonzero
        q = UniPoly(ring, e.coeffs[c:])
        pc = B.cols[i]
        for ii in range(r, B.nrows):
            out[ii] = (out[ii] - q * pc[ii]).truncate(B.k)
    return out


def _verify_howell_checks(B, original=None, rng=None, span_samples=8):
    """Individual (name, ok) checks for the five Howell properties, plus
    optional mutual-span containment against the original matrix."""
    checks = []
    nz = [j for j, c in enumerate(B.cols) if _first_nonzero(c) is not None]
    checks.append(("nonzero-prefix", nz == list(range(len(nz)))))
    pivots = []
    for j in nz:
        r = _first_nonzero(B.cols[j])
        pivots.append((r, j))
    rows = [r for r, _ in pivots]
    checks.append(("pivot-rows-increasing", rows == sorted(rows) and len(set(rows)) == len(rows)))
    ring = B.cols[0][0].ring if B.cols else None
    for r, j in pivots:
        piv = B.cols[j][r]
        v = piv.valuation()
        checks.append(("pivot-power-of-x", piv == UniPoly.x_pow(ring, v)))
        for l in range(j):
            e = B.cols[l][r]
            checks.append(("left-entry-reduced", e.degree < v))
    if original is not None:
        for col in original:
            rem = reduce_against_howell(col, B)
            checks.append(("original-column-in-span", all(e.is_zero for e in rem)))
    if rng is not None and pivots:
        # Property 5, constructively: reduce a random span element against
        # the leading i columns; what is left has at least j_i leading zeros
        # and must be a combination of the trailing columns.
        src = original if original is not None else B.cols
        for _ in range(span_samples):
            i = rng.randrange(len(pivots)) + 1  # split after i leading columns
            r_i = pivots[i - 1][0]
            v = _random_span_element(src, B.nrows, B.k, rng)
            head = HowellNF(cols=B.cols[:i], nrows=B.nrows, k=B.k,
                            pivot_rows=B.pivot_rows[:i], pivot_vals=B.pivot_vals[:i])
            w = reduce_against_howell(v, head)
            checks.append(("span-leading-zeros", all(e.is_zero for e in w[:r_i + 1])))
            tail = HowellNF(cols=B.cols[i:len(pivots)], nrows=B.nrows, k=B.k,
                            pivot_rows=B.pivot_rows[i:], pivot_vals=B.pivot_vals[i:])
            rem = reduce_against_howell(w, tail)
            checks.append(("span-closure-witness", all(e.is_zero for e in rem)))
    return checks


def _random_span_element(cols, nrows, k, rng):
    """Random K[x]/x^k combination of the given columns."""
    if not cols:
        return [UniPoly.zero(None)] * nrows
    ring = cols[0][0].ring
    out = [UniPoly.zero(ring)] * nrows
    for col in cols:
        a = UniPoly(ring, [ring.of(rng.randrange(ring.p)) for _ in range(k)])
        for i in range(nrows):
            out[i] = (out[i] + a * col[i]).truncate(k)
    return out


def verify_howell(B, original=None, rng=None):
    return all(ok for _, ok in _verify_howell_checks(B, original, rng))
