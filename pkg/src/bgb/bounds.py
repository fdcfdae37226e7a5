"""Closed-form height and prime-interval bounds.

All heights are natural logarithms.  Bounds feed prime sizes and loop
caps, so every floating-point step rounds upward: over-approximating is
safe, under-approximating is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groebner_engine import DeltaCase, delta_bound

_INF = math.inf


def _up(x):
    """Round a float up one ulp."""
    if x == 0 or x == _INF:
        return x
    return math.nextafter(x, _INF)


def bound_B(n, d, h):
    """Height bound for Hermite forms of n x n matrices of degree-d,
    height-h integer polynomials: (N+1)h + N log N + log(n(d+1))."""
    N = n * n * d - n * d + n
    out = _up((N + 1) * h)
    if N > 1:
        out = _up(out + _up(N * _up(math.log(N))))
    return _up(out + _up(math.log(n * (d + 1))))


def bound_C(t, d, D, h):
    """Height bound through the squarified Sylvester matrix: B(tD,d,h) + h + log 2."""
    return _up(_up(bound_B(t * D, d, h) + h) + math.log(2))


def height_bound_H(case, t, d, d_y, h):
    """Bound on the common-denominator height of the output basis."""
    delta = delta_bound(case, d, d_y).value
    return bound_C(t, d, delta, h)


@dataclass(frozen=True)
class BoundContext:
    t: int
    d: int
    d_y: int
    h: float
    P: int


@dataclass(frozen=True)
class BoundReport:
    A1: int
    h_prime: float
    C_F: float
    C_H: float
    A2: float
    A3: float
    B: int
    B_prime: int
    b_bound: float
    k0_bound: float

    def as_dict(self):
        return {
            "A1": self.A1, "h_prime": self.h_prime, "C_F": self.C_F,
            "C_H": self.C_H, "A2": self.A2, "A3": self.A3,
            "B": self.B, "B_prime": self.B_prime,
            "b_bound": self.b_bound, "k0_bound": self.k0_bound,
        }


def prime_interval_bounds(ctx):
    """All quantities steering prime selection: the first prime is drawn
    from [B+1, 2B], the witness prime from [B'+1, 2B']."""
    a1 = ctx.d ** 4 + ctx.d
    h_prime = _up(ctx.h + _up(ctx.d * _up(ctx.P + 5 + _up(math.log(a1)))))
    c_f = bound_C(ctx.t, ctx.d, delta_bound(DeltaCase.GENERAL, ctx.d).value, ctx.h)
    c_h = bound_C(ctx.t, ctx.d, delta_bound(DeltaCase.NOETHER, ctx.d, ctx.d).value, h_prime)
    a2 = _up(_up(c_f + c_h) + h_prime)
    a3 = _up(_up(math.log2(8 * c_f)) * _up(2 * c_f + math.log(4)))
    if not (math.isfinite(a2) and math.isfinite(a3)):
        raise OverflowError("prime-interval bounds overflow double precision")
    B = (1 << (ctx.P + 3)) * math.ceil(a2)
    B_prime = (1 << (ctx.P + 3)) * math.ceil(a2 + a3)
    return BoundReport(A1=a1, h_prime=h_prime, C_F=c_f, C_H=c_h, A2=a2, A3=a3,
                       B=B, B_prime=B_prime, b_bound=c_f, k0_bound=8 * c_f)
