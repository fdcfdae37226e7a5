"""2x2 linear changes of coordinates and their action on polynomials.

The action is f^g = f(g11*x + g21*y, g12*x + g22*y), so composing
transforms multiplies matrices on the left: (f^A)^B = f^(BA).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .rings import BiPoly, NonInvertibleError


@dataclass(frozen=True)
class Coords2x2:
    g11: int
    g12: int
    g21: int
    g22: int

    def det(self):
        return self.g11 * self.g22 - self.g12 * self.g21

    def entries(self):
        return (self.g11, self.g12, self.g21, self.g22)

    def inverse_mod(self, ring):
        """Inverse matrix with entries in F_p; raises when singular mod p."""
        d = ring.of(self.det())
        if not ring.is_unit(d):
            raise NonInvertibleError("coordinate change is singular mod %d" % ring.p)
        di = ring.inv(d)
        return Coords2x2(
            g11=ring.mul(ring.of(self.g22), di),
            g12=ring.mul(ring.of(-self.g12), di),
            g21=ring.mul(ring.of(-self.g21), di),
            g22=ring.mul(ring.of(self.g11), di),
        )


def apply_coords(f, gamma):
    """f(g11*x + g21*y, g12*x + g22*y), over f's own coefficient ring."""
    ring = f.ring
    u = BiPoly.from_terms(ring, {(1, 0): gamma.g11, (0, 1): gamma.g21})
    v = BiPoly.from_terms(ring, {(1, 0): gamma.g12, (0, 1): gamma.g22})
    out = BiPoly.zero(ring)
    vpow = BiPoly.const(ring, 1)
    for i, row in enumerate(f.rows):
        if not row.is_zero:
            # row(u) by Horner in the first substituted variable
            acc = BiPoly.zero(ring)
            for c in reversed(row.coeffs):
                acc = acc * u + BiPoly.const(ring, c)
            out = out + acc * vpow
        if i + 1 < len(f.rows):
            vpow = vpow * v
    return out


def sample_gamma(P, d, rng, max_tries=64):
    """Uniform entries in {0, ..., 2^(P+2) * (d^4 + d)}, resampled until the
    determinant is nonzero."""
    a1 = d ** 4 + d
    hi = (1 << (P + 2)) * a1
    for _ in range(max_tries):
        g = Coords2x2(*(rng.randint(0, hi) for _ in range(4)))
        if g.det() != 0:
            return g
    raise RuntimeError("could not sample an invertible coordinate change")


def change_coordinates_groebner(B, gamma_p, extra_generators=None):
    """Basis of the ideal generated by the transforms of B's elements, over
    F_p; gamma_p must already be reduced mod p (entries in the field).

    extra_generators may hold additional polynomials known to generate the
    same ideal (for the driver: the untransformed input system); they do not
    change the result but speed up the Buchberger recomputation."""
    if len(B) == 1 and not B[0].is_zero and B[0].lt()[0] == (0, 0):
        return list(B)  # unit ideal is fixed by any substitution
    transformed = [apply_coords(g, gamma_p) for g in B]
    if extra_generators:
        transformed = list(extra_generators) + transformed
    return oracle.buchberger(transformed)
