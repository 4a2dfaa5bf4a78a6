"""Discrete invariants of coherent sheaves on ribbon curves.

A ribbon is a projective curve X carrying a nowhere-reduced scheme
structure: its reduced subcurve C is a smooth curve of genus ``gbar``
and the nilradical N of O_X is a square-zero line bundle on C.  We
parametrize ribbons by ``(gbar, delta)`` with ``delta = -deg(N)``; the
arithmetic genus is then ``2*gbar - 1 + delta``.

Everything a coherent sheaf on X contributes to moduli bookkeeping is
discrete.  Restricting a sheaf F to C in the two canonical ways gives a
pair of ranks ``(r0, r1)`` and a pair of degrees ``(d0, d1)``, the
"complete type" of F.  Their sums ``R = r0 + r1`` and ``D = d0 + d1``
behave like rank and degree on a smooth curve and control the Hilbert
polynomial.  This module holds those data types and the exact
arithmetic between them.  Every quantity is an integer or a Fraction;
floating point is never used because all downstream conditions are
sharp inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DomainError",
    "IntegralityError",
    "RibbonParams",
    "CompleteType",
    "LocalType",
    "Invariants",
    "ribbon_genus",
    "invariants_of",
    "slope",
    "euler_characteristic",
    "hilbert_polynomial",
    "classical_invariants",
    "dual_invariants",
    "vector_bundle_invariants",
    "vb_parity_ok",
    "gvb_complete_type",
    "local_type_to_rank_pair",
    "rank_pair_to_local_type",
]


class DomainError(ValueError):
    """Raised when inputs lie outside the domain where an operation means anything."""


class IntegralityError(ValueError):
    """Raised when a degree would be forced to a half-integer, so no sheaf exists."""


@dataclass(frozen=True)
class RibbonParams:
    """Numeric shadow of a ribbon: reduced genus and conormal degree.

    ``delta`` is minus the degree of the nilradical line bundle N.  Most
    existence results downstream need ``delta > 0`` (the non-split,
    "genuinely non-reduced" range), but the parameter itself may be any
    integer.
    """

    gbar: int
    delta: int

    def __post_init__(self):
        if self.gbar < 0:
            raise DomainError(f"reduced genus must be nonnegative, got {self.gbar}")

    @property
    def genus(self) -> int:
        """Arithmetic genus of the ribbon."""
        return 2 * self.gbar - 1 + self.delta

    @property
    def deg_n(self) -> int:
        """Degree of the nilradical line bundle, the opposite sign of delta."""
        return -self.delta


def ribbon_genus(p: RibbonParams) -> int:
    """Arithmetic genus ``2*gbar - 1 + delta`` of the ribbon."""
    return p.genus


@dataclass(frozen=True)
class CompleteType:
    """Rank and degree data of a sheaf in both canonical restrictions.

    ``r0, d0`` are rank and degree of F restricted to the reduced curve,
    ``r1, d1`` those of N*F.  Any sheaf satisfies ``r0 >= r1 >= 0`` with
    ``r0 >= 1``; nothing constrains the degrees.
    """

    r0: int
    r1: int
    d0: int
    d1: int

    def __post_init__(self):
        if self.r0 < 1:
            raise DomainError(f"r0 must be positive, got {self.r0}")
        if not self.r0 >= self.r1 >= 0:
            raise DomainError(f"need r0 >= r1 >= 0, got ({self.r0}, {self.r1})")

    @property
    def rank_pair(self) -> tuple[int, int]:
        return (self.r0, self.r1)

    @property
    def degree_pair(self) -> tuple[int, int]:
        return (self.d0, self.d1)

    def __str__(self):
        return f"(({self.r0},{self.r1}),({self.d0},{self.d1}))"


@dataclass(frozen=True)
class LocalType:
    """Local model of a quasi locally free sheaf.

    At a generic point such a sheaf looks like ``a`` copies of the
    structure sheaf of the reduced curve plus ``b`` copies of the ribbon's
    own structure sheaf.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError(f"type multiplicities must be nonnegative, got ({self.a}, {self.b})")
        if self.a == 0 and self.b == 0:
            raise DomainError("the zero sheaf has no type")


@dataclass(frozen=True)
class Invariants:
    """Generalized rank and degree, the pair preserved by flat deformation."""

    R: int
    D: int

    def __post_init__(self):
        if self.R < 1:
            raise DomainError(f"generalized rank must be positive, got {self.R}")


def invariants_of(ct: CompleteType) -> Invariants:
    """Generalized rank and degree are the sums over the two restrictions."""
    return Invariants(ct.r0 + ct.r1, ct.d0 + ct.d1)


def slope(inv: Invariants) -> Fraction:
    """Slope D/R, the exact rational used by every stability comparison."""
    return Fraction(inv.D, inv.R)


def euler_characteristic(inv: Invariants, p: RibbonParams) -> int:
    """chi(F) = D + R*(1 - gbar); Riemann-Roch on the reduced curve, twice."""
    return inv.D + inv.R * (1 - p.gbar)


def hilbert_polynomial(inv: Invariants, p: RibbonParams, polarization_degree: int = 1) -> tuple[int, int]:
    """Coefficients (constant, linear) of the Hilbert polynomial.

    ``polarization_degree`` is the degree on the reduced curve of the
    ample bundle computing the polynomial; it must be at least 1.
    P(T) = chi(F) + R * polarization_degree * T.
    """
    if polarization_degree < 1:
        raise DomainError(f"polarization degree must be >= 1, got {polarization_degree}")
    return (euler_characteristic(inv, p), inv.R * polarization_degree)


def classical_invariants(inv: Invariants, p: RibbonParams) -> tuple[Fraction, Fraction]:
    """Rank and degree as measured against the ribbon's own structure sheaf.

    Both are half-integers in general: rank R/2 and degree D + R*delta/2.
    """
    half_r = Fraction(inv.R, 2)
    return (half_r, inv.D + half_r * p.delta)


def dual_invariants(inv: Invariants, p: RibbonParams, torsion_sections: int = 0) -> Invariants:
    """Invariants of the dual sheaf.

    Dualizing preserves R and sends D to ``-D - R*delta + t`` where t
    counts global sections of the torsion part of the restriction to the
    reduced curve.  t = 0 whenever that restriction is torsion-free, and
    then the map is an involution.
    """
    if torsion_sections < 0:
        raise DomainError(f"torsion section count must be nonnegative, got {torsion_sections}")
    return Invariants(inv.R, -inv.D - inv.R * p.delta + torsion_sections)


def vector_bundle_invariants(n: int, deg_restriction: int, p: RibbonParams) -> Invariants:
    """Invariants of a rank-n vector bundle on the ribbon.

    ``deg_restriction`` is the degree of the restriction to the reduced
    curve.  Generalized rank doubles; the degree picks up the twist by N.
    """
    if n < 1:
        raise DomainError(f"bundle rank must be positive, got {n}")
    return Invariants(2 * n, 2 * deg_restriction - n * p.delta)


def vb_parity_ok(inv: Invariants, p: RibbonParams) -> bool:
    """Whether (R, D) can come from a vector bundle on the ribbon.

    Needs R even and D of the same parity as (R/2)*delta; this is exactly
    the image of vector_bundle_invariants.
    """
    if inv.R % 2 != 0:
        return False
    return (inv.D - (inv.R // 2) * p.delta) % 2 == 0


def gvb_complete_type(r: int, D: int, b: int, p: RibbonParams) -> CompleteType:
    """Complete type of a generalized vector bundle of index b.

    A generalized vector bundle is a sheaf obtained from a rank-r bundle
    by elementary modification along a length-b divisor; its restrictions
    have ranks (r, r) and degrees determined by D and b up to the parity
    constraint ``b = D + r*delta (mod 2)``.
    """
    if r < 1:
        raise DomainError(f"rank must be positive, got {r}")
    if b < 0:
        raise DomainError(f"index must be nonnegative, got {b}")
    num = D + b + r * p.delta
    if num % 2 != 0:
        raise IntegralityError(
            f"no sheaf with rank {r}, degree {D}, index {b}, delta {p.delta}: "
            f"degrees would be half-integers"
        )
    d0 = num // 2
    return CompleteType(r, r, d0, D - d0)


def local_type_to_rank_pair(t: LocalType) -> tuple[int, int]:
    """Rank pair (a + b, b) of a quasi locally free sheaf of the given type."""
    return (t.a + t.b, t.b)


def rank_pair_to_local_type(r0: int, r1: int) -> LocalType:
    """Inverse of local_type_to_rank_pair; rejects pairs no sheaf realizes."""
    if r0 < r1:
        raise DomainError(f"no local type with r0 < r1, got ({r0}, {r1})")
    return LocalType(r0 - r1, r1)
