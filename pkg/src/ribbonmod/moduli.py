"""Dimensions and conjectural component lists for sheaf moduli on ribbons.

The Simpson moduli space of semistable sheaves on a ribbon with fixed
generalized rank R and degree D decomposes into loci indexed by discrete
data: complete types of quasi locally free sheaves, indices of
generalized vector bundles, torsion lengths of generically quasi locally
free sheaves.  Each locus has a closed-form dimension in the ribbon
parameters.  ``enumerate_components`` lists the loci expected to be the
irreducible components; that list is conjectural, which the reporting
layer surfaces, while every dimension and every existence certificate
attached to an entry is proved.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import (
    CompleteType,
    DomainError,
    Invariants,
    RibbonParams,
    gvb_complete_type,
    invariants_of,
)
from .stability import ExistenceVerdict, gvb_ss_exists, rigid_locus_nonempty, ss_qlf_exists

__all__ = [
    "PartitionSpec",
    "ComponentKind",
    "ComponentDescriptor",
    "dim_qlf_locus",
    "dim_rigid_locus",
    "dim_vb_locus",
    "dim_gvb_locus",
    "blowup",
    "dim_l_locus",
    "dim_l_stratum",
    "partitions",
    "may_specialize",
    "enumerate_components",
]


def dim_qlf_locus(ct: CompleteType, p: RibbonParams) -> int:
    """Dimension 1 + (r0^2 + r1^2)(gbar - 1) + r0*r1*delta.

    This is the dimension of the locus of stable quasi locally free
    sheaves of the given rank pair; the degree part of the complete type
    does not enter.  The formula is evaluated unconditionally, callers
    owning any non-emptiness hypotheses.
    """
    r0, r1 = ct.r0, ct.r1
    return 1 + (r0 * r0 + r1 * r1) * (p.gbar - 1) + r0 * r1 * p.delta


def dim_rigid_locus(a: int, p: RibbonParams) -> int:
    """Dimension 1 + (a^2 + a)*delta + (2a^2 + 2a + 1)(gbar - 1) of N(a, ., .).

    Agrees with dim_qlf_locus at rank pair (a + 1, a), as it must.
    """
    if a < 1:
        raise DomainError(f"rigid index must be >= 1, got {a}")
    return 1 + (a * a + a) * p.delta + (2 * a * a + 2 * a + 1) * (p.gbar - 1)


def dim_vb_locus(r: int, D: int, p: RibbonParams) -> tuple[bool, int]:
    """Non-emptiness and dimension of the stable rank-r bundle locus on X.

    Non-empty iff delta > 0 and D has the parity of r*delta.  The
    dimension 1 + r^2*delta + 2*r^2*(gbar - 1), that is 1 + r^2*(g - 1),
    is reported either way.
    """
    if r < 1:
        raise DomainError(f"rank must be positive, got {r}")
    nonempty = p.delta > 0 and (D - r * p.delta) % 2 == 0
    return (nonempty, 1 + r * r * p.delta + 2 * r * r * (p.gbar - 1))


def dim_gvb_locus(r: int, p: RibbonParams) -> int:
    """Dimension 1 + 2r^2(gbar - 1) + r^2*delta of the index-b bundle loci.

    The value does not depend on the index b.  Only meaningful on
    genuinely non-reduced ribbons, so delta <= 0 is rejected.
    """
    if r < 1:
        raise DomainError(f"rank must be positive, got {r}")
    if p.delta <= 0:
        raise DomainError(f"generalized vector bundle loci need delta > 0, got {p.delta}")
    return 1 + 2 * r * r * (p.gbar - 1) + r * r * p.delta


def blowup(p: RibbonParams, b: int) -> RibbonParams:
    """Ribbon parameters after blowing up b reduced points.

    The reduced curve is untouched; the nilradical degree rises by b, so
    delta drops by b.  Sheaves with torsion of length b over those points
    pull back to torsion-free ones, which is what makes this useful.
    """
    if b < 0:
        raise DomainError(f"cannot blow up a negative number of points, got {b}")
    return RibbonParams(p.gbar, p.delta - b)


def dim_l_locus(n: int, b: int, p: RibbonParams) -> int:
    """Dimension 1 + (n^2 + 2n + 2)(gbar - 1) + (n + 1)(delta - b) of L(n, b).

    L(n, b) collects stable sheaves of rank pair (n + 1, 1) whose
    restriction to the reduced curve has torsion length b.  Matches
    dim_qlf_locus at rank pair (n + 1, 1) on the blown-up ribbon.
    """
    if p.gbar < 2:
        raise DomainError(f"torsion locus dimensions need gbar >= 2, got {p.gbar}")
    if p.delta <= 0:
        raise DomainError(f"torsion locus dimensions need delta > 0, got {p.delta}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if b < 0:
        raise DomainError(f"torsion length must be nonnegative, got {b}")
    return 1 + (n * n + 2 * n + 2) * (p.gbar - 1) + (n + 1) * (p.delta - b)


@dataclass(frozen=True)
class PartitionSpec:
    """A partition of a torsion length, parts weakly decreasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.parts):
            raise DomainError(f"partition parts must be positive, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError(f"partition parts must be weakly decreasing, got {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self):
        return "+".join(str(x) for x in self.parts) if self.parts else "0"


def dim_l_stratum(n: int, partition: PartitionSpec, p: RibbonParams) -> int:
    """Dimension of the stratum of L(n, b) with fixed torsion shape.

    Distributing the length-b torsion according to a partition with j
    parts adds j to the locus dimension.
    """
    return dim_l_locus(n, partition.total, p) + partition.length


def partitions(b: int) -> list[PartitionSpec]:
    """All partitions of b, lexicographically descending: (b) first, all-ones last."""
    if b < 0:
        raise DomainError(f"cannot partition a negative integer, got {b}")
    if b == 0:
        return [PartitionSpec(())]
    out: list[PartitionSpec] = []
    stack: list[int] = []

    def descend(remaining: int, cap: int):
        if remaining == 0:
            out.append(PartitionSpec(tuple(stack)))
            return
        for part in range(min(cap, remaining), 0, -1):
            stack.append(part)
            descend(remaining - part, part)
            stack.pop()

    descend(b, b)
    return out


def may_specialize(generic: CompleteType, special: CompleteType) -> bool:
    """Whether semicontinuity allows the second type to arise as a limit.

    Along a flat family generalized rank and degree are constant, the
    first rank can only jump up at a special point and the second only
    down.  True is merely "not forbidden"; False is a proof that no such
    degeneration exists.
    """
    if invariants_of(generic) != invariants_of(special):
        return False
    return special.r0 >= generic.r0 and special.r1 <= generic.r1


class ComponentKind(enum.Enum):
    QLF = "qlf"
    GVB = "gvb"
    RIGID = "rigid"
    VB = "vb"


_KIND_ORDER = {k: i for i, k in enumerate(ComponentKind)}


@dataclass(frozen=True)
class ComponentDescriptor:
    """One conjectural irreducible component of the moduli space.

    The complete type determines the locus for every kind; generalized
    vector bundle entries additionally carry their index.  ``existence``
    certifies that the locus is non-empty by the matching predicate.
    """

    kind: ComponentKind
    complete_type: CompleteType
    index: int | None
    dimension: int
    existence: ExistenceVerdict

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind],
            self.complete_type.r1,
            self.complete_type.d1,
            -1 if self.index is None else self.index,
        )


def _qlf_split_range(r0: int, r1: int, D: int, delta: int) -> range:
    """Integers d1 with (d0 - R*delta)/r0 < d1/r1 < d0/r0 where d0 = D - d1.

    Clearing denominators, r1*(D - R*delta) < R*d1 < r1*D with R = r0+r1.
    """
    R = r0 + r1
    lo_num = r1 * (D - R * delta)  # want d1 > lo_num / R
    hi_num = r1 * D                # want d1 < hi_num / R
    lo = lo_num // R + 1
    hi = -((-hi_num) // R) - 1     # ceil(hi_num / R) - 1
    return range(lo, hi + 1)


def _qlf_components(p: RibbonParams, R: int, D: int) -> list[ComponentDescriptor]:
    out = []
    for r1 in range(0, (R + 1) // 2):
        r0 = R - r1
        if r1 == 0:
            # sheaves living on the reduced curve: rank-R bundles there,
            # a single degree split (D, 0), always non-empty for gbar >= 2
            ct = CompleteType(r0, 0, D, 0)
            out.append(ComponentDescriptor(
                kind=ComponentKind.QLF,
                complete_type=ct,
                index=None,
                dimension=dim_qlf_locus(ct, p),
                existence=ExistenceVerdict(True, True),
            ))
            continue
        for d1 in _qlf_split_range(r0, r1, D, p.delta):
            ct = CompleteType(r0, r1, D - d1, d1)
            verdict = ss_qlf_exists(ct, p)
            if verdict.stable_exists:
                out.append(ComponentDescriptor(
                    kind=ComponentKind.QLF,
                    complete_type=ct,
                    index=None,
                    dimension=dim_qlf_locus(ct, p),
                    existence=verdict,
                ))
    return out


def _gvb_components(p: RibbonParams, R: int, D: int) -> list[ComponentDescriptor]:
    r = R // 2
    out = []
    dim = dim_gvb_locus(r, p)
    for b in range(1, r * p.delta):
        if (D + b + r * p.delta) % 2 != 0:
            continue  # no sheaf carries these invariants
        ct = gvb_complete_type(r, D, b, p)
        out.append(ComponentDescriptor(
            kind=ComponentKind.GVB,
            complete_type=ct,
            index=b,
            dimension=dim,
            existence=gvb_ss_exists(r, b, p),
        ))
    return out


def _rigid_components(p: RibbonParams, R: int, D: int) -> list[ComponentDescriptor]:
    a = (R - 1) // 2
    if a < 1:
        # generalized rank 1 means line bundles on the reduced curve; the
        # large-delta component list has no rigid locus to offer for it
        return []
    out = []
    dim = dim_rigid_locus(a, p)
    for d1 in _qlf_split_range(a + 1, a, D, p.delta):
        d0 = D - d1
        if not rigid_locus_nonempty(a, d0, d1, p):
            continue
        out.append(ComponentDescriptor(
            kind=ComponentKind.RIGID,
            complete_type=CompleteType(a + 1, a, d0, d1),
            index=None,
            dimension=dim,
            existence=ExistenceVerdict(True, True),
        ))
    return out


def _vb_component(p: RibbonParams, R: int, D: int) -> list[ComponentDescriptor]:
    r = R // 2
    nonempty, dim = dim_vb_locus(r, D, p)
    if not nonempty:
        return []
    ct = gvb_complete_type(r, D, 0, p)
    return [ComponentDescriptor(
        kind=ComponentKind.VB,
        complete_type=ct,
        index=0,
        dimension=dim,
        existence=ExistenceVerdict(True, True),
    )]


def enumerate_components(
    p: RibbonParams,
    R: int,
    D: int,
    *,
    include_index_zero_bundles: bool = False,
    jobs: int = 1,
) -> list[ComponentDescriptor]:
    """Conjectural irreducible components of the moduli space M(R, D).

    For 0 < delta <= 2*gbar - 2 the list holds one entry per stable
    complete type with r0 > r1 >= 0 plus, for even R, one generalized
    vector bundle entry per admissible positive index.  For larger delta
    only the bundle entries survive when R is even, and only the rigid
    loci N((R-1)/2, d0, d1) when R is odd.  Whether the index-0 bundle
    locus also belongs to the list is an open point; it is emitted only
    when ``include_index_zero_bundles`` is set.

    Output order is canonical: kind, then r1, d1, index ascending.  The
    list is conjectural as a component list even though each entry's
    existence and dimension are proved.
    """
    if p.gbar < 2:
        raise DomainError(f"component lists need reduced genus >= 2, got {p.gbar}")
    if p.delta <= 0:
        raise DomainError(f"component lists need delta > 0, got {p.delta}")
    if R < 1:
        raise DomainError(f"generalized rank must be positive, got {R}")
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")

    tasks = []
    if p.delta <= 2 * p.gbar - 2:
        tasks.append(_qlf_components)
        if R % 2 == 0:
            tasks.append(_gvb_components)
    elif R % 2 == 0:
        tasks.append(_gvb_components)
    else:
        tasks.append(_rigid_components)
    if include_index_zero_bundles and R % 2 == 0:
        tasks.append(_vb_component)

    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda f: f(p, R, D), tasks))
    else:
        chunks = [f(p, R, D) for f in tasks]

    out = [c for chunk in chunks for c in chunk]
    out.sort(key=ComponentDescriptor.sort_key)
    return out
