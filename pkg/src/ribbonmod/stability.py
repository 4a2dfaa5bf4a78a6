"""Existence of semistable and stable sheaves on ribbons.

The predicates here answer "is there a semistable (resp. stable) sheaf
with these discrete invariants", locus by locus: quasi locally free
sheaves of a given complete type, the rigid loci N(a, d0, d1), sheaves
obtained from vector bundles by elementary modification, and the loci
built from blow-ups that govern generic quasi locally freeness.  Each
predicate is a finite set of sharp inequalities between exact rationals,
so every answer is decided by integer cross-multiplication.

The module also carries executable forms of the two combinatorial
lemmas those inequalities rest on, one comparing slopes of extensions
and one comparing weighted averages, together with seeded random
samplers so the lemmas can be re-verified wholesale.  For both lemmas
the strictness certificate implemented here is the exact one extractable
from the proof; the blanket version (any strict hypothesis forces a
strict conclusion) fails on boundary data, see ``slope_strict_trigger``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import CompleteType, DomainError, RibbonParams

__all__ = [
    "ExistenceVerdict",
    "Rank3Verdict",
    "SlopeVariant",
    "SlopeConclusion",
    "LemmaSlopeData",
    "LemmaWeightData",
    "LemmaVerification",
    "CrossCheck",
    "DeformationOutcome",
    "ss_qlf_exists",
    "rigid_locus_nonempty",
    "gvb_ss_exists",
    "stable_index_bound",
    "lemma_slope_hypotheses",
    "lemma_slope_conclusion",
    "slope_strict_trigger",
    "lemma_weight_check",
    "weight_strict_trigger",
    "sample_slope_data",
    "sample_weight_data",
    "verify_slope_lemma",
    "verify_weight_lemma",
    "rank3_rational_classify",
    "l_locus_nonempty",
    "l_locus_cross_check",
    "vb_deforms_to_ribbon",
    "deformation_target_type",
]


@dataclass(frozen=True)
class ExistenceVerdict:
    """Answer of an existence predicate; stable sheaves are semistable."""

    semistable_exists: bool
    stable_exists: bool

    def __post_init__(self):
        if self.stable_exists and not self.semistable_exists:
            raise DomainError("a stable sheaf is in particular semistable")


def _require_deep_ribbon(p: RibbonParams, what: str) -> None:
    if p.gbar < 2:
        raise DomainError(f"{what} needs reduced genus >= 2, got {p.gbar}")


def ss_qlf_exists(ct: CompleteType, p: RibbonParams) -> ExistenceVerdict:
    """Existence of (semi)stable quasi locally free sheaves of a complete type.

    Requires gbar >= 2 and a genuinely non-reduced type, r0 > r1 > 0.
    Semistable sheaves exist iff

        (d0 - (r0 + r1)*delta) / r0  <=  d1 / r1  <=  d0 / r0,

    stable ones iff both inequalities are strict.  Comparisons are done
    by cross-multiplication, exactly.
    """
    _require_deep_ribbon(p, "quasi locally free existence")
    if not ct.r0 > ct.r1 > 0:
        raise DomainError(f"need r0 > r1 > 0, got ({ct.r0}, {ct.r1})")
    r0, r1, d0, d1 = ct.r0, ct.r1, ct.d0, ct.d1
    lhs = (d0 - (r0 + r1) * p.delta) * r1  # (d0 - R*delta)/r0 vs d1/r1, times r0*r1 > 0
    mid = d1 * r0
    rhs = d0 * r1
    return ExistenceVerdict(lhs <= mid <= rhs, lhs < mid < rhs)


def rigid_locus_nonempty(a: int, d0: int, d1: int, p: RibbonParams) -> bool:
    """Non-emptiness of the rigid stable locus N(a, d0, d1).

    These are the stable sheaves of rank pair (a + 1, a) whose local
    structure is as constrained as possible.  Needs gbar >= 2 and a >= 1.
    Non-empty iff  (d0 - (2a+1)*delta)/(a+1) < d1/a < d0/(a+1).
    """
    _require_deep_ribbon(p, "rigid locus")
    if a < 1:
        raise DomainError(f"rigid index must be >= 1, got {a}")
    left = (d0 - (2 * a + 1) * p.delta) * a < d1 * (a + 1)
    right = d1 * (a + 1) < d0 * a
    return left and right


def gvb_ss_exists(r: int, b: int, p: RibbonParams) -> ExistenceVerdict:
    """Existence of (semi)stable generalized vector bundles of index b.

    For rank-r modifications on a ribbon with delta = -deg(N):
    semistable sheaves exist iff b <= r*delta, stable ones iff b < r*delta.
    """
    _require_deep_ribbon(p, "generalized vector bundle existence")
    if r < 1:
        raise DomainError(f"rank must be positive, got {r}")
    if b < 0:
        raise DomainError(f"index must be nonnegative, got {b}")
    bound = r * p.delta
    return ExistenceVerdict(b <= bound, b < bound)


def stable_index_bound(r1: int, p: RibbonParams) -> int:
    """Largest-index barrier r1*delta for stable sheaves.

    A stable sheaf with second rank r1 has index strictly below this
    value; semistable ones reach it.  With delta = 0 the bound is 0, so
    nothing non-reduced is stable on a split ribbon.
    """
    if r1 < 1:
        raise DomainError(f"second rank must be positive, got {r1}")
    return r1 * p.delta


# --- slope comparison lemma ------------------------------------------------

class SlopeVariant(enum.Enum):
    """Which of the two symmetric hypothesis sets to use."""

    MU2_GE_MU3 = "mu2>=mu3"
    MU5_GE_MU6 = "mu5>=mu6"


class SlopeConclusion(enum.Enum):
    GT_CERTIFIED = "gt"
    GE = "ge"
    VIOLATED = "violated"  # impossible once the hypotheses hold


@dataclass(frozen=True)
class LemmaSlopeData:
    """Two three-term decompositions of (rank, degree) data.

    Entries 1 and 4 are the totals: R1 = R2 + R3, R4 = R5 + R6, same for
    the D's.  All ranks are positive rationals, degrees arbitrary
    rationals, so each slot has a slope mu_i = D_i / R_i.
    """

    R1: Fraction
    R2: Fraction
    R3: Fraction
    R4: Fraction
    R5: Fraction
    R6: Fraction
    D1: Fraction
    D2: Fraction
    D3: Fraction
    D4: Fraction
    D5: Fraction
    D6: Fraction

    def __post_init__(self):
        for name in ("R1", "R2", "R3", "R4", "R5", "R6"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if self.R1 != self.R2 + self.R3 or self.D1 != self.D2 + self.D3:
            raise DomainError("entry 1 must be the sum of entries 2 and 3")
        if self.R4 != self.R5 + self.R6 or self.D4 != self.D5 + self.D6:
            raise DomainError("entry 4 must be the sum of entries 5 and 6")
        object.__setattr__(self, "_mus", (
            self.D1 / self.R1, self.D2 / self.R2, self.D3 / self.R3,
            self.D4 / self.R4, self.D5 / self.R5, self.D6 / self.R6,
        ))

    def mu(self, i: int) -> Fraction:
        return self._mus[i - 1]


def lemma_slope_hypotheses(d: LemmaSlopeData, variant: SlopeVariant) -> bool:
    """Hypotheses of the slope comparison lemma.

    Common part: mu6 >= mu3, mu5 >= mu2 and R4/R1 >= R6/R3.  The variant
    adds mu2 >= mu3 or mu5 >= mu6.
    """
    mu = d.mu
    if variant is SlopeVariant.MU2_GE_MU3:
        if not mu(2) >= mu(3):
            return False
    else:
        if not mu(5) >= mu(6):
            return False
    return (
        mu(6) >= mu(3)
        and mu(5) >= mu(2)
        and d.R4 * d.R3 >= d.R6 * d.R1
    )


def lemma_slope_conclusion(d: LemmaSlopeData) -> SlopeConclusion:
    """Exact comparison of mu4 against mu1.

    Under the hypotheses the lemma guarantees mu4 >= mu1, so VIOLATED can
    only come back for data that fails them.
    """
    mu1, mu4 = d.mu(1), d.mu(4)
    if mu4 > mu1:
        return SlopeConclusion.GT_CERTIFIED
    if mu4 == mu1:
        return SlopeConclusion.GE
    return SlopeConclusion.VIOLATED


def slope_strict_trigger(d: LemmaSlopeData, variant: SlopeVariant) -> bool:
    """Exact certificate for mu4 > mu1, assuming the hypotheses hold.

    Writing c = R3/R1 - R6/R4 >= 0, the difference decomposes as

        mu4 - mu1 = (R5*(mu5 - mu2) + R6*(mu6 - mu3)) / R4 + c*(mu2 - mu3)

    in the first variant and as

        mu4 - mu1 = (R2*(mu5 - mu2) + R3*(mu6 - mu3)) / R1 + c*(mu5 - mu6)

    in the second; both identities hold for any additive data.  Every
    summand is nonnegative under the hypotheses and the bracket weights
    are positive, so the difference is positive exactly when mu5 > mu2,
    or mu6 > mu3, or the variant inequality is strict together with c > 0.
    Dropping the c > 0 requirement would overclaim: with ranks
    (2,1,1,2,1,1) and degrees (1,1,0,1,1,0) every hypothesis holds,
    mu2 > mu3 and mu5 > mu6 are strict, yet mu4 = mu1 = 1/2.
    """
    mu = d.mu
    if mu(5) > mu(2) or mu(6) > mu(3):
        return True
    weights_strict = d.R4 * d.R3 > d.R6 * d.R1  # c > 0 cleared of denominators
    if variant is SlopeVariant.MU2_GE_MU3:
        return weights_strict and mu(2) > mu(3)
    return weights_strict and mu(5) > mu(6)


# --- weighted average comparison lemma -------------------------------------

@dataclass(frozen=True)
class LemmaWeightData:
    """Two weight ladders m1 > m2 > m3 >= 0 with rational payloads q."""

    m1: int
    m2: int
    m3: int
    q1: Fraction
    q2: Fraction
    q3: Fraction
    m1p: int
    m2p: int
    m3p: int
    q1p: Fraction
    q2p: Fraction
    q3p: Fraction

    def __post_init__(self):
        if not self.m1 > self.m2 > self.m3 >= 0:
            raise DomainError(f"need m1 > m2 > m3 >= 0, got {(self.m1, self.m2, self.m3)}")
        if not self.m1p > self.m2p > self.m3p >= 0:
            raise DomainError(f"need m1' > m2' > m3' >= 0, got {(self.m1p, self.m2p, self.m3p)}")


def _weight_value(m1: int, m2: int, m3: int, q1, q2, q3) -> Fraction:
    return Fraction(m3 * q1 + (m2 - m3) * q2 + (m1 - m2) * q3, m1)


def lemma_weight_check(d: LemmaWeightData) -> tuple[bool, Fraction, Fraction]:
    """Hypotheses flag plus both weighted averages (w, w').

    Hypotheses: q_i <= q_i' componentwise, q1' <= q2' >= q3', and the
    cross conditions m1*m3' <= m1'*m3 and m2*m1' <= m2'*m1.  Under them
    w <= w'.
    """
    hyp = (
        d.q1 <= d.q1p
        and d.q2 <= d.q2p
        and d.q3 <= d.q3p
        and d.q1p <= d.q2p
        and d.q3p <= d.q2p
        and d.m1 * d.m3p - d.m1p * d.m3 <= 0
        and d.m2 * d.m1p - d.m2p * d.m1 <= 0
    )
    w = _weight_value(d.m1, d.m2, d.m3, d.q1, d.q2, d.q3)
    wp = _weight_value(d.m1p, d.m2p, d.m3p, d.q1p, d.q2p, d.q3p)
    return (hyp, w, wp)


def weight_strict_trigger(d: LemmaWeightData) -> bool:
    """Exact certificate for w < w', assuming the hypotheses hold.

    The difference splits as A + B with

        A = (m3*(q1'-q1) + (m2-m3)*(q2'-q2) + (m1-m2)*(q3'-q3)) / m1,
        B = ((m1*m3'-m1'*m3)*(q1'-q2') + (m2*m1'-m2'*m1)*(q3'-q2')) / (m1*m1'),

    each a sum of nonnegative terms.  Strictness therefore occurs exactly
    when one of the five products is positive.  A lone strict hypothesis
    does not suffice: with equal ladders and equal payloads q = q' the
    inequality q1' < q2' can be strict while w = w'.
    """
    if d.q2 < d.q2p or d.q3 < d.q3p:
        return True
    if d.m3 > 0 and d.q1 < d.q1p:
        return True
    if d.m1 * d.m3p < d.m1p * d.m3 and d.q1p < d.q2p:
        return True
    if d.m2 * d.m1p < d.m2p * d.m1 and d.q3p < d.q2p:
        return True
    return False


# --- seeded samplers and wholesale verification ----------------------------

def _fraction_grid(lo: int, hi: int, max_den: int = 3) -> tuple[Fraction, ...]:
    """All num/den with lo <= num <= hi and 1 <= den <= max_den.

    Duplicates (2/2 vs 1/1) are kept so a uniform pick from the grid has
    the same law as drawing numerator and denominator independently.
    """
    return tuple(
        Fraction(num, den)
        for num in range(lo, hi + 1)
        for den in range(1, max_den + 1)
    )


_RANK_GRID = _fraction_grid(1, 6)
_BASE_GRID = _fraction_grid(-6, 6)
_BUMP_GRID = _fraction_grid(0, 3)
_Q_GRID = _fraction_grid(-4, 4)


def sample_slope_data(rng: random.Random, variant: SlopeVariant) -> LemmaSlopeData:
    """Random data satisfying the hypotheses of the given variant.

    Slopes are built by stacking nonnegative increments on top of each
    other, so ties happen often and boundary behaviour gets exercised.
    """
    R2 = rng.choice(_RANK_GRID)
    R3 = rng.choice(_RANK_GRID)
    R5 = rng.choice(_RANK_GRID)
    R6 = rng.choice(_RANK_GRID)
    if (R5 + R6) * R3 < R6 * (R2 + R3):
        # R6/R4 > R3/R1 here, so exchanging the halves of the quadruple
        # flips the ratio inequality into the required direction.
        R2, R3, R5, R6 = R5, R6, R2, R3
    R1, R4 = R2 + R3, R5 + R6
    base = rng.choice(_BASE_GRID)
    bump = lambda: rng.choice(_BUMP_GRID)  # noqa: E731  nonnegative increment
    if variant is SlopeVariant.MU2_GE_MU3:
        mu3 = base
        mu2 = mu3 + bump()
        mu5 = mu2 + bump()
        mu6 = mu3 + bump()
    else:
        # mu2 >= mu3 is not among this variant's hypotheses, so let mu2
        # wander below mu3 as long as it stays under mu5.
        mu3 = base
        mu6 = mu3 + bump()
        mu5 = mu6 + bump()
        mu2 = mu5 - bump()
    D2, D3 = mu2 * R2, mu3 * R3
    D5, D6 = mu5 * R5, mu6 * R6
    return LemmaSlopeData(
        R1=R1, R2=R2, R3=R3, R4=R4, R5=R5, R6=R6,
        D1=D2 + D3, D2=D2, D3=D3,
        D4=D5 + D6, D5=D5, D6=D6,
    )


# Strictly decreasing integer ladders m1 > m2 > m3 >= 0 with small steps,
# paired so that m1*m3p <= m1p*m3 and m2*m1p <= m2p*m1.  The table is small
# enough to enumerate once, and a uniform pick from it is the same law as
# rejection sampling over the product of the two ladder spaces.
_WEIGHT_LADDERS = tuple(
    (m3 + g1 + g2, m3 + g1, m3)
    for m3 in range(5)
    for g1 in range(1, 5)
    for g2 in range(1, 5)
)
_WEIGHT_LADDER_PAIRS = tuple(
    left + right
    for left in _WEIGHT_LADDERS
    for right in _WEIGHT_LADDERS
    if left[0] * right[2] <= right[0] * left[2]
    and left[1] * right[0] <= right[1] * left[0]
)


def sample_weight_data(rng: random.Random) -> LemmaWeightData:
    """Random data satisfying the weighted-average hypotheses."""
    m1, m2, m3, m1p, m2p, m3p = _WEIGHT_LADDER_PAIRS[
        rng.randrange(len(_WEIGHT_LADDER_PAIRS))
    ]
    q2p = rng.choice(_Q_GRID)
    q1p = q2p - rng.choice(_BUMP_GRID)
    q3p = q2p - rng.choice(_BUMP_GRID)
    return LemmaWeightData(
        m1=m1, m2=m2, m3=m3,
        q1=q1p - rng.choice(_BUMP_GRID),
        q2=q2p - rng.choice(_BUMP_GRID),
        q3=q3p - rng.choice(_BUMP_GRID),
        m1p=m1p, m2p=m2p, m3p=m3p,
        q1p=q1p, q2p=q2p, q3p=q3p,
    )


@dataclass(frozen=True)
class LemmaVerification:
    """Outcome of a wholesale lemma check."""

    checked: int
    strict_checked: int
    counterexamples: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_slope_lemma(samples: int, seed: int) -> LemmaVerification:
    """Sample both variants and check conclusion and strictness certificate.

    Every sampled instance must satisfy mu4 >= mu1, with mu4 > mu1 exactly
    when the strict trigger fires.  Returns all counterexamples found;
    the lemma being a theorem, there should be none.
    """
    rng = random.Random(seed)
    bad = []
    strict_seen = 0
    variants = (SlopeVariant.MU2_GE_MU3, SlopeVariant.MU5_GE_MU6)
    for i in range(samples):
        variant = variants[i % 2]
        d = sample_slope_data(rng, variant)
        if not lemma_slope_hypotheses(d, variant):
            bad.append(f"sampler broke hypotheses: {d}")
            continue
        concl = lemma_slope_conclusion(d)
        if concl is SlopeConclusion.VIOLATED:
            bad.append(f"mu4 < mu1 under hypotheses: {d}")
            continue
        strict = slope_strict_trigger(d, variant)
        if strict:
            strict_seen += 1
            if concl is not SlopeConclusion.GT_CERTIFIED:
                bad.append(f"strict trigger but mu4 = mu1: {d}")
        elif concl is SlopeConclusion.GT_CERTIFIED:
            bad.append(f"mu4 > mu1 without strict trigger: {d}")
    return LemmaVerification(samples, strict_seen, tuple(bad[:10]))


def verify_weight_lemma(samples: int, seed: int) -> LemmaVerification:
    """Sampled check that w <= w' with strictness exactly at the trigger."""
    rng = random.Random(seed)
    bad = []
    strict_seen = 0
    for _ in range(samples):
        d = sample_weight_data(rng)
        hyp, w, wp = lemma_weight_check(d)
        if not hyp:
            bad.append(f"sampler broke hypotheses: {d}")
            continue
        if w > wp:
            bad.append(f"w > w' under hypotheses: {d}")
            continue
        strict = weight_strict_trigger(d)
        if strict:
            strict_seen += 1
            if not w < wp:
                bad.append(f"strict trigger but w = w': {d}")
        elif w < wp:
            bad.append(f"w < w' without strict trigger: {d}")
    return LemmaVerification(samples, strict_seen, tuple(bad[:10]))


# --- generalized rank 3 on the rational ribbon ------------------------------

class Rank3Verdict(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    NO_SEMISTABLE = "none"


def rank3_rational_classify(d0: int, d1: int, p: RibbonParams) -> Rank3Verdict:
    """Classify complete type ((2,1),(d0,d1)) on a rational ribbon.

    Only the rational case gbar = 0 has these hand-tabulated answers;
    other genera must go through ss_qlf_exists.  Stable wins over
    strictly semistable when both tables match a point.  All conditions
    are parity-safe: a row written "d1 = x/2" matches only when x is
    even, which the doubled comparisons below encode for free.
    """
    if p.gbar != 0:
        raise DomainError(f"rank-3 tables only cover the rational ribbon, got gbar {p.gbar}")
    delta = p.delta
    dd = 2 * d1

    stable = False
    if delta >= 3:
        stable = (
            (d0 - 3 * delta + 3 < dd < d0 - 3)
            or dd == d0 - 3 * delta + 2
            or dd == d0 - delta - 2
        )
    elif delta == 2:
        stable = dd in (d0 - 2 * delta, d0 - 2 * delta + 2)
    if stable:
        return Rank3Verdict.STABLE

    if delta >= 3:
        semistable = dd in (d0 - 3 * delta, d0 - 3 * delta + 3, d0 - 3, d0)
    elif delta == 2:
        semistable = dd in (d0 - 2 * delta - 2, d0 - 2 * delta + 1, d0 - 2 * delta + 4)
    elif delta == 1:
        semistable = dd in (d0 - 2 * delta - 1, d0 - 2 * delta + 2)
    elif delta == 0:
        semistable = dd == d0 - 2 * delta
    else:
        semistable = False
    if semistable:
        return Rank3Verdict.STRICTLY_SEMISTABLE
    return Rank3Verdict.NO_SEMISTABLE


# --- loci of generically quasi locally free sheaves -------------------------

def l_locus_nonempty(n: int, b: int, d0: int, d1: int, p: RibbonParams) -> bool:
    """Non-emptiness of the stable locus L(n, b, d0, d1).

    These are stable sheaves of rank pair (n+1, 1) whose restriction to
    the reduced curve carries torsion of length b >= 1.  Non-empty iff
    b < delta and (d0 - b - (n+2)*delta)/(n+1) < d1 < (d0 - b)/(n+1).
    """
    _require_deep_ribbon(p, "torsion locus")
    if p.delta <= 0:
        raise DomainError(f"torsion locus needs delta > 0, got {p.delta}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if b < 1:
        raise DomainError(f"torsion length must be >= 1, got {b}")
    if not b < p.delta:
        return False
    left = d0 - b - (n + 2) * p.delta < d1 * (n + 1)
    right = d1 * (n + 1) < d0 - b
    return left and right


@dataclass(frozen=True)
class CrossCheck:
    """Diagnostic comparison of two candidate non-emptiness conditions."""

    verbatim: bool
    via_blowup: bool

    @property
    def agree(self) -> bool:
        return self.verbatim == self.via_blowup


def l_locus_cross_check(n: int, b: int, d0: int, d1: int, p: RibbonParams) -> CrossCheck:
    """Compare the stated L(n, b) bounds with a blow-up rederivation.

    Blowing up the b support points turns these sheaves into quasi
    locally free ones of rank pair (n+1, 1) on a ribbon with delta - b,
    with degree pair (d0 - b, d1 + b) once the torsion is peeled off the
    restriction.  Running the quasi-locally-free stable existence test
    there gives an alternative condition; the two disagree on a
    b-dependent band, and this diagnostic reports both without blessing
    either.
    """
    verbatim = l_locus_nonempty(n, b, d0, d1, p)
    blown_down = RibbonParams(p.gbar, p.delta - b)
    candidate = ss_qlf_exists(
        CompleteType(n + 1, 1, d0 - b, d1 + b), blown_down
    ).stable_exists
    return CrossCheck(verbatim, candidate)


# --- deformations of vector bundles into non-reduced sheaves ----------------

class DeformationOutcome(enum.Enum):
    DEFORMS = "deforms"
    POSSIBLE_EXCEPTION = "possible-exception"
    HYPOTHESES_FAIL = "hypotheses-fail"


def vb_deforms_to_ribbon(r: int, d: int, p: RibbonParams) -> DeformationOutcome:
    """Whether every rank-r degree-d bundle deforms to non-reduced sheaves.

    Known for delta > 2*gbar - 2 with gbar >= 2.  In the single corner
    case delta = 2*gbar - 1 with r = 3, 3 | d and 3 | gbar the argument
    leaves a possible exception; from delta >= 2*gbar on there is none.
    """
    if r < 2:
        raise DomainError(f"deformation statement needs rank >= 2, got {r}")
    if p.gbar < 2 or p.delta <= 2 * p.gbar - 2:
        return DeformationOutcome.HYPOTHESES_FAIL
    if p.delta == 2 * p.gbar - 1 and r == 3 and d % 3 == 0 and p.gbar % 3 == 0:
        return DeformationOutcome.POSSIBLE_EXCEPTION
    return DeformationOutcome.DEFORMS


def deformation_target_type(r: int, r_prime: int):
    """Local type reached when a rank-r bundle degenerates through rank r'.

    The degeneration pushes the bundle onto a sheaf of local type
    (|r - 2r'|, min(r', r - r')).  Needs r >= 3 and 0 < r' < r.
    """
    from .core import LocalType

    if r < 3:
        raise DomainError(f"need rank >= 3, got {r}")
    if not 0 < r_prime < r:
        raise DomainError(f"need 0 < r' < r, got r' = {r_prime}")
    return LocalType(abs(r - 2 * r_prime), min(r_prime, r - r_prime))
