"""Spectral feasibility of antipodal (k, 2d)-graphs with excess e.

For a hypothetical antipodal k-regular graph of even girth 2d (d odd) and
excess e with 2 <= e <= k - 2, every adjacency eigenvalue other than +-k is
a root of H_{d-1}(x) - eps with eps in {1, -e/2}, where H_{d-1} is the
degree-(d-1) Dickson polynomial of the second kind with parameter k - 1.
This module:

* isolates all 2(d-1) roots by exact dyadic bisection on the integer
  polynomial H_{d-1} - eps, seeded from the case-split angular intervals

      i*pi/(d + |eta| s^{1-d}) < phi_i < i*pi/d        (eta_i > 0)
      i*pi/d < phi_i < i*pi/(d - |eta| s^{1-d})        (eta_i < 0)

  with theta = -2 s cos(phi), s = sqrt(k-1), eta_i = eps * (-1)^(d+i);

* evaluates the eigenvalue multiplicity both in closed form

      m(theta) = n e k (k-1) H_{d-2}(theta)
                 / [ 2 eps (2 eps + e/2 - 1) H'_{d-1}(theta) (k^2 - theta^2) ]

  and in the trigonometric weight form built from f, g1, g2, g3, and
  requires the two routes to agree;

* certifies integrality of each multiplicity with exact rational interval
  arithmetic propagated from the root bracket (an enclosure must contain
  exactly one integer);

* for d >= 7 certifies the product-gap exclusion: the squares of the
  second-smallest roots of the two families differ by a value trapped in a
  certified interval inside (0, 1), yet the difference would have to be an
  integer for the graph to exist.

n is always the Moore bound plus e; an external order is never accepted.
A "spectrally-admissible" verdict means no implemented test excludes the
triple; it is not an existence claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import (
    BracketSeedError,
    EvenHalfGirthError,
    ExcessRangeError,
    IllConditionedError,
    OddExcessError,
    ParameterDomainError,
    RegimeViolationError,
)
from .graphs import moore_bound
from .intersection import bd_entry00, build_bd
from .intervals import RatInterval, poly_enclosure
from .polynomials import derivative, dickson_family
from .precision import working_precision

VERDICT_ADMISSIBLE = "spectrally-admissible"
VERDICT_INTEGRALITY = "excluded-by-integrality"
VERDICT_GAP = "excluded-by-gap"
VERDICT_OUTSIDE = "outside-regime"

#: Root brackets are shrunk below this dyadic width before any verdict.
TARGET_BRACKET_BITS = 60

#: A multiplicity enclosure wider than this triggers bracket refinement.
ENCLOSURE_WIDTH_LIMIT = Fraction(1, 2)

_GAP_MIN_D = 7  # the product-gap argument needs girth 2d >= 14


def validate_parameters(k: int, d: int, e: int) -> None:
    """Reject triples outside the proven regime, each with a named error:
    odd e, even d, and e outside [2, k-2]."""
    if e % 2:
        raise OddExcessError(f"excess must be even, got e={e}")
    if d % 2 == 0:
        raise EvenHalfGirthError(f"half-girth d must be odd, got d={d}")
    if d < 3:
        raise ParameterDomainError(f"half-girth d must be >= 3, got d={d}")
    if e < 2:
        raise ExcessRangeError(f"excess must be >= 2, got e={e}")
    if e > k - 2:
        raise ExcessRangeError(f"excess must satisfy e <= k - 2, got e={e} with k={k}")


# ---------------------------------------------------------------------------
# root isolation

@dataclass(frozen=True)
class RootRecord:
    """One isolated root theta_i of H_{d-1}(x) - eps.

    phi in (0, pi) satisfies theta = -2 s cos(phi); alpha = i*pi - d*phi is
    the angular defect, whose sign and magnitude obey the case bound for
    eta = eps * (-1)^(d+i).  ``bracket`` is an exact dyadic-rational
    enclosure of theta of width below 2^-60.
    """

    i: int
    epsilon: int
    eta: int
    theta: float
    phi: float
    alpha: float
    bracket: tuple[Fraction, Fraction]


def _family_poly(k: int, d: int, epsilon: int) -> tuple[int, ...]:
    coeffs = list(dickson_family("H", k, d - 1).coefficients)
    coeffs[0] -= epsilon
    return tuple(coeffs)


def _sign_dyadic(coeffs: tuple[int, ...], num: int, shift: int) -> int:
    """Exact sign of P(num / 2^shift) for an integer polynomial P."""
    acc = coeffs[-1]
    scale = 1 << shift
    power = 1
    for c in reversed(coeffs[:-1]):
        power *= scale
        acc = acc * num + c * power
    return (acc > 0) - (acc < 0)


def _bisect(coeffs, lo, hi, shift, sign_lo, bits):
    """Shrink the dyadic bracket (lo, hi)/2^shift below width 2^-bits,
    keeping P(lo) and P(hi) of opposite sign (or collapsing onto an exact
    root)."""
    while ((hi - lo) << bits) >= (1 << shift):
        lo <<= 1
        hi <<= 1
        shift += 1
        mid = (lo + hi) // 2
        sign_mid = _sign_dyadic(coeffs, mid, shift)
        if sign_mid == 0:
            lo = hi = mid
            break
        if sign_mid == sign_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi, shift


def _phi_interval(mp, k: int, d: int, i: int, eta: int):
    a = abs(eta)
    s_pow = mp.power(k - 1, mp.mpf(-(d - 1)) / 2)  # s^(1-d)
    if eta > 0:
        return i * mp.pi / (d + a * s_pow), i * mp.pi / d
    return i * mp.pi / d, i * mp.pi / (d - a * s_pow)


def isolate_roots(k: int, d: int, e: int, epsilon: int) -> list[RootRecord]:
    """Isolate the d-1 roots of H_{d-1}(x) - epsilon by exact bisection.

    epsilon must be 1 or -e/2.  Each root is seeded from its angular case
    interval, bracketed to dyadic width below 2^-60, and checked against its
    alpha case bound; a seed without a sign change is an internal error.
    Records come back sorted by theta ascending with i = 1..d-1.
    """
    validate_parameters(k, d, e)
    if epsilon not in (1, -e // 2):
        raise ParameterDomainError(
            f"epsilon must be 1 or -e/2 = {-e // 2}, got {epsilon}"
        )
    coeffs = _family_poly(k, d, epsilon)
    records = []
    with working_precision() as mp:
        two_s = 2 * mp.sqrt(k - 1)
        s_pow = mp.power(k - 1, mp.mpf(-(d - 1)) / 2)
        for i in range(1, d):
            eta = epsilon if (d + i) % 2 == 0 else -epsilon
            phi_lo, phi_hi = _phi_interval(mp, k, d, i, eta)
            theta_lo = -two_s * mp.cos(phi_lo)
            theta_hi = -two_s * mp.cos(phi_hi)
            # seed strictly inside the open interval; the root keeps a
            # bounded fraction of the interval width on both sides
            slop = (theta_hi - theta_lo) / (1 << 30)
            width = float(theta_hi - theta_lo)
            shift = max(64, 36 + int(-math.log2(width)) if width > 0 else 64)
            lo = int(mp.ceil((theta_lo + slop) * (1 << shift)))
            hi = int(mp.floor((theta_hi - slop) * (1 << shift)))
            sign_lo = _sign_dyadic(coeffs, lo, shift)
            sign_hi = _sign_dyadic(coeffs, hi, shift)
            if sign_lo == 0:
                hi = lo
            elif sign_hi == 0:
                lo = hi
            elif sign_lo * sign_hi > 0:
                raise BracketSeedError(
                    f"seed interval for (k={k}, d={d}, e={e}, eps={epsilon}, i={i}) "
                    "does not bracket a sign change"
                )
            else:
                lo, hi, shift = _bisect(coeffs, lo, hi, shift, sign_lo, TARGET_BRACKET_BITS)
            theta_mid = mp.mpf(lo + hi) / (1 << (shift + 1))
            phi = mp.acos(-theta_mid / two_s)
            alpha = i * mp.pi - d * phi
            bound = abs(eta) * s_pow * min(phi, mp.pi - phi)
            if eta > 0 and not (0 < alpha < bound):
                raise BracketSeedError(
                    f"alpha={float(alpha)} outside case bound (0, {float(bound)}) "
                    f"for (k={k}, d={d}, e={e}, eps={epsilon}, i={i})"
                )
            if eta < 0 and not (-bound < alpha < 0):
                raise BracketSeedError(
                    f"alpha={float(alpha)} outside case bound ({-float(bound)}, 0) "
                    f"for (k={k}, d={d}, e={e}, eps={epsilon}, i={i})"
                )
            records.append(
                RootRecord(
                    i=i,
                    epsilon=epsilon,
                    eta=eta,
                    theta=float(theta_mid),
                    phi=float(phi),
                    alpha=float(alpha),
                    bracket=(Fraction(lo, 1 << shift), Fraction(hi, 1 << shift)),
                )
            )
    records.sort(key=lambda r: r.bracket[0])
    if [r.i for r in records] != list(range(1, d)):
        raise BracketSeedError("isolated roots are not ascending in their index order")
    return records


def transcendental_residual(record: RootRecord, k: int, d: int) -> float:
    """Left side of the angular-defect equation at the record's alpha:

        sin(alpha) - eta * s^(1-d) * sin((i*pi - alpha)/d)

    Must vanish (below 1e-9) for a genuine record."""
    if record.epsilon == 0:
        raise ParameterDomainError(
            "epsilon = 0 (the zero-excess limit) is outside the supported regime"
        )
    with working_precision() as mp:
        s_pow = mp.power(k - 1, mp.mpf(-(d - 1)) / 2)
        alpha = mp.mpf(record.alpha)
        value = mp.sin(alpha) - record.eta * s_pow * mp.sin((record.i * mp.pi - alpha) / d)
        return float(value)


# ---------------------------------------------------------------------------
# multiplicity formulas

def multiplicity_closed_form(k: int, d: int, e: int, epsilon: int, theta: float) -> float:
    """Eigenvalue multiplicity at a root theta of H_{d-1} - epsilon:

        n e k (k-1) H_{d-2}(theta)
        / [ 2 eps (2 eps + e/2 - 1) H'_{d-1}(theta) (k^2 - theta^2) ]

    with n = M(k, 2d) + e.  Raises IllConditionedError when the derivative
    or k^2 - theta^2 falls below 1e-12 in magnitude."""
    validate_parameters(k, d, e)
    n = moore_bound(k, 2 * d) + e
    h_prev = dickson_family("H", k, d - 2)(theta)
    h_deriv = derivative(dickson_family("H", k, d - 1))(theta)
    k2t2 = k * k - theta * theta
    if abs(h_deriv) < 1e-12 or abs(k2t2) < 1e-12:
        raise IllConditionedError(
            f"multiplicity at theta={theta} is ill-conditioned "
            f"(|H'|={abs(h_deriv):.3e}, |k^2-theta^2|={abs(k2t2):.3e})"
        )
    return (n * e * k * (k - 1) * h_prev) / (
        2 * epsilon * (2 * epsilon + e // 2 - 1) * h_deriv * k2t2
    )


def f_weight(k: int, z: float) -> float:
    """f(z) = 4 s^2 (1 - z^2) / (k^2 - 4 s^2 z^2) on (-1, 1); even, concave."""
    if not -1.0 < z < 1.0:
        raise ParameterDomainError(f"z must lie in (-1, 1), got {z}")
    if k < 3:
        raise ParameterDomainError(f"degree k must be >= 3, got {k}")
    s2 = k - 1
    zz = z * z
    return 4 * s2 * (1 - zz) / (k * k - 4 * s2 * zz)


_G_SIGNS = {"g1": None, "g2": -1, "g3": +1}


def g_weight(which: str, k: int, d: int, e: int, z: float) -> float:
    """The monotone weights g1 (increasing), g2 (decreasing), g3 (increasing):

        g(z; a) = k (k-1) (sqrt(1 - a^2 s^(2-2d) (1 - z^2)) + a s^(1-d) z)
                  / (d sqrt(1 - a^2 s^(2-2d) (1 - z^2)) + a s^(1-d) z)

    with a = 1 for g1, a = -e/2 for g2, a = +e/2 for g3.  The radicand is
    positive in the supported regime; a nonpositive radicand means the
    requested parameters violate it and raises."""
    if which not in _G_SIGNS:
        raise ParameterDomainError(f"unknown weight {which!r}; expected g1, g2, or g3")
    if not -1.0 < z < 1.0:
        raise ParameterDomainError(f"z must lie in (-1, 1), got {z}")
    sign = _G_SIGNS[which]
    a = 1 if sign is None else sign * (e // 2)
    s_pow = (k - 1) ** (-(d - 1) / 2)
    radicand = 1 - a * a * (k - 1) ** (-(d - 1)) * (1 - z * z)
    if radicand <= 0:
        raise RegimeViolationError(
            f"radicand {radicand:.6e} is not positive for {which} at "
            f"(k={k}, d={d}, e={e}, z={z}); parameters violate the regime"
        )
    root = math.sqrt(radicand)
    return k * (k - 1) * (root + a * s_pow * z) / (d * root + a * s_pow * z)


def multiplicity_trig(k: int, d: int, e: int, record: RootRecord) -> float:
    """Multiplicity from the trigonometric weight form:

        eps = 1:            n e / (4 s^2 (e/2+1)) * f(cos phi) * g1(eta cos phi)
        eps = -e/2, i odd:  n   / (2 s^2 (e/2+1)) * f(cos phi) * g2(cos phi)
        eps = -e/2, i even: n   / (2 s^2 (e/2+1)) * f(cos phi) * g3(cos phi)

    Must agree with `multiplicity_closed_form` to 1e-6 relative."""
    validate_parameters(k, d, e)
    expected_eta = record.epsilon if (d + record.i) % 2 == 0 else -record.epsilon
    if record.eta != expected_eta:
        raise BracketSeedError(
            f"record eta={record.eta} inconsistent with eps={record.epsilon}, i={record.i}"
        )
    n = moore_bound(k, 2 * d) + e
    s2 = k - 1
    z = math.cos(record.phi)
    if record.epsilon == 1:
        return n * e / (4 * s2 * (e // 2 + 1)) * f_weight(k, z) * g_weight(
            "g1", k, d, e, record.eta * z
        )
    if record.epsilon != -e // 2:
        raise ParameterDomainError(f"record epsilon {record.epsilon} matches neither 1 nor -e/2")
    if (record.i % 2 == 1) != (record.eta < 0):
        raise BracketSeedError(
            f"branch selection inconsistent: i={record.i} with eta={record.eta}"
        )
    which = "g2" if record.i % 2 == 1 else "g3"
    return n / (2 * s2 * (e // 2 + 1)) * f_weight(k, z) * g_weight(which, k, d, e, z)


# ---------------------------------------------------------------------------
# certified integrality

@dataclass(frozen=True)
class MultiplicityAssessment:
    """Certified view of one root's multiplicity."""

    record: RootRecord
    closed_form: float
    trig_form: float
    enclosure: RatInterval
    integer: int | None
    nearest: int
    deviation: float

    @property
    def integral(self) -> bool:
        return self.integer is not None


def _dyadic_pair(bracket: tuple[Fraction, Fraction]) -> tuple[int, int, int]:
    lo, hi = bracket
    shift = max(lo.denominator.bit_length(), hi.denominator.bit_length()) - 1
    return int(lo * (1 << shift)), int(hi * (1 << shift)), shift


def _multiplicity_enclosure(
    k: int, d: int, e: int, epsilon: int, bracket: tuple[Fraction, Fraction]
) -> RatInterval | None:
    """Exact rational enclosure of the closed-form multiplicity over a theta
    bracket; None when the denominator enclosure straddles zero."""
    n = moore_bound(k, 2 * d) + e
    prefactor = Fraction(n * e * k * (k - 1), 2 * epsilon * (2 * epsilon + e // 2 - 1))
    x = RatInterval(bracket[0], bracket[1])
    numer = poly_enclosure(dickson_family("H", k, d - 2).coefficients, x)
    h_deriv = poly_enclosure(derivative(dickson_family("H", k, d - 1)).coefficients, x)
    denom = h_deriv * (RatInterval.point(k * k) - x.square())
    if denom.contains_zero():
        return None
    return (numer / denom) * prefactor


def _assess_multiplicity(k, d, e, record: RootRecord) -> MultiplicityAssessment:
    """Dual-route multiplicity with a certified enclosure; the bracket is
    refined until the enclosure is decisively narrow."""
    coeffs = None
    bracket = record.bracket
    bits = TARGET_BRACKET_BITS
    enclosure = _multiplicity_enclosure(k, d, e, record.epsilon, bracket)
    while enclosure is None or enclosure.width > ENCLOSURE_WIDTH_LIMIT:
        bits += 32
        if bits > 444:
            raise IllConditionedError(
                f"multiplicity enclosure failed to converge at (k={k}, d={d}, "
                f"e={e}, eps={record.epsilon}, i={record.i})"
            )
        if coeffs is None:
            coeffs = _family_poly(k, d, record.epsilon)
        lo, hi, shift = _dyadic_pair(bracket)
        if lo == hi:
            raise IllConditionedError("degenerate exact bracket with singular denominator")
        lo, hi, shift = _bisect(coeffs, lo, hi, shift, _sign_dyadic(coeffs, lo, shift), bits)
        bracket = (Fraction(lo, 1 << shift), Fraction(hi, 1 << shift))
        enclosure = _multiplicity_enclosure(k, d, e, record.epsilon, bracket)
    closed = multiplicity_closed_form(k, d, e, record.epsilon, record.theta)
    trig = multiplicity_trig(k, d, e, record)
    nearest = round(closed)
    return MultiplicityAssessment(
        record=record,
        closed_form=closed,
        trig_form=trig,
        enclosure=enclosure,
        integer=enclosure.contained_integer(),
        nearest=int(nearest),
        deviation=abs(closed - nearest),
    )


# ---------------------------------------------------------------------------
# multiplicity structure checks (symmetry and strict minimality)

@dataclass(frozen=True)
class SymmetryReport:
    """m(theta) = m(-theta) within each family for odd d, plus the strict
    minimality of the multiplicity at the family's relevant extreme root."""

    k: int
    d: int
    e: int
    symmetry_max_rel_dev: float
    mu_minimality_margin: float | None
    lambda_minimality_margin: float | None

    @property
    def symmetry_ok(self) -> bool:
        return self.symmetry_max_rel_dev <= 1e-6

    @property
    def mu_minimality_vacuous(self) -> bool:
        return self.mu_minimality_margin is None

    @property
    def lambda_minimality_vacuous(self) -> bool:
        return self.lambda_minimality_margin is None

    @property
    def ok(self) -> bool:
        return (
            self.symmetry_ok
            and (self.mu_minimality_margin is None or self.mu_minimality_margin > 0)
            and (self.lambda_minimality_margin is None or self.lambda_minimality_margin > 0)
        )


def multiplicity_symmetry_checks(k: int, d: int, e: int) -> SymmetryReport:
    """Check m(theta_i) = m(theta_{d-i}) in both families (tolerance 1e-6
    relative) and the strict inequalities

        m(mu_2) < m(mu_i) for 3 <= i <= d-3        (mu: roots of H_{d-1} - 1)
        m(lambda_1) < m(lambda_i) for 2 <= i <= d-2 (lambda: roots of H_{d-1} + e/2)

    Margins are reported; an empty index range leaves the margin None
    (vacuous)."""
    validate_parameters(k, d, e)
    mu = [multiplicity_closed_form(k, d, e, 1, r.theta) for r in isolate_roots(k, d, e, 1)]
    lam = [
        multiplicity_closed_form(k, d, e, -e // 2, r.theta)
        for r in isolate_roots(k, d, e, -e // 2)
    ]
    dev = 0.0
    for values in (mu, lam):
        for idx in range(len(values)):
            mirror = d - 2 - idx  # i and d - i in 0-based indexing
            dev = max(dev, abs(values[idx] - values[mirror]) / abs(values[mirror]))
    mu_margin = None
    if d >= 7:
        mu_margin = min(mu[i - 1] - mu[1] for i in range(3, d - 2))
    lam_margin = None
    if d >= 5:
        lam_margin = min(lam[i - 1] - lam[0] for i in range(2, d - 1))
    return SymmetryReport(
        k=k,
        d=d,
        e=e,
        symmetry_max_rel_dev=dev,
        mu_minimality_margin=mu_margin,
        lambda_minimality_margin=lam_margin,
    )


# ---------------------------------------------------------------------------
# the product-gap exclusion

@dataclass(frozen=True)
class GapVerdict:
    """Certified bounds on lambda_2^2 - mu_2^2.

    ``lo``/``hi`` are exact rationals from the root brackets.  ``excluded``
    requires only the certified interval to contain no integer; the
    closed-form analytic bound and the closing inequality chain

        s^((d-3)/2) (d + (e/2) s^(1-d)) > (k-1) d >= (e+1) d > 4 pi sqrt(e/2+1)

    are recorded alongside as the argument's certificate."""

    k: int
    d: int
    e: int
    applicable: bool
    reason: str | None = None
    lo: Fraction | None = None
    hi: Fraction | None = None
    analytic_bound: float | None = None
    contains_integer: bool | None = None
    within_unit_interval: bool | None = None
    chain_values: tuple[float, float, float, float] | None = None
    chain_ok: bool | None = None

    @property
    def excluded(self) -> bool:
        return bool(self.applicable and self.contains_integer is False)

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return VERDICT_OUTSIDE
        return VERDICT_GAP if self.excluded else "not-excluded"


def gap_check(k: int, d: int, e: int) -> GapVerdict:
    """Run the product-gap exclusion for d >= 7 (girth >= 14); smaller d is
    outside the regime and no exclusion is claimed."""
    validate_parameters(k, d, e)
    if d < _GAP_MIN_D:
        return GapVerdict(
            k=k, d=d, e=e, applicable=False,
            reason=f"gap argument needs girth 2d >= 14, got 2d = {2 * d}",
        )
    mu2 = isolate_roots(k, d, e, 1)[1]
    lam2 = isolate_roots(k, d, e, -e // 2)[1]
    return _gap_from_records(k, d, e, mu2, lam2)


def _gap_from_records(k, d, e, mu2: RootRecord, lam2: RootRecord) -> GapVerdict:
    lam_sq = RatInterval(*lam2.bracket).square()
    mu_sq = RatInterval(*mu2.bracket).square()
    gap = lam_sq - mu_sq
    s_pow = (k - 1) ** (-(d - 1) / 2)                       # s^(1-d)
    s32 = (k - 1) ** ((d - 3) / 4)                          # s^((d-3)/2)
    analytic = (
        16 * math.pi ** 2 * (e / 2 + 1) * (k - 1) ** ((3 - d) / 2)
        * (2 * d + (e / 2 - 1) * s_pow)
        / ((d - s_pow) ** 2 * (d + e / 2 * s_pow) ** 2)
    )
    chain = (
        s32 * (d + (e / 2) * s_pow),
        (k - 1) * d,
        (e + 1) * d,
        4 * math.pi * math.sqrt(e / 2 + 1),
    )
    chain_ok = chain[0] > chain[1] >= chain[2] > chain[3]
    return GapVerdict(
        k=k,
        d=d,
        e=e,
        applicable=True,
        lo=gap.lo,
        hi=gap.hi,
        analytic_bound=analytic,
        contains_integer=gap.contained_integer_count() > 0,
        within_unit_interval=bool(gap.lo > 0 and gap.hi < 1),
        chain_values=chain,
        chain_ok=chain_ok,
    )


# ---------------------------------------------------------------------------
# full feasibility report

@dataclass(frozen=True)
class MultiplicitySet:
    """Nontrivial eigenvalue multiplicities; the two valence eigenvalues +-k
    carry multiplicity 1 each, so the entries must sum to n - 2."""

    entries: tuple[tuple[float, float], ...]
    n: int


@dataclass(frozen=True)
class MomentCheck:
    """Power-sum comparison against the intersection-matrix oracle for
    q = 0..2d-1, relative to the natural magnitude of the summands."""

    ok: bool
    worst_q: int
    worst_rel_dev: float
    tolerance: float = 1e-6


@dataclass(frozen=True)
class FeasibilityReport:
    k: int
    d: int
    e: int
    n: int
    roots: tuple[RootRecord, ...]
    assessments: tuple[MultiplicityAssessment, ...]
    multiplicities: MultiplicitySet
    all_positive: bool
    all_integral: bool
    sum_value: float
    sum_ok: bool
    moment_check: MomentCheck
    gap: GapVerdict | None
    final_verdict: str

    @property
    def max_integrality_deviation(self) -> float:
        return max((a.deviation for a in self.assessments), default=0.0)

    def spectrum(self) -> list[tuple[float, float | int]]:
        """Full candidate spectrum, ascending, including +-k with
        multiplicity 1; certified-integral multiplicities appear as ints."""
        inner = [
            (a.record.theta, a.integer if a.integral else a.closed_form)
            for a in self.assessments
        ]
        return [(-float(self.k), 1)] + sorted(inner) + [(float(self.k), 1)]


def _moment_check(k: int, d: int, e: int, n: int, assessments) -> MomentCheck:
    b = build_bd(k, d)
    worst_q, worst = 0, 0.0
    for q in range(2 * d):
        lhs = sum(a.closed_form * a.record.theta ** q for a in assessments)
        lhs += float(k) ** q + float(-k) ** q
        rhs = float(n * bd_entry00(b, q))
        scale = max(
            abs(rhs),
            sum(abs(a.closed_form * a.record.theta ** q) for a in assessments)
            + 2.0 * float(k) ** q,
        )
        rel = abs(lhs - rhs) / scale if scale else abs(lhs - rhs)
        if rel > worst:
            worst_q, worst = q, rel
    return MomentCheck(ok=worst <= 1e-6, worst_q=worst_q, worst_rel_dev=worst)


def spectral_feasibility(k: int, d: int, e: int) -> FeasibilityReport:
    """Assemble the full spectral verdict for (k, d, e).

    Isolates all 2(d-1) candidate eigenvalues, computes every multiplicity by
    both routes with certified enclosures, and checks: positivity,
    integrality, the multiplicity sum n - 2, the moment identity for
    q = 0..2d-1, and (for d >= 7) the product-gap exclusion.  The gap
    exclusion reproduces the nonexistence argument and takes precedence;
    otherwise any failed spectral consistency check excludes by integrality.
    """
    validate_parameters(k, d, e)
    n = moore_bound(k, 2 * d) + e
    roots = isolate_roots(k, d, e, 1) + isolate_roots(k, d, e, -e // 2)
    roots.sort(key=lambda r: r.theta)
    assessments = tuple(_assess_multiplicity(k, d, e, r) for r in roots)

    all_positive = all(a.closed_form > 0 for a in assessments)
    all_integral = all(a.integral for a in assessments)
    total = sum(a.closed_form for a in assessments)
    sum_ok = abs(total - (n - 2)) <= 1e-6 * n
    moments = _moment_check(k, d, e, n, assessments)

    gap = None
    if d >= _GAP_MIN_D:
        mu2 = next(r for r in roots if r.epsilon == 1 and r.i == 2)
        lam2 = next(r for r in roots if r.epsilon == -e // 2 and r.i == 2)
        gap = _gap_from_records(k, d, e, mu2, lam2)

    if gap is not None and gap.excluded:
        verdict = VERDICT_GAP
    elif not (all_positive and all_integral and sum_ok and moments.ok):
        verdict = VERDICT_INTEGRALITY
    else:
        verdict = VERDICT_ADMISSIBLE

    return FeasibilityReport(
        k=k,
        d=d,
        e=e,
        n=n,
        roots=tuple(roots),
        assessments=assessments,
        multiplicities=MultiplicitySet(
            entries=tuple((a.record.theta, a.closed_form) for a in assessments), n=n
        ),
        all_positive=all_positive,
        all_integral=all_integral,
        sum_value=total,
        sum_ok=sum_ok,
        moment_check=moments,
        gap=gap,
        final_verdict=verdict,
    )


@dataclass(frozen=True)
class SkippedTriple:
    """A scan entry whose parameters fall outside the supported regime."""

    k: int
    d: int
    e: int
    reason: str

    final_verdict: str = VERDICT_OUTSIDE


ScanItem = Union[FeasibilityReport, SkippedTriple]


def scan(
    k_range: Iterable[int], d_range: Iterable[int], e_range: Iterable[int]
) -> Iterator[ScanItem]:
    """Stream feasibility reports over the parameter grid in deterministic
    (k, then d, then e) order; invalid triples yield SkippedTriple notes."""
    for k in k_range:
        for d in d_range:
            for e in e_range:
                try:
                    yield spectral_feasibility(k, d, e)
                except ParameterDomainError as exc:
                    yield SkippedTriple(k=k, d=d, e=e, reason=str(exc))
