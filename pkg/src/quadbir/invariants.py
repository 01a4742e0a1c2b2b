"""Closed-form numeric relations for quadratic birational transformations.

Pure integer/rational functions over the invariant tuple
(r, n, a, lambda, g, chi, d, Delta, c, delta, eps): Hilbert-polynomial
identities per base-locus dimension, Segre/Chern degree displays, the
blow-up pushforward degrees, double-point residuals, structure-specific
(d, Delta) systems, coindex/secant-defect bookkeeping, ideal-generation
thresholds, Castelnuovo's genus bound, and the dimension-four relations.

Everything is exact; a relation that forces a non-integer value raises
Infeasible, which the enumeration layer uses as a filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


class Infeasible(ValueError):
    """A required invariant came out non-integral or out of range."""


def _as_int(x: Fraction, what: str) -> int:
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise Infeasible(f"{what} = {x} is not an integer")
    return int(x)


@dataclass
class InvariantRecord:
    """The numeric state of one transformation; None marks unknown fields.

    r: dim of the base locus; n: source dimension; a: ambient gap of the
    image (S in P^(n+a)); lam: deg of the base locus; g: sectional genus;
    chi: Euler characteristic of the structure sheaf; d: inverse degree;
    Delta: deg of the image; c: coindex; eps: 1 iff the base locus is
    degenerate (spans a hyperplane).
    """

    r: int | None = None
    n: int | None = None
    a: int | None = None
    lam: int | None = None
    g: int | None = None
    chi: int | None = None
    d: int | None = None
    Delta: int | None = None
    c: int | None = None
    eps: int | None = None

    @property
    def delta(self) -> int | None:
        if self.r is None or self.n is None:
            return None
        return 2 * self.r + 2 - self.n

    @property
    def r_prime(self) -> int | None:
        if self.r is None or self.n is None:
            return None
        return 2 * self.n - 2 * self.r - 4

    def check_relations(self) -> list[str]:
        """Names of violated closed-form relations among the known fields."""
        bad = []
        if self.c is not None and None not in (self.r, self.n, self.d):
            if self.c != coindex_delta(self.r, self.n, self.d)[0]:
                bad.append("coindex")
        if self.delta is not None and self.delta < 0:
            bad.append("secant_defect_nonnegative")
        if self.eps is not None and self.eps not in (0, 1):
            bad.append("eps_binary")
        return bad


@dataclass(frozen=True)
class ClassProfile:
    """Chern and Segre degree sequences (c_j, s_j for j = 1..r)."""

    r: int
    c: tuple
    s: tuple


# ---------------------------------------------------------------------------
# Hilbert-polynomial relations per base-locus dimension

def hp_relations(
    r: int,
    n: int,
    a: int,
    eps: int,
    lam: int | None = None,
    g: int | None = None,
    chi: int | None = None,
) -> dict:
    """Complete the invariant fields determined by the Hilbert polynomial.

    r=1 returns lam and g from (n, a, eps); r=2 returns chi and lam from g;
    r=3 returns chi from (lam, g); r=4 returns the full Hilbert polynomial
    coefficient vector from (lam, g, chi, a).
    """
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    if r == 1:
        lam_f = Fraction(n * n - n + 2 * eps - 2 * a - 2, 2)
        g_f = Fraction(n * n - 3 * n + 4 * eps - 2 * a - 2, 2)
        return {"lam": _as_int(lam_f, "lam"), "g": _as_int(g_f, "g")}
    if r == 2:
        if g is None:
            raise ValueError("r=2 needs g")
        chi_f = Fraction(2 * a - n * n + 5 * n + 2 * g - 6 * eps + 4, 4)
        lam_f = Fraction(n * n - n + 2 * g + 2 * eps - 2 * a - 4, 4)
        return {"chi": _as_int(chi_f, "chi"), "lam": _as_int(lam_f, "lam")}
    if r == 3:
        if lam is None or g is None:
            raise ValueError("r=3 needs lam and g")
        chi_f = Fraction(4 * lam - n * n + 3 * n - 2 * g - 4 * eps + 2 * a + 6, 2)
        return {"chi": _as_int(chi_f, "chi")}
    if r == 4:
        if None in (lam, g, chi):
            raise ValueError("r=4 needs lam, g, chi")
        return {"hp": hilbert_poly_r4(lam, g, chi, a)}
    raise ValueError(f"unsupported base-locus dimension r={r}")


def hilbert_poly_r4(lam: int, g: int, chi: int, a: int) -> tuple[Fraction, ...]:
    """Coefficient vector (in t) of the dimension-4 Hilbert polynomial.

    Pinned by the values 11 at t=1 and 55-a at t=2.
    """
    coeffs = [Fraction(0)] * 5
    for qty, shift, k in (
        (Fraction(lam), 3, 4),
        (Fraction(1 - g), 2, 3),
        (Fraction(2 * g - 3 * lam + chi - a + 31), 1, 2),
    ):
        term = _binom_poly(shift, k)
        for i, cf in enumerate(term):
            coeffs[i] += qty * cf
    coeffs[1] += Fraction(-g + 2 * lam - 2 * chi + a - 21)
    coeffs[0] += Fraction(chi)
    return tuple(coeffs)


def _binom_poly(shift: int, k: int) -> tuple[Fraction, ...]:
    from math import factorial

    out = [Fraction(1)]
    for i in range(k):
        c = Fraction(shift - i)
        nxt = [Fraction(0)] * (len(out) + 1)
        for j, v in enumerate(out):
            nxt[j] += v * c
            nxt[j + 1] += v
        out = nxt
    f = Fraction(1, factorial(k))
    return tuple(v * f for v in out)


def eval_poly(coeffs: Sequence[Fraction], t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * t + c
    return acc


# ---------------------------------------------------------------------------
# Segre and Chern degree displays

def segre_chern(
    r: int,
    n: int,
    lam: int,
    g: int,
    d: int | None = None,
    Delta: int | None = None,
) -> tuple[ClassProfile, dict]:
    """Chern/Segre degrees of the base locus and the derived degree data.

    r=1 also solves for d and Delta; r=2 yields the product d*Delta (plus
    c2, s2 once Delta is known); r=3 needs d and Delta for the j=2,3 terms.
    """
    two_n = 2**n
    if r == 1:
        c1 = 2 - 2 * g
        s1 = (-n - 1) * lam - 2 * g + 2
        den = (2 * n - 2) * lam - 2 * two_n - 4 * g + 4
        derived: dict = {}
        if den == 0:
            raise Infeasible("inverse-degree denominator vanishes")
        d_f = Fraction(2 * lam - two_n, den)
        derived["d"] = _as_int(d_f, "d")
        derived["Delta"] = (1 - n) * lam + two_n + 2 * g - 2
        return ClassProfile(1, (c1,), (s1,)), derived
    if r == 2:
        c1 = lam - 2 * g + 2
        s1 = -n * lam - 2 * g + 2
        d_delta = (2 - n) * lam + two_n // 2 + 2 * g - 2
        derived = {"dDelta": d_delta}
        cs: tuple = (c1,)
        ss: tuple = (s1,)
        if Delta is not None:
            c2 = -Fraction(
                (n * n - 3 * n) * lam
                - 2 * two_n
                + (4 - 4 * g) * n
                + 4 * g
                + 2 * Delta
                - 4,
                2,
            )
            s2 = 2 * n * lam + two_n + (4 * g - 4) * n - Delta
            cs = (c1, _as_int(c2, "c2"))
            ss = (s1, s2)
        return ClassProfile(2, cs, ss), derived
    if r == 3:
        c1 = 2 * lam - 2 * g + 2
        s1 = (1 - n) * lam - 2 * g + 2
        if d is None or Delta is None:
            return ClassProfile(3, (c1,), (s1,)), {}
        dd = d * Delta
        c2 = -Fraction(
            (n * n - 5 * n + 2) * lam
            - two_n
            + (4 - 4 * g) * n
            + 12 * g
            + 2 * dd
            - 12,
            2,
        )
        c3 = Fraction(
            (2 * n**3 - 12 * n * n + 22 * n - 12) * lam
            + 9 * two_n
            + n * (-3 * two_n + 18 * g + 6 * dd - 18)
            + (6 - 6 * g) * n * n
            - 24 * g
            + (-6 * d - 6) * Delta
            + 24,
            6,
        )
        s2 = Fraction(
            (4 * n - 4) * lam
            + two_n
            + (8 * g - 8) * n
            - 8 * g
            - 2 * dd
            + 8,
            2,
        )
        s3 = Fraction(
            (2 * n**3 - 12 * n * n + 10 * n) * lam
            + 3 * two_n
            + n * (-3 * two_n + 12 * g + 6 * dd - 12)
            + (12 - 12 * g) * n * n
            - 3 * Delta,
            3,
        )
        profile = ClassProfile(
            3,
            (c1, _as_int(c2, "c2"), _as_int(c3, "c3")),
            (s1, _as_int(s2, "s2"), _as_int(s3, "s3")),
        )
        return profile, {"dDelta": dd}
    raise ValueError(f"unsupported base-locus dimension r={r}")


def normal_segre_from_chern(
    r: int, n: int, lam: int, c: Sequence[int]
) -> tuple[int, ...]:
    """Normal-bundle Segre degrees from tangent Chern degrees (r <= 3).

    Expands s(N) = c(T_ambient|_B) / c(T_B) degree by degree:
        s_1 = -lam (n+1) + c_1
        s_2 =  lam C(n+2, 2) - c_1 (n+1) + c_2
        s_3 = -lam C(n+3, 3) + c_1 C(n+2, 2) - c_2 (n+1) + c_3
    """
    if len(c) != r or r > 3:
        raise ValueError("need c_1..c_r with r <= 3")
    out = []
    if r >= 1:
        out.append(-lam * (n + 1) + c[0])
    if r >= 2:
        out.append(lam * comb(n + 2, 2) - c[0] * (n + 1) + c[1])
    if r >= 3:
        out.append(
            -lam * comb(n + 3, 3) + c[0] * comb(n + 2, 2) - c[1] * (n + 1) + c[2]
        )
    return tuple(out)


def pushforward_degrees(
    r: int, n: int, lam: int, s: Sequence[int]
) -> tuple[int, int]:
    """Degrees of the strict transform system under the blow-up.

    For a quadratic map with r-dimensional smooth base locus of degree lam
    and normal-bundle Segre degrees s = (s_1, ..., s_r):

        deg(psi) * deg(image) = (2H - E)^n
        d * deg(image)        = (2H - E)^(n-1) . H

    expanded through the intersection table H^j . E^(n-j), whose sign and
    indexing convention is pinned so that the (r=3, n=8) specialization
    reproduces the coefficient vectors (-448, -112, -16, -1, +256) and
    (-84, -14, -1, +128) exactly.
    """
    if len(s) != r:
        raise ValueError("need s_1..s_r")
    if not r < n:
        raise ValueError("need r < n")
    svals = {0: lam}
    for j, v in enumerate(s, start=1):
        svals[j] = v
    deg_delta = 2**n
    for j in range(0, r + 1):
        deg_delta -= comb(n, j) * 2**j * svals[r - j]
    d_delta = 2 ** (n - 1)
    for j in range(1, r + 1):
        d_delta -= comb(n - 1, j - 1) * 2 ** (j - 1) * svals[r - j]
    return deg_delta, d_delta


def liftability_certificate(deg_delta: int, d_delta: int) -> bool:
    """True when some integer inverse degree is consistent with a degree-one
    map: the candidate d * Delta must be divisible by Delta = deg_delta."""
    return deg_delta > 0 and d_delta % deg_delta == 0


# ---------------------------------------------------------------------------
# double point formula

def double_point(
    r: int,
    lam: int,
    g: int,
    d: int,
    Delta: int | None = None,
    a: int | None = None,
    k3: int | None = None,
    n: int | None = None,
) -> Fraction:
    """Residual of the double-point identity in the secant-defect-zero case
    (n = 2r + 2); zero means the invariants are consistent.

    r=1 uses the tangent Segre degrees directly; r=2 routes through chi and
    the surface Chern degrees; r=3 compares the stated K^3 value with the
    closed form lam^2 + 23 lam - 24 g - (7d+1) Delta - 4d + 36 a - 226.
    """
    if n is not None and n != 2 * r + 2:
        raise ValueError("double point formula needs secant defect zero")
    if r == 1:
        # s_1(T) = 2g - 2, s_0 . H = lam
        return Fraction(2 * (2 * d - 1) - (lam * lam - (2 * g - 2) - 3 * lam))
    if r == 2:
        if Delta is None or a is None:
            raise ValueError("r=2 residual needs Delta and a")
        n2 = 6
        chi = Fraction(2 * a - n2 * n2 + 5 * n2 + 2 * g - 0 + 4, 4)
        c1 = lam - 2 * g + 2
        c2 = -9 * lam + 10 * g - Delta + 54
        rhs = lam * lam - 10 * lam - 12 * chi + 2 * c2 + 5 * c1
        return Fraction(2 * (2 * d - 1)) - rhs
    if r == 3:
        if Delta is None or a is None or k3 is None:
            raise ValueError("r=3 residual needs Delta, a and the K^3 value")
        rhs = (
            lam * lam
            + 23 * lam
            - 24 * g
            - (7 * d + 1) * Delta
            - 4 * d
            + 36 * a
            - 226
        )
        return Fraction(k3 - rhs)
    raise ValueError(f"unsupported base-locus dimension r={r}")


def r2_ddelta_identity(a: int) -> int:
    """The nondegenerate surface case pins d * Delta = 2a + 4."""
    return 2 * a + 4


def r2_delta_quotient(g: int, a: int, d: int) -> Fraction:
    """Delta = (g^2 + (-2a-4)g - 16d + a^2 - 4a + 75) / 8 (nondegenerate
    surface case in P^6)."""
    return Fraction(
        g * g + (-2 * a - 4) * g - 16 * d + a * a - 4 * a + 75, 8
    )


# ---------------------------------------------------------------------------
# structure-specific (d, Delta) systems for threefold base loci in P^8

QUADRIC_FIBRATION = "quadric_fibration_r3"
SCROLL_OVER_SURFACE = "scroll_over_surface_r3"
SCROLL_OVER_CURVE = "scroll_over_curve_r3"


def structure_k3(kind: str, lam: int, g: int, a: int | None = None,
                 d_delta: int | None = None) -> int:
    """K^3 of the base locus for the classified fibration structures."""
    if kind == QUADRIC_FIBRATION:
        return -8 * lam + 24 * g - 24
    if kind == SCROLL_OVER_CURVE:
        return 54 * (g - 1)
    if kind == SCROLL_OVER_SURFACE:
        if a is None or d_delta is None:
            raise ValueError("surface scroll K^3 needs a and d*Delta")
        return 130 * lam - 72 * g - 6 * d_delta + 72 * a - 1104
    raise ValueError(f"unknown structure kind {kind!r}")


def structure_formulas(
    kind: str,
    lam: int,
    g: int,
    a: int,
    d: int | None = None,
) -> list[dict]:
    """Solve the displayed structure systems for positive integers (d, Delta).

    quadric_fibration_r3:  d*Delta = 23 lam - 16 g + 12 a - 180,
                           Delta + 4 d = lam^2 - 130 lam + 64 g - 48 a + 1058.
    scroll_over_curve_r3:  d*Delta = 22 lam - 20 g + 12 a - 176 together with
                           lam^2 + 23 lam - 78 g - (7d+1) Delta - 4d + 36 a - 172 = 0.
    scroll_over_surface_r3 (d required or scanned):
                           Delta = (lam^2 - 107 lam + 48 g - 4 d - 36 a + 878)/(d+1),
                           plus the displayed c2 value of the base surface.
    """
    if kind == QUADRIC_FIBRATION:
        dd = 23 * lam - 16 * g + 12 * a - 180
        ssum = lam * lam - 130 * lam + 64 * g - 48 * a + 1058
        return [
            {"d": dv, "Delta": Dv}
            for dv, Dv in _solve_product_linear(dd, ssum, coeff_d=4)
        ]
    if kind == SCROLL_OVER_CURVE:
        dd = 22 * lam - 20 * g + 12 * a - 176
        total = lam * lam + 23 * lam - 78 * g + 36 * a - 172
        # (7d+1) Delta + 4d = total  =>  Delta + 4d = total - 7 dd
        ssum = total - 7 * dd
        return [
            {"d": dv, "Delta": Dv}
            for dv, Dv in _solve_product_linear(dd, ssum, coeff_d=4)
        ]
    if kind == SCROLL_OVER_SURFACE:
        ds = [d] if d is not None else list(range(1, 13))
        out = []
        for dv in ds:
            num = lam * lam - 107 * lam + 48 * g - 4 * dv - 36 * a + 878
            if num % (dv + 1):
                continue
            Dv = num // (dv + 1)
            if Dv <= 0:
                continue
            c2y = Fraction(
                (7 * dv - 1) * lam * lam
                + (177 - 679 * dv) * lam
                + (292 * dv - 92) * g
                - 28 * dv * dv
                + (5554 - 252 * a) * dv
                + 36 * a
                - 1474,
                2 * dv + 2,
            )
            if c2y.denominator != 1:
                continue
            out.append({"d": dv, "Delta": Dv, "c2_base": int(c2y)})
        return out
    raise ValueError(f"unknown structure kind {kind!r}")


def _solve_product_linear(
    prod: int, ssum: int, coeff_d: int
) -> list[tuple[int, int]]:
    """Positive integer solutions of d*Delta = prod, Delta + coeff_d*d = ssum."""
    out = []
    if prod <= 0:
        return out
    for dv in range(1, ssum // coeff_d + 1):
        Dv = ssum - coeff_d * dv
        if Dv <= 0:
            continue
        if dv * Dv == prod:
            out.append((dv, Dv))
    return out


# ---------------------------------------------------------------------------
# coindex, secant defect, thresholds, genus bound

def coindex_delta(r: int, n: int, d: int) -> tuple[int, int, int, int]:
    """(coindex, secant defect, dim of the inverse base locus, deg Sec)."""
    c = (1 - 2 * d) * r + d * n - 3 * d + 2
    delta = 2 * r + 2 - n
    r_prime = 2 * n - 2 * r - 4
    deg_sec = 2 * d - 1
    return c, delta, r_prime, deg_sec


def k2_thresholds(lam: int, s: int, h1_vanishes: bool = True) -> dict:
    """Ideal-generation thresholds for a smooth linearly normal variety of
    degree lam and codimension s (assuming the needed h^1 vanishing)."""
    if not h1_vanishes:
        raise ValueError("thresholds require the h^1 vanishing hypothesis")
    return {
        "acm": lam <= 2 * s + 1,
        "quadric_generated": lam <= 2 * s,
        "linear_syzygies": lam <= 2 * s - 1,
    }


def castelnuovo_bound(lam: int, N: int) -> int:
    """Castelnuovo's bound on the genus of a nondegenerate degree-lam curve
    in P^N: rho = binom(m, 2)(N-1) + m*eps0 with m = (lam-1) // (N-1)."""
    if N < 2 or lam < N:
        raise ValueError("need a nondegenerate curve: lam >= N >= 2")
    m = (lam - 1) // (N - 1)
    eps0 = lam - 1 - m * (N - 1)
    return comb(m, 2) * (N - 1) + m * eps0


# ---------------------------------------------------------------------------
# dimension four

def r4_relations(lam: int, g: int, d: int, Delta: int) -> tuple[int, int]:
    """The two displayed Chern-degree combinations for fourfold base loci:

        37 c2.H^2 - c4   and   37 c3.H + 7 c4.
    """
    first = -231 * lam + 188 * g + (1 - 9 * d) * Delta + 3396
    second = 655 * lam - 428 * g + (26 * d - 7) * Delta - 5716
    return first, second


def r4_chern_lattice(
    first: int, second: int, c4: int
) -> tuple[int, int]:
    """Solve the two r=4 combinations for (c2.H^2, c3.H) at a given c4.

    Raises Infeasible when the 37-divisibility fails, which is exactly the
    rejection used against the degree-11 elliptic-scroll candidate.
    """
    c2h2 = Fraction(first + c4, 37)
    c3h = Fraction(second - 7 * c4, 37)
    return _as_int(c2h2, "c2.H^2"), _as_int(c3h, "c3.H")
