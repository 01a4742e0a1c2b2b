"""Hilbert series, Hilbert polynomials, and derived projective invariants.

The Hilbert series of R/I is computed from the initial ideal of a Groebner
basis by the standard pivot-variable recursion on monomial ideals; it is
independent of the monomial order.  Writing the series as Q(t)/(1-t)^D with
Q(1) != 0, the Hilbert polynomial comes out exactly as a sum of binomial
terms, together with a regularity witness m0 such that the polynomial and
the Hilbert function agree in all degrees >= m0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .groebner import Ideal, StepBudget, _budget, saturate_irrelevant
from .polyring import DEGREVLEX, MonomialOrder, Poly, mono_deg, mono_divides

Exponent = tuple


def initial_ideal(
    I: Ideal,
    order: MonomialOrder = DEGREVLEX,
    budget: StepBudget | int | None = None,
) -> Ideal:
    """Monomial ideal of leading monomials of the reduced Groebner basis."""
    if not I.is_homogeneous():
        raise ValueError("initial ideal needs a homogeneous ideal")
    gb = I.groebner(order, budget)
    ring = I.ring
    gens = [ring.monomial(g.lead_monomial(order)) for g in gb]
    return Ideal(ring, gens)


# ---------------------------------------------------------------------------
# integer polynomials in one variable t, as dense coefficient tuples

def _padd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pshift(a: Sequence[int], k: int) -> tuple[int, ...]:
    return (0,) * k + tuple(a)


def _pmul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _ptrim(a: Sequence[int]) -> tuple[int, ...]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def _minimalize(gens: Sequence[Exponent]) -> tuple[Exponent, ...]:
    out: list[Exponent] = []
    for g in sorted(gens, key=mono_deg):
        if any(mono_divides(h, g) for h in out):
            continue
        out.append(g)
    return tuple(sorted(out))


def hilbert_series_numerator(
    monomials: Sequence[Exponent], nvars: int
) -> tuple[int, ...]:
    """Numerator N(t) with HS(R/M) = N(t)/(1-t)^nvars for the monomial ideal M."""
    for m in monomials:
        if len(m) != nvars:
            raise ValueError("exponent length mismatch")
    memo: dict = {}

    def rec(gens: tuple[Exponent, ...]) -> tuple[int, ...]:
        if not gens:
            return (1,)
        if len(gens) == 1:
            d = mono_deg(gens[0])
            return _ptrim((1,) + (0,) * (d - 1) + (-1,))
        cached = memo.get(gens)
        if cached is not None:
            return cached
        # coprime supports: the generators form a regular sequence
        support_count = [0] * nvars
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    support_count[i] += 1
        if all(c <= 1 for c in support_count):
            result = (1,)
            for g in gens:
                d = mono_deg(g)
                result = _pmul(result, (1,) + (0,) * (d - 1) + (-1,))
            result = _ptrim(result)
            memo[gens] = result
            return result
        pivot = max(range(nvars), key=lambda i: support_count[i])
        # M + (x_pivot)
        unit = tuple(1 if i == pivot else 0 for i in range(nvars))
        plus = _minimalize([unit] + [g for g in gens if g[pivot] == 0])
        # M : x_pivot
        colon = _minimalize(
            [
                g[:pivot] + (g[pivot] - 1,) + g[pivot + 1 :] if g[pivot] else g
                for g in gens
            ]
        )
        result = _ptrim(_padd(rec(plus), _pshift(rec(colon), 1)))
        memo[gens] = result
        return result

    return rec(_minimalize(monomials))


def series_coefficients(
    numerator: Sequence[int], nvars: int, upto: int
) -> list[int]:
    """Hilbert function values HF(0..upto) from N(t)/(1-t)^nvars."""
    vals = [numerator[i] if i < len(numerator) else 0 for i in range(upto + 1)]
    for _ in range(nvars):
        for i in range(1, upto + 1):
            vals[i] += vals[i - 1]
    return vals


def standard_monomial_count(
    initial_gens: Sequence[Exponent], nvars: int, degree: int
) -> int:
    """Brute-force count of degree-d monomials outside the monomial ideal."""

    count = 0
    stack = [((), degree)]
    gens = list(initial_gens)
    exps: list[int] = []

    def rec(pos: int, remaining: int) -> int:
        if pos == nvars - 1:
            exps.append(remaining)
            n = 0 if _divisible(exps, gens) else 1
            exps.pop()
            return n
        total = 0
        for e in range(remaining + 1):
            exps.append(e)
            total += rec(pos + 1, remaining - e)
            exps.pop()
        return total

    def _divisible(e: list[int], gens: list[Exponent]) -> bool:
        for g in gens:
            if all(g[i] <= e[i] for i in range(nvars)):
                return True
        return False

    return rec(0, degree)


# ---------------------------------------------------------------------------
# Hilbert polynomial and geometric invariants

def _binomial_poly(shift: int, k: int) -> tuple[Fraction, ...]:
    """Coefficients of binom(t + shift, k) as a polynomial in t."""
    coeffs: list[Fraction] = [Fraction(1)]
    for i in range(k):
        # multiply by (t + shift - i)
        c = Fraction(shift - i)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for j, a in enumerate(coeffs):
            nxt[j] += a * c
            nxt[j + 1] += a
        coeffs = nxt
    if k:
        from math import factorial

        f = Fraction(1, factorial(k))
        coeffs = [a * f for a in coeffs]
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[Fraction], t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * t + c
    return acc


def poly_shift(coeffs: Sequence[Fraction], delta: int) -> tuple[Fraction, ...]:
    """Coefficients of p(t + delta)."""
    out = [Fraction(0)] * len(coeffs)
    for k, a in enumerate(coeffs):
        for j in range(k + 1):
            out[j] += a * comb(k, j) * Fraction(delta) ** (k - j)
    return tuple(out)


def poly_difference(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """p(t) - p(t-1), trimmed."""
    shifted = poly_shift(coeffs, -1)
    out = [a - b for a, b in zip(coeffs, shifted)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator and the derived projective invariants."""

    numerator: tuple[int, ...]  # over (1-t)^nvars
    nvars: int
    hp: tuple[Fraction, ...]  # Hilbert polynomial coefficients in t
    dim_proj: int  # -1 for the empty scheme
    degree: int | None  # None when dim_proj == -1
    sectional_genus: int | None  # defined for dim_proj >= 1
    chi: int | None  # hp(0)
    regularity_witness: int  # hp(m) == HF(m) for all m >= this

    def hp_value(self, t) -> Fraction:
        return poly_eval(self.hp, t)

    def hilbert_function(self, upto: int) -> list[int]:
        return series_coefficients(self.numerator, self.nvars, upto)

    def hp_str(self) -> str:
        parts = []
        for k in range(len(self.hp) - 1, -1, -1):
            c = self.hp[k]
            if c == 0:
                continue
            term = "t" if k == 1 else (f"t^{k}" if k else "")
            mag = abs(c)
            body = (
                f"{mag}*{term}"
                if term and mag != 1
                else (term if term else str(mag))
            )
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def hilbert_data(
    I: Ideal,
    order: MonomialOrder = DEGREVLEX,
    assume_saturated: bool = False,
    budget: StepBudget | int | None = None,
    seed: int = 0,
) -> HilbertData:
    """Full Hilbert data of a homogeneous ideal.

    The caller is expected to pass a saturated ideal; unless
    `assume_saturated` is set, the input is defensively saturated by the
    irrelevant ideal first (which never changes a saturated ideal).
    """
    if not I.is_homogeneous():
        raise ValueError("hilbert_data needs a homogeneous ideal")
    b = _budget(budget)
    if not assume_saturated and not I.is_zero():
        I = saturate_irrelevant(I, budget=b, seed=seed)
    nvars = I.ring.nvars
    if I.is_zero():
        monos: list[Exponent] = []
    else:
        gb = I.groebner(order, b)
        monos = [g.lead_monomial(order) for g in gb]
        if any(mono_deg(m) == 0 for m in monos):
            # unit ideal: empty scheme with zero series
            return HilbertData((0,), nvars, (Fraction(0),), -1, None, None, None, 0)
    numerator = hilbert_series_numerator(monos, nvars)
    # strip factors of (1-t): N = (1-t)^s * Q with Q(1) != 0
    q = list(numerator)
    s = 0
    while len(q) >= 1 and sum(q) == 0 and any(q):
        # synthetic division by (1-t): N(t) = (1-t)*Q(t)
        out = [0] * (len(q) - 1)
        acc = 0
        for i in range(len(q) - 1):
            acc = q[i] + acc
            out[i] = acc
        q = out if out else [0]
        s += 1
    krull = nvars - s
    dim_proj = krull - 1
    if krull == 0 or not any(q):
        return HilbertData(numerator, nvars, (Fraction(0),), -1, None, None, None, 0)
    degree = sum(q)
    k = krull - 1  # degree of the Hilbert polynomial
    hp = [Fraction(0)] * (k + 1)
    for j, qj in enumerate(q):
        if qj == 0:
            continue
        term = _binomial_poly(k - j, k)
        for idx, c in enumerate(term):
            hp[idx] += qj * c
    m0 = max(len(q) - 1 - k, 0)
    chi = poly_eval(hp, 0)
    genus: int | None = None
    if dim_proj >= 1:
        curve = tuple(hp)
        for _ in range(dim_proj - 1):
            curve = poly_difference(curve)
        genus_f = 1 - poly_eval(curve, 0)
        genus = int(genus_f)
    chi_i = int(chi)
    return HilbertData(
        numerator, nvars, tuple(hp), dim_proj, degree, genus, chi_i, m0
    )


def graded_piece(
    I: Ideal, e: int, budget: StepBudget | int | None = None
) -> tuple[int, list[Poly]]:
    """Dimension and a deterministic echelon basis of the degree-e piece of I."""
    from .linalg import rref

    b = _budget(budget)
    ring = I.ring
    if I.is_zero():
        return 0, []
    gb = I.groebner(DEGREVLEX, b)
    nvars = ring.nvars
    monos = _degree_monomials(nvars, e)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gb:
        d = g.degree()
        if d > e or not g.is_homogeneous():
            continue
        for shift in _degree_monomials(nvars, e - d):
            row = [Fraction(0)] * len(monos)
            for ge, c in g.terms.items():
                m = tuple(x + y for x, y in zip(shift, ge))
                row[col[m]] = c
            rows.append(row)
    if not rows:
        return 0, []
    echelon, pivots = rref(rows)
    basis = [
        Poly(ring, {monos[j]: c for j, c in enumerate(row) if c})
        for row in echelon
    ]
    return len(basis), basis


def graded_piece_dim(
    I: Ideal, e: int, budget: StepBudget | int | None = None
) -> int:
    return graded_piece(I, e, budget)[0]


def _degree_monomials(nvars: int, degree: int) -> list[Exponent]:
    """All degree-d monomials, leading monomial first (descending degrevlex)."""
    out: list[Exponent] = []

    def rec(prefix: tuple, remaining: int, pos: int) -> None:
        if pos == nvars - 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, pos + 1)

    rec((), degree, 0)
    return DEGREVLEX.sorted_monomials(out)
