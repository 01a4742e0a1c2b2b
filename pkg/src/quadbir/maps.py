"""Rational maps defined by quadrics and their certificates.

A map is stored by its component polynomials (homogeneous, one common
degree).  The operations here certify statements about such maps exactly:
membership of the image in a hypersurface, the image ideal by elimination,
singular loci by Jacobian minors, smoothness by per-chart Jacobians of a
solved presentation, composition identities, and inverse-degree detection.
All certificates exploit that projective space is irreducible: a polynomial
identity that holds on a dense open subset holds identically.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .groebner import (
    Ideal,
    StepBudget,
    _budget,
    contains_one,
    dehomogenize,
    eliminate,
    saturate_irrelevant,
    solve_simplify,
)
from .hilbert import HilbertData, graded_piece
from .linalg import kernel_basis
from .polyring import Poly, Ring

# flags used in map reports
ASSUMPTION3_VIOLATED = "ASSUMPTION3_VIOLATED"
NOT_LIFTABLE_CERTIFICATE = "NOT_LIFTABLE_CERTIFICATE"
SKIPPED_HEAVY = "SKIPPED_HEAVY"


class HeavyComputation(RuntimeError):
    """The requested symbolic computation exceeds the configured size cap."""


class NotACertificate(ValueError):
    """The composite map vanishes identically; pick another representative."""


@dataclass
class RationalMap:
    """A rational map between projective spaces, given by its components."""

    source_ring: Ring
    target_ring: Ring
    components: tuple[Poly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps or all(not c for c in comps):
            raise ValueError("map needs a nonzero component")
        degs = {c.degree() for c in comps if c}
        if len(degs) != 1 or not all(c.is_homogeneous() for c in comps if c):
            raise ValueError("components must be homogeneous of one degree")
        if len(comps) != self.target_ring.nvars:
            raise ValueError("component count must match target ring")
        self.components = comps

    @property
    def degree(self) -> int:
        return max(c.degree() for c in self.components if c)

    @property
    def source_dim(self) -> int:
        return self.source_ring.nvars - 1

    @property
    def target_dim(self) -> int:
        return self.target_ring.nvars - 1

    def base_ideal(self) -> Ideal:
        return Ideal(self.source_ring, self.components)


@dataclass
class MapReport:
    """Aggregated certified facts about one quadratic map."""

    a: int | None = None
    base_locus: HilbertData | None = None
    image_degree: int | None = None
    inverse_degree: int | None = None
    composition_identity: bool | None = None
    singular_locus: HilbertData | None = None
    flags: set = field(default_factory=set)


def _target_ring(n_components: int, prefix: str = "y") -> Ring:
    return Ring([f"{prefix}{i}" for i in range(n_components)])


def map_from_ideal(
    I: Ideal,
    budget: StepBudget | int | None = None,
    target_prefix: str = "y",
) -> RationalMap:
    """The rational map defined by all quadrics through V(I).

    Components form the deterministic echelon basis of the degree-2 piece
    of the ideal, so downstream image ideals are reproducible.
    """
    dim2, basis = graded_piece(I, 2, budget)
    if dim2 == 0:
        raise ValueError("ideal contains no quadrics")
    return RationalMap(I.ring, _target_ring(dim2, target_prefix), tuple(basis))


def ambient_gap(F: RationalMap) -> int:
    """a = N - n for F: P^n -> P^N."""
    return F.target_dim - F.source_dim


def forward_annihilation(F: RationalMap, g: Poly) -> bool:
    """True iff g(F_0, ..., F_N) is identically zero.

    Certifies that the closed image of F lies in V(g): the composite
    vanishes on a dense open subset of irreducible projective space, hence
    everywhere.
    """
    if g.ring != F.target_ring:
        raise ValueError("form must live in the target ring")
    return not g.substitute(F.components)


def graph_ideal(F: RationalMap) -> tuple[Ideal, Ring]:
    """Ideal of the graph {(x, F(x))} in the product ring (x first)."""
    big = Ring(F.source_ring.variables + F.target_ring.variables)
    nx = F.source_ring.nvars
    lift_src = [big.var(v) for v in F.source_ring.variables]
    gens = []
    for i, f in enumerate(F.components):
        y = big.var(F.target_ring.variables[i])
        gens.append(y - f.substitute(lift_src))
    return Ideal(big, gens), big


def image_ideal(F: RationalMap, budget: StepBudget | int | None = None) -> Ideal:
    """Homogeneous ideal of the closure of the image, by elimination.

    The graph ideal is prime (it cuts out a graph over the source), so
    eliminating the source variables gives exactly the image ideal.
    """
    b = _budget(budget)
    G, big = graph_ideal(F)
    elim = eliminate(G, F.source_ring.nvars, b)
    # the eliminated ring carries the target variable names already
    return Ideal(F.target_ring, [Poly(F.target_ring, dict(g.terms)) for g in elim.generators])


def image_forms(
    F: RationalMap, degree: int, budget: StepBudget | int | None = None
) -> list[Poly]:
    """Degree-d forms on the target annihilating the map, by linear algebra.

    Returns an echelon basis of {g of degree d : g(F) == 0}; this is the
    degree-d graded piece of the image ideal.
    """
    from .hilbert import _degree_monomials

    target = F.target_ring
    monos = _degree_monomials(target.nvars, degree)
    comps = F.components
    # composite source polynomials for each target monomial
    src_monos: dict = {}
    columns = []
    for m in monos:
        p = F.source_ring.one()
        for i, k in enumerate(m):
            for _ in range(k):
                p = p * comps[i]
        columns.append(p)
        for e in p.terms:
            src_monos.setdefault(e, len(src_monos))
    rows = [[Fraction(0)] * len(monos) for _ in range(len(src_monos))]
    for j, p in enumerate(columns):
        for e, c in p.terms.items():
            rows[src_monos[e]][j] = c
    kern = kernel_basis(rows)
    return [
        Poly(target, {monos[i]: c for i, c in enumerate(v) if c}) for v in kern
    ]


def jacobian(polys: Sequence[Poly], ring: Ring) -> list[list[Poly]]:
    return [[g.diff(v) for v in ring.variables] for g in polys]


def _minor(mat, rows, cols, ring: Ring) -> Poly:
    if len(rows) == 1:
        return mat[rows[0]][cols[0]]
    total = ring.zero()
    r0, rest = rows[0], rows[1:]
    for k, c in enumerate(cols):
        e = mat[r0][c]
        if not e:
            continue
        sub = _minor(mat, rest, cols[:k] + cols[k + 1 :], ring)
        if not sub:
            continue
        t = e * sub
        total = total + t if k % 2 == 0 else total - t
    return total


def minor_ideal(
    I: Ideal, codim: int, cap: int = 4000
) -> Ideal:
    """I plus all codim x codim minors of the Jacobian of its generators."""
    ring = I.ring
    m = len(I.generators)
    n = ring.nvars
    count = _comb(m, codim) * _comb(n, codim)
    if count > cap:
        raise HeavyComputation(
            f"{count} Jacobian minors exceed the cap of {cap}"
        )
    jac = jacobian(I.generators, ring)
    minors = []
    for rows in itertools.combinations(range(m), codim):
        for cols in itertools.combinations(range(n), codim):
            d = _minor(jac, list(rows), list(cols), ring)
            if d:
                minors.append(d)
    return Ideal(ring, list(I.generators) + minors)


def _comb(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def singular_locus(
    I: Ideal,
    codim: int,
    budget: StepBudget | int | None = None,
    cap: int = 4000,
    seed: int = 0,
) -> Ideal:
    """Saturated Jacobian-minor ideal (the singular scheme of V(I)).

    Raises HeavyComputation when the minor count explodes past the cap.
    """
    b = _budget(budget)
    J = minor_ideal(I, codim, cap)
    return saturate_irrelevant(J, budget=b, seed=seed)


def smooth_certificate(
    I: Ideal,
    dim_proj: int,
    budget: StepBudget | int | None = None,
    minor_cap: int = 4000,
) -> bool:
    """Certify that V(I) is smooth of the stated dimension.

    Works chart by chart: the dehomogenized system is simplified by
    eliminating solved variables (an isomorphism of the chart variety onto
    a small presentation), and the Jacobian minor scheme of the small
    presentation is checked to be empty.  Equivalent to emptiness of the
    codim-many-minor scheme of I itself, since rank conditions transfer
    along the chart isomorphisms.

    Raises HeavyComputation when a chart resists simplification.
    """
    b = _budget(budget)
    ring = I.ring
    for var in range(ring.nvars):
        names = ring.variables[:var] + ring.variables[var + 1 :]
        chart = Ring(names)
        base = [p for p in (dehomogenize(g, var, chart) for g in I.generators) if p]
        if any(g.is_constant() and g for g in base):
            continue
        sg, sring, _ = solve_simplify(base, chart, b)
        if any(g.is_constant() and g for g in sg):
            continue  # chart misses the variety
        if not sg:
            if sring.nvars == dim_proj:
                continue  # chart is isomorphic to affine space: smooth
            return False
        cprime = sring.nvars - dim_proj
        if cprime <= 0:
            return False
        nminors = _comb(len(sg), cprime) * _comb(sring.nvars, cprime)
        if nminors > minor_cap:
            raise HeavyComputation(
                f"chart {ring.variables[var]}: {nminors} minors after simplification"
            )
        jac = jacobian(sg, sring)
        minors = []
        for rows in itertools.combinations(range(len(sg)), cprime):
            for cols in itertools.combinations(range(sring.nvars), cprime):
                d = _minor(jac, list(rows), list(cols), sring)
                if d:
                    minors.append(d)
        if not contains_one(Ideal(sring, list(sg) + minors), b):
            return False
    return True


def composition_identity(F: RationalMap, G: RationalMap) -> bool:
    """Certify G(F(x)) = x as rational maps.

    Substitutes F into G and checks that all 2x2 minors of the matrix with
    rows (x_0, ..., x_n) and (G(F)_0, ..., G(F)_n) vanish identically;
    agreement on a dense open subset of irreducible projective space forces
    the polynomial identities.
    """
    if G.source_ring != F.target_ring or G.target_ring.nvars != F.source_ring.nvars:
        raise ValueError("maps are not composable back to the source")
    comps = [g.substitute(F.components) for g in G.components]
    if all(not c for c in comps):
        raise NotACertificate(
            "composite vanishes identically; the representative of the "
            "inverse is zero on the image"
        )
    ring = F.source_ring
    xs = ring.gens()
    n = ring.nvars
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] * comps[j] - xs[j] * comps[i]:
                return False
    return True


def common_factor_degree(
    polys: Sequence[Poly], seed: int = 0, probes: int = 2
) -> int:
    """Degree of the common polynomial factor of homogeneous forms.

    Combines the exact common monomial factor with a generic-line probe:
    the forms are restricted to seeded random affine lines and their
    univariate gcd degree is taken (minimized over probes, which can only
    overestimate on special lines).
    """
    polys = [p for p in polys if p]
    if not polys:
        return 0
    ring = polys[0].ring
    n = ring.nvars
    mono_min = [min(e[i] for p in polys for e in p.terms) for i in range(n)]
    base = sum(mono_min)
    if all(len(p.terms) == 1 for p in polys):
        return base
    rng = random.Random(seed)
    best = None
    for _ in range(probes):
        a = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        bpt = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        gdeg = None
        gcd_poly: list[Fraction] | None = None
        for p in polys:
            uni = _restrict_to_line(p, a, bpt)
            if uni is None:
                gcd_poly = None
                break
            gcd_poly = uni if gcd_poly is None else _poly_gcd_1var(gcd_poly, uni)
            if len(gcd_poly) == 1:
                break
        if gcd_poly is not None:
            gdeg = len(gcd_poly) - 1
            best = gdeg if best is None else min(best, gdeg)
    if best is None:
        return base
    return max(base, best) if best > 0 else base


def _restrict_to_line(p: Poly, a: list[Fraction], b: list[Fraction]):
    """Coefficients of p(a*u + b) as a univariate polynomial in u."""
    deg = p.degree()
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        # expand prod_i (a_i u + b_i)^{e_i}
        acc = [Fraction(1)]
        for i, k in enumerate(e):
            for _ in range(k):
                nxt = [Fraction(0)] * (len(acc) + 1)
                for d, v in enumerate(acc):
                    nxt[d] += v * b[i]
                    nxt[d + 1] += v * a[i]
                acc = nxt
        for d, v in enumerate(acc):
            coeffs[d] += c * v
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) == 1 and coeffs[0] == 0:
        return None
    return coeffs


def _poly_gcd_1var(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b and any(b):
        a, b = b, _poly_mod_1var(a, b)
    lead = a[-1]
    return [c / lead for c in a]


def _poly_mod_1var(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        shift = len(a) - 1 - db
        f = a[-1] / lb
        for i in range(db + 1):
            a[shift + i] -= f * b[i]
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if len(a) == 1 and a[0] == 0:
            return [Fraction(0)]
    return a


def map_type(F: RationalMap, G: RationalMap, seed: int = 0) -> tuple[int, int]:
    """The type (2, d): d is the common degree of the inverse components
    after removing their common polynomial factor."""
    if not composition_identity(F, G):
        raise ValueError("composition identity does not hold")
    d = G.degree - common_factor_degree(G.components, seed=seed)
    return (F.degree, d)


def solve_inverse(
    F: RationalMap, d: int, unknown_cap: int = 2000
) -> RationalMap | None:
    """Search a degree-d representative G of the inverse: G(F(x)) = x * h(x).

    Sets up the exact linear system in the coefficients of G and of the
    common factor h (degree 2d-1) and returns the first echelon solution,
    or None when only the zero solution exists.
    """
    from .hilbert import _degree_monomials

    src, tgt = F.source_ring, F.target_ring
    n1, N1 = src.nvars, tgt.nvars
    g_monos = _degree_monomials(N1, d)
    h_monos = _degree_monomials(n1, 2 * d - 1)
    nunk = n1 * len(g_monos) + len(h_monos)
    if nunk > unknown_cap:
        raise HeavyComputation(f"{nunk} unknowns in the inverse solve")
    # composite source polynomial for each target monomial
    composites = []
    for m in g_monos:
        p = src.one()
        for i, k in enumerate(m):
            for _ in range(k):
                p = p * F.components[i]
        composites.append(p)
    eq_index: dict = {}
    rows_data = []  # (row, col, value)

    def eq_row(i_comp: int, e) -> int:
        key = (i_comp, e)
        if key not in eq_index:
            eq_index[key] = len(eq_index)
        return eq_index[key]

    for i in range(n1):
        for j, p in enumerate(composites):
            col = i * len(g_monos) + j
            for e, c in p.terms.items():
                rows_data.append((eq_row(i, e), col, c))
        for j, hm in enumerate(h_monos):
            col = n1 * len(g_monos) + j
            e = tuple(
                hm[k] + (1 if k == i else 0) for k in range(n1)
            )
            rows_data.append((eq_row(i, e), col, Fraction(-1)))
    mat = [[Fraction(0)] * nunk for _ in range(len(eq_index))]
    for r, c, v in rows_data:
        mat[r][c] += v
    kern = kernel_basis(mat)
    for v in kern:
        hcoeffs = v[n1 * len(g_monos) :]
        if not any(hcoeffs):
            continue
        comps = []
        for i in range(n1):
            terms = {}
            for j, m in enumerate(g_monos):
                c = v[i * len(g_monos) + j]
                if c:
                    terms[m] = c
            comps.append(Poly(tgt, terms))
        if all(not c for c in comps):
            continue
        # fill zero components as zero polynomials of the right shape
        return RationalMap(tgt, Ring(src.variables), tuple(comps))
    return None


def secant_ideal(
    I: Ideal, budget: StepBudget | int | None = None
) -> Ideal:
    """Ideal of the secant variety of V(I): eliminate two point copies
    from I(x) + I(y) + (z - x - y)."""
    b = _budget(budget)
    ring = I.ring
    n = ring.nvars
    names = (
        [f"u_{v}" for v in ring.variables]
        + [f"w_{v}" for v in ring.variables]
        + list(ring.variables)
    )
    big = Ring(names)
    ucopy = [big.var(f"u_{v}") for v in ring.variables]
    wcopy = [big.var(f"w_{v}") for v in ring.variables]
    gens = [g.substitute(ucopy) for g in I.generators]
    gens += [g.substitute(wcopy) for g in I.generators]
    for i, v in enumerate(ring.variables):
        gens.append(big.var(v) - ucopy[i] - wcopy[i])
    elim = eliminate(Ideal(big, gens), 2 * n, b)
    return Ideal(ring, [Poly(ring, dict(g.terms)) for g in elim.generators])
