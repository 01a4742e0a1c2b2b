"""Case enumeration and classification-table validation.

The enumerators re-derive the case lists for base-locus dimension 1, 2, 3
(and the partial dimension-4 list) from the closed-form relations in
`invariants`, filtered by a rule table.  Rule-table entries are pure
predicates (striking a case) so that removing an entry can only enlarge
the output; conclusions imported from the classification literature enter
as data rows or strike-rules tagged "cited", never as re-derived logic.

`check_table` validates every row of the shipped classification table
against all applicable relations; `coindex_solver` enumerates the
(r, n, delta) solutions compatible with a given inverse degree and coindex.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Sequence

from .invariants import (
    Infeasible,
    QUADRIC_FIBRATION,
    SCROLL_OVER_CURVE,
    SCROLL_OVER_SURFACE,
    castelnuovo_bound,
    coindex_delta,
    double_point,
    eval_poly,
    hilbert_poly_r4,
    hp_relations,
    normal_segre_from_chern,
    pushforward_degrees,
    r2_ddelta_identity,
    r2_delta_quotient,
    r4_chern_lattice,
    r4_relations,
    segre_chern,
    structure_formulas,
    structure_k3,
)

# search bounds for the enumerations; the ambient gap of the image is
# bounded by the quadric count through a linear curve section
A_MAX_R123 = 12  # slack above the sharp bound a <= 10 for threefolds
A_MAX_R4 = 10  # sharp: 7 <= h <= 17 - a forces a <= 10 in dimension four


@dataclass(frozen=True)
class CaseRow:
    """One classification row (numeric invariants plus structure label)."""

    r: int
    n: int
    a: int
    lam: int
    g: int
    structure: str
    d: int
    Delta: int
    c: int
    existence: str = "E"
    eps: int = 0
    chi: int | None = None
    c2h: int | None = None  # Chern degree c2 . H^(r-2) of the base locus
    c3: int | None = None  # Chern degree c3 (threefold base loci)
    provenance: str = ""
    struck_by: str | None = None

    @property
    def delta_defect(self) -> int:
        return 2 * self.r + 2 - self.n

    def key(self):
        return (self.r, self.n, self.a, self.lam, self.g, self.d, self.Delta)


@dataclass(frozen=True)
class RuleEntry:
    """A named strike-predicate with its origin: cited classification
    results enter as data ("cited"), arithmetic consequences as
    "computed"."""

    name: str
    kind: str  # "cited" | "computed"
    description: str
    strikes: Callable[[CaseRow], bool]


class RuleTable:
    def __init__(self, entries: Sequence[RuleEntry]):
        self.entries = {e.name: e for e in entries}

    def without(self, *names: str) -> "RuleTable":
        return RuleTable([e for n, e in self.entries.items() if n not in names])

    def strike(self, row: CaseRow) -> str | None:
        for e in self.entries.values():
            if e.strikes(row):
                return e.name
        return None

    def names(self) -> list[str]:
        return list(self.entries)


def default_rule_table() -> RuleTable:
    return RuleTable(
        [
            RuleEntry(
                "oadp_curve_is_twisted_cubic",
                "cited",
                "a curve with one apparent double point is the twisted cubic; "
                "strikes secant-defect-zero curve cases of inverse degree one "
                "with other invariants",
                lambda row: row.r == 1
                and row.delta_defect == 0
                and row.d == 1
                and (row.lam, row.g) != (3, 0),
            ),
            RuleEntry(
                "nondegenerate_surface_needs_d_ge_2",
                "cited",
                "for surface base loci spanning P^6 the inverse degree is at "
                "least two; inverse degree one would force a linear secant "
                "hypersurface against nondegeneracy",
                lambda row: row.r == 2
                and row.n == 6
                and row.eps == 0
                and row.d < 2,
            ),
            RuleEntry(
                "image_nondegenerate",
                "computed",
                "a nondegenerate image in P^(n+a) has degree at least a+1",
                lambda row: row.Delta < row.a + 1,
            ),
            RuleEntry(
                "inverse_degree_integral",
                "computed",
                "the lifted inverse degree d must satisfy Delta | d*Delta; "
                "rows with no consistent integer d carry d = 0 and are struck",
                lambda row: row.d == 0,
            ),
            RuleEntry(
                "threefold_a5_excluded",
                "cited",
                "the degree-7 threefold candidate (ambient gap five) fails "
                "the secant-hypersurface hypothesis; excluded by the "
                "classification of low-degree threefolds",
                lambda row: row.r == 3 and row.n == 8 and row.eps == 0 and row.a == 5,
            ),
        ]
    )


# ---------------------------------------------------------------------------
# dimension 1

def enumerate_r1(rules: RuleTable | None = None) -> list[CaseRow]:
    """All numerically admissible curve cases; struck rows carry the rule name.

    Grid: n in {3, 4} (the secant defect is nonnegative), eps in {0, 1},
    ambient gap up to the search bound.  Filters: integrality of the
    Hilbert-polynomial and inverse-degree formulas, positivity, Castelnuovo's
    bound in the span of the curve, and (for degenerate base loci) that the
    quadrics through the curve inside its span at least reach its
    codimension there, so that they can cut it out.
    """
    rules = rules or default_rule_table()
    out: list[CaseRow] = []
    for n in (3, 4):
        for eps in (0, 1):
            for a in range(0, A_MAX_R123 + 1):
                try:
                    hp = hp_relations(1, n, a, eps)
                except Infeasible:
                    continue
                lam, g = hp["lam"], hp["g"]
                if lam < 1 or g < 0:
                    continue
                try:
                    _, der = segre_chern(1, n, lam, g)
                except Infeasible:
                    continue
                d, Delta = der["d"], der["Delta"]
                if d < 1 or Delta < 1:
                    continue
                span = n - eps
                if eps == 1 and a < span - 1:
                    # the a quadrics through the curve inside its span
                    # cannot cut out a codimension-(span-1) curve
                    continue
                if span >= 2 and lam >= span:
                    if g > castelnuovo_bound(lam, span):
                        continue
                c = coindex_delta(1, n, d)[0]
                row = CaseRow(
                    r=1,
                    n=n,
                    a=a,
                    lam=lam,
                    g=g,
                    structure=_R1_STRUCTURES.get((n, a), ""),
                    d=d,
                    Delta=Delta,
                    c=c,
                    eps=eps,
                    chi=1 - g,
                    provenance="hilbert-polynomial and inverse-degree displays",
                )
                row = replace(row, struck_by=rules.strike(row))
                out.append(row)
    out.sort(key=lambda r: r.key())
    return out


_R1_STRUCTURES = {
    (3, 1): "conic",
    (4, 0): "elliptic curve of degree five",
    (4, 1): "rational normal quartic curve",
    (4, 2): "elliptic quartic curve (complete intersection of two quadrics)",
    (4, 3): "twisted cubic curve",
}


# ---------------------------------------------------------------------------
# dimension 2

# structure labels for the nondegenerate surface branch (cited
# classification of surfaces of low degree), keyed by (a, lam)
_R2_STRUCTURES = {
    (0, 7): "elliptic surface scroll with invariant -1",
    (0, 8): "plane blown up in eight points, embedded by quartics",
    (1, 7): "plane blown up in six points, quartics double at one",
    (2, 6): "plane blown up in three points (sextic del Pezzo surface)",
    (3, 5): "rational normal surface scroll",
}

# secant-defect-positive surface cases (cited classification of surfaces
# whose generic entry locus is positive-dimensional); inverse degree is
# part of the citation, the image degree follows from the displayed
# d*Delta value
_R2_DELTA_POS = [
    # (n, a, lam, g, structure, d, eps)
    (4, 1, 2, 0, "quadric surface (product of two lines)", 1, 1),
    (5, 0, 4, 0, "Veronese surface", 2, 0),
    (5, 3, 3, 0, "cubic surface scroll", 1, 1),
    (6, 5, 5, 1, "quintic del Pezzo surface", 1, 1),
    (6, 6, 4, 0, "quartic rational normal scroll", 1, 1),
]


def enumerate_r2(rules: RuleTable | None = None) -> list[CaseRow]:
    """Surface base loci: the nondegenerate branch in P^6 is solved from
    the degree/genus relations plus the two displayed (d, Delta) identities;
    the positive-secant-defect rows are cited data."""
    rules = rules or default_rule_table()
    out: list[CaseRow] = []
    n = 6
    for a in range(0, A_MAX_R123 + 1):
        lam_min = (13 - a + 1) // 2  # ceil((13-a)/2)
        lam_max = 8 - a
        for lam in range(max(lam_min, 1), lam_max + 1):
            g = 2 * lam + a - 13
            if g < 0:
                continue
            hp = hp_relations(2, n, a, 0, g=g)
            if hp["lam"] != lam:
                continue
            dd = r2_ddelta_identity(a)
            for d in range(1, dd + 1):
                if dd % d:
                    continue
                Delta = dd // d
                if r2_delta_quotient(g, a, d) != Delta:
                    continue
                c = coindex_delta(2, n, d)[0]
                row = CaseRow(
                    r=2,
                    n=n,
                    a=a,
                    lam=lam,
                    g=g,
                    structure=_R2_STRUCTURES.get((a, lam), ""),
                    d=d,
                    Delta=Delta,
                    c=c,
                    eps=0,
                    chi=lam + a - 7,
                    provenance="degree/genus identities with the two "
                    "displayed (d, Delta) relations",
                )
                row = replace(row, struck_by=rules.strike(row))
                out.append(row)
    for n2, a, lam, g, structure, d, eps in _R2_DELTA_POS:
        _, der = segre_chern(2, n2, lam, g)
        Delta = der["dDelta"] // d
        if d * Delta != der["dDelta"]:
            raise Infeasible("cited inverse degree incompatible with d*Delta")
        chi = hp_relations(2, n2, a, eps, g=g)["chi"]
        c = coindex_delta(2, n2, d)[0]
        row = CaseRow(
            r=2,
            n=n2,
            a=a,
            lam=lam,
            g=g,
            structure=structure,
            d=d,
            Delta=Delta,
            c=c,
            eps=eps,
            chi=chi,
            provenance="cited classification of surfaces with "
            "positive-dimensional entry loci",
        )
        row = replace(row, struck_by=rules.strike(row))
        out.append(row)
    out = [row for row in out if row.struck_by is None]
    out.sort(key=lambda r: r.key())
    return out


# ---------------------------------------------------------------------------
# dimension 3

# the three nondegenerate (lam, g) families in P^8, as (a, lam, g)
def _r3_families() -> list[tuple[int, int, int]]:
    fams = [(0, 13, 8), (1, 12, 7)]
    fams += [(a, 12 - a, 6 - a) for a in range(0, 7)]
    return fams


# structure assignments for the nondegenerate branch (cited classification
# of threefolds of small degree), keyed by (a, lam, g); each entry:
# (label, how, data, existence) where how determines the (d, Delta) source
_R3_STRUCTURES: dict[tuple[int, int, int], list[tuple]] = {
    (0, 12, 6): [
        ("scroll over a ruled surface", "scroll_surface", {"c2_base": 7}, "?")
    ],
    (0, 13, 8): [
        (
            "internal projection of a genus-8 prime threefold",
            "cited_d",
            {"d": 5},
            "E",
        )
    ],
    (1, 11, 5): [
        ("blow-up of a quadric threefold at five points", "cited_d", {"d": 3}, "E"),
        (
            "scroll over the blown-up plane (one point)",
            "scroll_surface",
            {"c2_base": 4},
            "E**",
        ),
    ],
    (1, 12, 7): [
        (
            "linear threefold section of the spinor tenfold",
            "cited_d",
            {"d": 4},
            "E",
        )
    ],
    (2, 10, 4): [
        ("scroll over a quadric surface", "scroll_surface", {"c2_base": 4}, "E*")
    ],
    (3, 9, 3): [
        ("scroll over the plane", "scroll_surface", {"c2_base": 3}, "E*"),
        ("quadric fibration over a line", "quadric_fibration", {}, "E*"),
    ],
    (4, 8, 2): [
        (
            "hyperplane section of a line times a quadric threefold",
            "quadric_fibration",
            {},
            "E*",
        )
    ],
    (5, 7, 1): [
        (
            "del Pezzo threefold of degree seven (blown-up projective space)",
            "pushforward",
            {},
            "",
        )
    ],
    (6, 6, 0): [("rational normal threefold scroll", "scroll_curve", {}, "E")],
}

# secant-defect-positive and degenerate threefold cases (cited data):
# (n, a, lam, g, structure, d, eps, chi_expected, c2h, c3, existence)
_R3_CITED = [
    (5, 1, 2, 0, "quadric threefold", 1, 1, 1, 8, 4, "E"),
    (6, 3, 3, 0, "Segre product of a line and a plane", 1, 1, 1, 9, 6, "E"),
    (7, 1, 6, 1, "hyperplane section of the Segre product of two planes", 2, 0, 1, 12, 6, "E"),
    (7, 5, 5, 1, "quintic del Pezzo threefold (linear section of the line Grassmannian of P^4)", 1, 1, 1, 12, 4, "E"),
    (7, 6, 4, 0, "rational normal threefold scroll of degree four", 1, 1, 1, 10, 6, "E"),
    (8, 7, 8, 3, "plane bundle of degree eight (extension scroll)", 1, 1, 1, 15, 6, "E*"),
    (8, 8, 7, 2, "septic scroll with two rulings", 1, 1, 1, 14, 4, "E*"),
    (8, 9, 6, 1, "product of three lines", 1, 1, 1, 12, 8, "E*"),
    (8, 10, 5, 0, "rational normal threefold scroll of degree five", 1, 1, 1, 11, 6, "E"),
]

# Chern degrees (c2.H, c3) of the nondegenerate-branch structures, verified
# against the printed Segre triples and the closed-form displays
_R3_CHERN = {
    (0, 12, 6, "scroll over a ruled surface"): (17, 14),
    (0, 13, 8, "internal projection of a genus-8 prime threefold"): (24, -4),
    (1, 11, 5, "blow-up of a quadric threefold at five points"): (16, 14),
    (1, 11, 5, "scroll over the blown-up plane (one point)"): (17, 8),
    (1, 12, 7, "linear threefold section of the spinor tenfold"): (24, -10),
    (2, 10, 4, "scroll over a quadric surface"): (16, 8),
    (3, 9, 3, "scroll over the plane"): (15, 6),
    (3, 9, 3, "quadric fibration over a line"): (16, 2),
    (4, 8, 2, "hyperplane section of a line times a quadric threefold"): (14, 6),
    (5, 7, 1, "del Pezzo threefold of degree seven (blown-up projective space)"): (12, 6),
    (6, 6, 0, "rational normal threefold scroll"): (12, 6),
}


def enumerate_r3(rules: RuleTable | None = None) -> list[CaseRow]:
    """Threefold base loci: the nondegenerate P^8 branch runs over the
    three (lam, g) families with (d, Delta) solved per structure; the
    remaining rows are cited data with the image degree recomputed from
    the pushforward formula."""
    rules = rules or default_rule_table()
    out: list[CaseRow] = []
    for a, lam, g in _r3_families():
        chi = hp_relations(3, 8, a, 0, lam=lam, g=g)["chi"]
        for label, how, data, exist in _R3_STRUCTURES.get((a, lam, g), []):
            if how == "quadric_fibration":
                sols = structure_formulas(QUADRIC_FIBRATION, lam, g, a)
                if len(sols) != 1:
                    raise Infeasible(f"quadric fibration not unique at a={a}")
                d, Delta = sols[0]["d"], sols[0]["Delta"]
            elif how == "scroll_curve":
                sols = structure_formulas(SCROLL_OVER_CURVE, lam, g, a)
                if len(sols) != 1:
                    raise Infeasible(f"curve scroll not unique at a={a}")
                d, Delta = sols[0]["d"], sols[0]["Delta"]
            elif how == "scroll_surface":
                sols = [
                    s
                    for s in structure_formulas(SCROLL_OVER_SURFACE, lam, g, a)
                    if s["c2_base"] == data["c2_base"]
                ]
                if len(sols) != 1:
                    raise Infeasible(f"surface scroll not unique at a={a}")
                d, Delta = sols[0]["d"], sols[0]["Delta"]
            elif how == "cited_d":
                d = data["d"]
                # for image codimension <= 1 the image is a hypersurface (or
                # the whole space), whose coindex pins Delta = 6 - d
                if a > 1:
                    raise Infeasible("cited inverse degree needs a <= 1 here")
                Delta = 6 - d
            elif how == "pushforward":
                c2h0, c30 = _R3_CHERN[(a, lam, g, label)]
                c1 = 2 * lam - 2 * g + 2
                s = normal_segre_from_chern(3, 8, lam, (c1, c2h0, c30))
                deg_delta, d_delta = pushforward_degrees(3, 8, lam, s)
                Delta = deg_delta
                d = d_delta // Delta if Delta > 0 and d_delta % Delta == 0 else 0
            else:
                raise ValueError(how)
            c2h, c3 = _R3_CHERN[(a, lam, g, label)]
            c = coindex_delta(3, 8, d)[0]
            row = CaseRow(
                r=3,
                n=8,
                a=a,
                lam=lam,
                g=g,
                structure=label,
                d=d,
                Delta=Delta,
                c=c,
                existence=exist,
                eps=0,
                chi=chi,
                c2h=c2h,
                c3=c3,
                provenance="family list with structure-specific "
                "(d, Delta) resolution",
            )
            row = replace(row, struck_by=rules.strike(row))
            if row.struck_by is None:
                out.append(row)
    for n2, a, lam, g, label, d, eps, chi_exp, c2h, c3, exist in _R3_CITED:
        chi = hp_relations(3, n2, a, eps, lam=lam, g=g)["chi"]
        if chi != chi_exp:
            raise Infeasible(f"chi mismatch for cited threefold row a={a}")
        c1 = 2 * lam - 2 * g + 2
        s = normal_segre_from_chern(3, n2, lam, (c1, c2h, c3))
        deg_delta, d_delta = pushforward_degrees(3, n2, lam, s)
        if deg_delta <= 0 or d_delta % deg_delta:
            raise Infeasible("pushforward incompatible with a birational map")
        Delta = deg_delta
        if d_delta // Delta != d:
            raise Infeasible(f"cited inverse degree contradicts pushforward a={a}")
        c = coindex_delta(3, n2, d)[0]
        row = CaseRow(
            r=3,
            n=n2,
            a=a,
            lam=lam,
            g=g,
            structure=label,
            d=d,
            Delta=Delta,
            c=c,
            existence=exist,
            eps=eps,
            chi=chi,
            c2h=c2h,
            c3=c3,
            provenance="cited classification; image degree from the "
            "pushforward formula",
        )
        row = replace(row, struck_by=rules.strike(row))
        if row.struck_by is None:
            out.append(row)
    out.sort(key=lambda r: r.key())
    return out


# ---------------------------------------------------------------------------
# dimension 4 (partial)

@dataclass(frozen=True)
class R4Family:
    """An open dimension-4 family: a fixed ambient gap with a degree range,
    a genus cap, and the forced Euler-characteristic relation chi =
    (2 lam - g - (21 - a)) / 3."""

    a: int
    lam_min: int
    lam_max: int | None  # None: unbounded above at the search scale
    g_max: int | None


_R4_STRUCTURES = {
    (10, 7, 0): ["rational normal fourfold scroll"],
    (7, 10, 3): [
        "hyperplane section of a line times a quadric fourfold",
        "plane bundle (tangent sheaf extension)",
    ],
    (6, 11, 4): ["quadric fibration over a line"],
    (5, 12, 5): [
        "four-space blown up at four points, quadric system",
        "scroll over a ruled surface",
        "quadric fibration over a line",
    ],
    (4, 14, 8): [
        "linear fourfold section of the line Grassmannian of P^5",
        "product of a line with an even-index prime threefold",
    ],
    (4, 13, 6): [
        "scroll over a birationally ruled surface",
        "quadric fibration over a line",
    ],
    (3, 14, 7): [],
}


def _r4_three_vanishings(a: int) -> tuple[Fraction, Fraction, Fraction]:
    """Solve hp(-1) = hp(-2) = hp(-3) = 0 for (lam, g, chi) at a given gap."""
    # hp(-1) = 3 chi + g - 2 lam - a + 21
    # hp(-2) = 6 chi + 4 g - 7 lam - 3 a + 73
    # hp(-3) = 10 chi + 10 g - 15 lam - 6 a + 155
    from fractions import Fraction as F

    # eliminating chi and g leaves 10 lam + 4 a - 110 = 0
    lam = F(55 - 2 * a, 5)
    g = (3 * lam + a - 31) / 2
    chi = (2 * lam - g + a - 21) / 3
    return lam, g, chi


def enumerate_r4(
    rules: RuleTable | None = None,
) -> tuple[list[CaseRow], list[R4Family]]:
    """Partial fourfold enumeration: the determined (a, lam, g, chi) rows
    plus the open families with their degree windows and chi relations."""
    rules = rules or default_rule_table()
    rows: list[CaseRow] = []
    families: list[R4Family] = []

    def add(a, lam, g, chi, note=""):
        hp = hilbert_poly_r4(lam, g, chi, a)
        assert eval_poly(hp, 1) == 11 and eval_poly(hp, 2) == 55 - a
        for label in (_R4_STRUCTURES.get((a, lam, g)) or [""]):
            rows.append(
                CaseRow(
                    r=4,
                    n=10,
                    a=a,
                    lam=lam,
                    g=g,
                    structure=label,
                    d=0,
                    Delta=0,
                    c=0,
                    existence="",
                    eps=0,
                    chi=chi,
                    provenance=note,
                )
            )

    # gaps 9..10: all three twisted Euler characteristics vanish
    for a in (10, 9):
        lam_f, g_f, chi_f = _r4_three_vanishings(a)
        if any(v.denominator != 1 for v in (lam_f, g_f, chi_f)):
            continue
        lam, g, chi = int(lam_f), int(g_f), int(chi_f)
        if lam < 7 or lam > 17 - a or g < 0:
            continue
        # degree-8 del Pezzo branch excluded by the cited classification
        add(a, lam, g, chi, "three vanishing twists")
    # gaps 5..8: two vanishing twists force lam = 17 - a, g = 10 - a, chi 1
    for a in (8, 7, 6, 5):
        for lam in range(7, min(12, 17 - a) + 1):
            if (3 * lam + a - 31) % 2 or (lam + a - 11) % 6:
                continue
            g = (3 * lam + a - 31) // 2
            chi = (lam + a - 11) // 6
            if g < 0 or chi != 1:
                continue
            if a == 8:
                continue  # cited: no such ninefold-gap variety exists
            add(a, lam, g, chi, "two vanishing twists")
    # gap 4: the determined branch plus the cited Mukai row at degree 14
    for lam in range(7, 15):
        if (3 * lam - 27) % 2 or (lam - 7) % 6:
            continue
        g = (3 * lam - 27) // 2
        chi = (lam - 7) // 6
        if g >= 0 and chi == 1:
            add(4, lam, g, chi, "two vanishing twists")
    add(4, 14, 8, 1, "cited: anticanonically twice-embedded (Mukai) fourfold")
    # gap 3: determined row at degree 14, open family above
    add(3, 14, 7, 1, "two vanishing twists")
    families.append(R4Family(a=3, lam_min=14, lam_max=16, g_max=11))
    families.append(R4Family(a=2, lam_min=15, lam_max=18, g_max=14))
    # gap 1: the two-vanishing branch gives (10, 0, 0), impossible (cited)
    families.append(R4Family(a=1, lam_min=15, lam_max=20, g_max=17))
    # gap 0: degree 11 elliptic scroll dies on the 37-divisibility test
    first, _ = r4_relations(11, 1, 6, 1)
    try:
        r4_chern_lattice(first, 0, 0)
        raise AssertionError("elliptic scroll rejection failed")
    except Infeasible:
        pass
    families.append(R4Family(a=0, lam_min=15, lam_max=None, g_max=None))
    rows.sort(key=lambda r: (r.a, r.lam, r.g, r.structure))
    return rows, families


# ---------------------------------------------------------------------------
# coindex solver

def coindex_solver(d: int, c: int, r_max: int = 30) -> list[tuple[int, int, int]]:
    """Integer solutions (r, n, delta) of delta = (r - d - c + 2)/d with
    n = 2r + 2 - delta and delta >= 0."""
    if d < 1 or r_max > 30:
        raise ValueError("need d >= 1 and r_max <= 30")
    out = []
    for r in range(1, r_max + 1):
        num = r - d - c + 2
        if num < 0 or num % d:
            continue
        delta = num // d
        n = 2 * r + 2 - delta
        out.append((r, n, delta))
    return out


# ---------------------------------------------------------------------------
# table validation

TABLE_PATH = os.path.join(os.path.dirname(__file__), "data", "table1.txt")


def load_table(path: str | None = None) -> list[CaseRow]:
    rows = []
    with open(path or TABLE_PATH, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split("|")]
            (r, n, a, lam, g, d, Delta, c, exist, eps, chi, c2h, c3) = parts[:13]
            structure = parts[13]
            note = parts[14] if len(parts) > 14 else ""
            rows.append(
                CaseRow(
                    r=int(r),
                    n=int(n),
                    a=int(a),
                    lam=int(lam),
                    g=int(g),
                    structure=structure,
                    d=int(d),
                    Delta=int(Delta),
                    c=int(c),
                    existence=exist,
                    eps=int(eps),
                    chi=int(chi),
                    c2h=None if c2h == "-" else int(c2h),
                    c3=None if c3 == "-" else int(c3),
                    provenance=note,
                )
            )
    return rows


@dataclass
class RelationReport:
    relation: str
    ok: bool
    detail: str = ""


def check_row(row: CaseRow) -> list[RelationReport]:
    """Evaluate every applicable closed-form relation on one table row."""
    reps: list[RelationReport] = []

    def rep(name, ok, detail=""):
        reps.append(RelationReport(name, bool(ok), detail))

    delta = row.delta_defect
    rep("secant_defect_nonnegative", delta >= 0, f"delta={delta}")
    c_expected = coindex_delta(row.r, row.n, row.d)[0]
    rep("coindex", row.c == c_expected, f"expected {c_expected}")
    rep("image_nondegenerate", row.Delta >= row.a + 1)

    if row.r == 1:
        hp = hp_relations(1, row.n, row.a, row.eps)
        rep("hilbert_lambda_genus", (hp["lam"], hp["g"]) == (row.lam, row.g))
        try:
            _, der = segre_chern(1, row.n, row.lam, row.g)
            rep(
                "inverse_degree_and_image_degree",
                (der["d"], der["Delta"]) == (row.d, row.Delta),
            )
        except Infeasible as e:
            rep("inverse_degree_and_image_degree", False, str(e))
        if delta == 0:
            rep("double_point", double_point(1, row.lam, row.g, row.d) == 0)
        span = row.n - row.eps
        if span >= 2 and row.lam >= span:
            rep("castelnuovo", row.g <= castelnuovo_bound(row.lam, span))

    elif row.r == 2:
        hp = hp_relations(2, row.n, row.a, row.eps, g=row.g)
        rep("hilbert_lambda", hp["lam"] == row.lam)
        if row.chi is not None:
            rep("hilbert_chi", hp["chi"] == row.chi)
        _, der = segre_chern(2, row.n, row.lam, row.g)
        rep("segre_d_delta", der["dDelta"] == row.d * row.Delta)
        if row.n == 6 and row.eps == 0:
            rep("d_delta_identity", r2_ddelta_identity(row.a) == row.d * row.Delta)
            rep(
                "delta_quotient",
                r2_delta_quotient(row.g, row.a, row.d) == row.Delta,
            )
            rep(
                "double_point",
                double_point(2, row.lam, row.g, row.d, row.Delta, row.a) == 0,
            )

    elif row.r == 3:
        hp = hp_relations(3, row.n, row.a, row.eps, lam=row.lam, g=row.g)
        if row.chi is not None:
            rep("hilbert_chi", hp["chi"] == row.chi)
        if row.n == 8 and row.eps == 0:
            fams = set(_r3_families())
            rep("family_membership", (row.a, row.lam, row.g) in fams)
        if row.c2h is not None and row.c3 is not None:
            try:
                prof, _ = segre_chern(3, row.n, row.lam, row.g, row.d, row.Delta)
                rep(
                    "chern_displays",
                    (prof.c[1], prof.c[2]) == (row.c2h, row.c3),
                    f"display {(prof.c[1], prof.c[2])}",
                )
            except Infeasible as e:
                rep("chern_displays", False, str(e))
            c1 = 2 * row.lam - 2 * row.g + 2
            s = normal_segre_from_chern(3, row.n, row.lam, (c1, row.c2h, row.c3))
            deg_delta, d_delta = pushforward_degrees(3, row.n, row.lam, s)
            rep(
                "pushforward_degrees",
                deg_delta == row.Delta and d_delta == row.d * row.Delta,
                f"pushforward {(deg_delta, d_delta)}",
            )
        kind = _structure_kind(row.structure)
        if kind is not None and row.eps == 0:
            sols = structure_formulas(kind, row.lam, row.g, row.a, d=row.d)
            ok = any(
                s["d"] == row.d and s["Delta"] == row.Delta for s in sols
            )
            rep("structure_system", ok, f"solutions {sols}")
            if delta == 0:
                if kind == SCROLL_OVER_SURFACE:
                    k3 = structure_k3(
                        kind, row.lam, row.g, row.a, row.d * row.Delta
                    )
                else:
                    k3 = structure_k3(kind, row.lam, row.g)
                rep(
                    "double_point",
                    double_point(
                        3, row.lam, row.g, row.d, row.Delta, row.a, k3=k3
                    )
                    == 0,
                )
    return reps


def _structure_kind(label: str) -> str | None:
    text = label.lower()
    if "quadric fibration" in text or (
        "hyperplane section" in text and "quadric threefold" in text
    ):
        return QUADRIC_FIBRATION
    if "rational normal threefold scroll" in text and "degree" not in text:
        return SCROLL_OVER_CURVE
    if "scroll over" in text:
        return SCROLL_OVER_SURFACE
    return None


def check_table(
    rows: Sequence[CaseRow] | None = None,
) -> list[tuple[CaseRow, list[RelationReport]]]:
    """Per-row relation reports for the shipped classification table."""
    if rows is None:
        rows = load_table()
    return [(row, check_row(row)) for row in rows]


def table_all_pass(
    reports: Sequence[tuple[CaseRow, Sequence[RelationReport]]],
) -> bool:
    return all(all(r.ok for r in reps) for _, reps in reports)
