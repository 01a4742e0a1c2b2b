import random

import pytest

from quadbir.invariants import (
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
    k2_thresholds,
    liftability_certificate,
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


# --- Hilbert-polynomial relations -----------------------------------------

def test_hp_curve_cases():
    assert hp_relations(1, 4, 0, 0) == {"lam": 5, "g": 1}
    assert hp_relations(1, 3, 1, 1) == {"lam": 2, "g": 0}
    assert hp_relations(1, 4, 3, 1) == {"lam": 3, "g": 0}


def test_hp_surface_case():
    out = hp_relations(2, 6, 2, 0, g=1)
    assert out == {"chi": 1, "lam": 6}


def test_hp_threefold_case():
    assert hp_relations(3, 8, 1, 0, lam=11, g=5) == {"chi": 1}


def test_hp_fourfold_polynomial_values():
    rng = random.Random(3)
    for _ in range(25):
        lam, g, chi, a = (
            rng.randint(1, 30),
            rng.randint(0, 20),
            rng.randint(-3, 3),
            rng.randint(0, 10),
        )
        hp = hilbert_poly_r4(lam, g, chi, a)
        assert eval_poly(hp, 1) == 11
        assert eval_poly(hp, 2) == 55 - a
        assert eval_poly(hp, 0) == chi


def test_hp_infeasible_is_flagged():
    with pytest.raises(Infeasible):
        hp_relations(2, 6, 0, 0, g=0)  # quarter-integer chi


# --- Segre/Chern displays ---------------------------------------------------

def test_segre_chern_curve_case():
    prof, der = segre_chern(1, 4, 5, 1)
    assert prof.c == (0,) and prof.s == (-25,)
    assert der == {"d": 3, "Delta": 1}


def test_segre_chern_surface_product():
    _, der = segre_chern(2, 6, 6, 1)
    assert der["dDelta"] == 8
    assert r2_ddelta_identity(2) == 8


def test_segre_chern_threefold_triples():
    cases = {
        (11, 5, 4, 2): (-85, 386, -1330),
        (10, 4, 3, 4): (-76, 340, -1156),
        (9, 3, 2, 8): (-67, 294, -984),
        (9, 3, 3, 5): (-67, 295, -997),
    }
    for (lam, g, d, Delta), expected in cases.items():
        prof, _ = segre_chern(3, 8, lam, g, d, Delta)
        assert prof.s == expected


def test_normal_segre_from_chern_matches_display():
    # Chern route and closed-form route agree on the quadric-surface scroll
    prof, _ = segre_chern(3, 8, 10, 4, 3, 4)
    s = normal_segre_from_chern(3, 8, 10, prof.c)
    assert s == prof.s


# --- pushforward coefficient gate -------------------------------------------

def test_pushforward_coefficient_gate():
    # the (r=3, n=8) specialization must weigh lam, s1, s2, s3 by
    # -448, -112, -16, -1 with constant +256 on the full power, and by
    # -84, -14, -1 with constant +128 on the mixed power
    base = pushforward_degrees(3, 8, 0, [0, 0, 0])
    assert base == (256, 128)
    lam_w = pushforward_degrees(3, 8, 1, [0, 0, 0])
    assert (lam_w[0] - 256, lam_w[1] - 128) == (-448, -84)
    s1_w = pushforward_degrees(3, 8, 0, [1, 0, 0])
    assert (s1_w[0] - 256, s1_w[1] - 128) == (-112, -14)
    s2_w = pushforward_degrees(3, 8, 0, [0, 1, 0])
    assert (s2_w[0] - 256, s2_w[1] - 128) == (-16, -1)
    s3_w = pushforward_degrees(3, 8, 0, [0, 0, 1])
    assert (s3_w[0] - 256, s3_w[1] - 128) == (-1, 0)


def test_pushforward_reproduces_recorded_degrees():
    assert pushforward_degrees(3, 8, 8, [-60, 267, -909])[0] == 29
    assert pushforward_degrees(3, 8, 10, [-76, 340, -1156])[0] == 4
    deg, d_delta = pushforward_degrees(3, 8, 7, [-49, 201, -627])
    assert (deg, d_delta) == (19, 25)
    assert not liftability_certificate(deg, d_delta)


# --- double point formula ----------------------------------------------------

def test_double_point_residuals():
    assert double_point(1, 5, 1, 3) == 0
    assert double_point(1, 3, 0, 1) == 0
    assert double_point(2, 7, 2, 3, 2, 1) == 0
    k3 = structure_k3(QUADRIC_FIBRATION, 8, 2)
    assert k3 == -8 * 8 + 24 * 2 - 24
    assert double_point(3, 8, 2, 2, 10, 4, k3=k3) == 0
    k3_scroll = structure_k3(SCROLL_OVER_CURVE, 6, 0)
    assert double_point(3, 6, 0, 2, 14, 6, k3=k3_scroll) == 0


def test_r2_delta_quotient_rows():
    # the four nondegenerate surface solutions
    rows = [(0, 7, 1, 4, 1), (1, 7, 2, 3, 2), (2, 6, 1, 2, 4), (3, 5, 0, 2, 5)]
    for a, lam, g, d, Delta in rows:
        assert r2_ddelta_identity(a) == d * Delta
        assert r2_delta_quotient(g, a, d) == Delta


# --- structure systems --------------------------------------------------------

def test_quadric_fibration_solutions():
    assert structure_formulas(QUADRIC_FIBRATION, 9, 3, 3) == [{"d": 3, "Delta": 5}]
    assert structure_formulas(QUADRIC_FIBRATION, 8, 2, 4) == [{"d": 2, "Delta": 10}]
    # no integer solution away from the two listed gaps
    assert structure_formulas(QUADRIC_FIBRATION, 10, 4, 2) == []


def test_scroll_over_curve_unique_solution():
    assert structure_formulas(SCROLL_OVER_CURVE, 6, 0, 6) == [{"d": 2, "Delta": 14}]
    for a, lam, g in [(0, 12, 6), (1, 11, 5), (4, 8, 2), (5, 7, 1)]:
        assert structure_formulas(SCROLL_OVER_CURVE, lam, g, a) == []


def test_scroll_over_surface_quotients():
    out = structure_formulas(SCROLL_OVER_SURFACE, 12, 6, 0, d=5)
    assert out == [{"d": 5, "Delta": 1, "c2_base": 7}]
    scan = structure_formulas(SCROLL_OVER_SURFACE, 10, 4, 2)
    assert {"d": 3, "Delta": 4, "c2_base": 4} in scan


# --- coindex, thresholds, genus bound -----------------------------------------

def test_coindex_delta_values():
    assert coindex_delta(3, 8, 3) == (2, 0, 6, 5)
    assert coindex_delta(1, 3, 1) == (1, 1, 0, 1)
    assert coindex_delta(2, 6, 4) == (0, 0, 4, 7)


def test_k2_thresholds():
    flags = k2_thresholds(10, 5)
    assert (flags["acm"], flags["quadric_generated"], flags["linear_syzygies"]) == (
        True,
        True,
        False,
    )
    flags = k2_thresholds(11, 5)
    assert (flags["acm"], flags["quadric_generated"], flags["linear_syzygies"]) == (
        True,
        False,
        False,
    )
    assert all(k2_thresholds(1, 5).values())


def test_castelnuovo_bound_values():
    assert castelnuovo_bound(12, 6) == 7
    assert castelnuovo_bound(11, 6) == 5
    assert castelnuovo_bound(7, 7) == 0
    with pytest.raises(ValueError):
        castelnuovo_bound(3, 8)


# --- dimension four ------------------------------------------------------------

def test_r4_relations_constants():
    assert r4_relations(0, 0, 1, 0) == (3396, -5716)


def test_r4_elliptic_scroll_rejection():
    first, second = r4_relations(11, 1, 6, 1)
    assert first == 990
    with pytest.raises(Infeasible):
        r4_chern_lattice(first, second, 0)


def test_r4_scroll_lattice():
    first, second = r4_relations(7, 0, 2, 14)
    assert (first, second) == (1541, -501)
    # the feasible residue class of c4 modulo 37
    feasible = [c4 for c4 in range(37) if (first + c4) % 37 == 0]
    assert feasible == [13]
    c2h2, c3h = r4_chern_lattice(first, second, 13)
    assert 37 * c2h2 - 13 == first
    assert 37 * c3h + 7 * 13 == second


def test_invariant_record_relations():
    from quadbir.invariants import InvariantRecord

    rec = InvariantRecord(r=3, n=8, d=3, c=2, eps=0)
    assert rec.delta == 0 and rec.r_prime == 6
    assert rec.check_relations() == []
    bad = InvariantRecord(r=3, n=8, d=3, c=1)
    assert "coindex" in bad.check_relations()
    degenerate = InvariantRecord(r=3, n=10)
    assert "secant_defect_nonnegative" in degenerate.check_relations()
