import os

import pytest

from quadbir.groebner import Ideal, ideal_equal, membership
from quadbir.hilbert import graded_piece_dim, hilbert_data
from quadbir.ideal_io import read_ideal
from quadbir.maps import (
    NotACertificate,
    RationalMap,
    ambient_gap,
    composition_identity,
    forward_annihilation,
    image_forms,
    image_ideal,
    map_from_ideal,
    map_type,
    secant_ideal,
    singular_locus,
    smooth_certificate,
    solve_inverse,
)
from quadbir.polyring import Ring
from quadbir.varieties import elliptic_quintic_pfaffian, in_hyperplane, rational_normal_curve

DATA = os.path.join(
    os.path.dirname(__file__), "..", "src", "quadbir", "data", "ideals"
)


def _load(name):
    return read_ideal(os.path.join(DATA, name))


@pytest.fixture
def quadric_in_hyperplane():
    ring = Ring(["x0", "x1", "x2", "x3", "x4"])
    return Ideal(ring, [ring.parse("x0*x2 - x1^2"), ring.parse("x4")])


@pytest.fixture
def quartic_map():
    X = _load("quartic_curve_base.ideal")
    comp = _load("quartic_curve_map.ideal")
    S = _load("quartic_curve_image.ideal")
    return RationalMap(X.ring, S.ring, comp.generators), S


def test_map_from_ideal_counts(quadric_in_hyperplane):
    F = map_from_ideal(quadric_in_hyperplane)
    assert len(F.components) == 6
    assert ambient_gap(F) == 1
    tc = in_hyperplane(rational_normal_curve(3))
    F2 = map_from_ideal(tc)
    assert len(F2.components) == 8
    assert ambient_gap(F2) == 3
    X18 = _load("line_times_quadric_base.ideal")
    F3 = map_from_ideal(X18)
    assert len(F3.components) == 13
    assert ambient_gap(F3) == 4


def test_ambient_gap_matches_graded_piece(quadric_in_hyperplane):
    for I in (quadric_in_hyperplane, in_hyperplane(rational_normal_curve(3))):
        F = map_from_ideal(I)
        n = I.ring.nvars - 1
        assert ambient_gap(F) == graded_piece_dim(I, 2) - (n + 1)


def test_forward_annihilation(quartic_map):
    F, S = quartic_map
    assert forward_annihilation(F, S.ring.zero())
    for g in S.generators:
        assert forward_annihilation(F, g)


def test_forward_annihilation_implied_by_image_membership(quartic_map):
    F, _ = quartic_map
    img = image_ideal(F)
    for g in img.generators:
        assert forward_annihilation(F, g)
    # and a form NOT annihilating the map lies outside the image ideal
    probe = F.target_ring.parse("y0^2")
    assert not forward_annihilation(F, probe)
    assert not membership(probe, img)


def test_image_of_conic_parametrization():
    P1 = Ring(["s", "t"])
    s, t = P1.gens()
    F = RationalMap(P1, Ring(["y0", "y1", "y2"]), (s * s, s * t, t * t))
    img = image_ideal(F)
    assert [str(g) for g in img.generators] == ["y1^2 - y0*y2"]


def test_image_of_quadric_slice_map(quadric_in_hyperplane):
    ring = Ring(["x0", "x1", "x2", "x3"])
    I = Ideal(ring, [ring.parse("x0*x2 - x1^2"), ring.parse("x3")])
    F = map_from_ideal(I)
    img = image_ideal(F)
    hd = hilbert_data(img, assume_saturated=True)
    assert (hd.dim_proj, hd.degree) == (3, 2)


def test_image_equals_recorded(quartic_map):
    F, S = quartic_map
    img = image_ideal(F)
    assert ideal_equal(img, S)
    assert hilbert_data(img, assume_saturated=True).dim_proj == 4


def test_singular_locus_of_smooth_quadric():
    ring = Ring(["y0", "y1", "y2", "y3"])
    q = ring.parse("y0*y3 - y1*y2")
    sing = singular_locus(Ideal(ring, [q]), 1)
    from quadbir.groebner import contains_one

    assert contains_one(sing)


def test_smooth_certificates():
    assert smooth_certificate(elliptic_quintic_pfaffian(), 1)
    X18 = _load("line_times_quadric_base.ideal")
    assert smooth_certificate(X18, 3)
    # a nodal cubic is refused
    ring = Ring(["x", "y", "z"])
    nodal = Ideal(ring, [ring.parse("x^3 + y^3 - x*y*z")])
    assert smooth_certificate(nodal, 1) is False


def test_composition_identity_and_type(quartic_map):
    F, S = quartic_map
    G = solve_inverse(F, 1)
    assert G is not None
    assert composition_identity(F, G)
    assert map_type(F, G) == (2, 1)
    # inverse base locus is the recorded line
    assert sorted(str(c) for c in G.components) == ["y2", "y3", "y4", "y5", "y6"]


def test_composition_identity_on_recorded_inverse():
    X = _load("line_times_quadric_base.ideal")
    S = _load("line_times_quadric_image.ideal")
    inv = _load("line_times_quadric_inverse.ideal")
    F = RationalMap(X.ring, S.ring, X.generators)
    G = RationalMap(S.ring, X.ring, inv.generators)
    assert composition_identity(F, G)
    assert map_type(F, G) == (2, 2)


def test_composition_rejects_zero_composite(quartic_map):
    F, S = quartic_map
    zero_like = [S.ring.zero()] * 4 + [S.ring.zero()]
    with pytest.raises(ValueError):
        RationalMap(S.ring, F.source_ring, tuple(zero_like))
    # a components vector that collapses to zero after substitution
    g = S.generators[0]
    ys = S.ring.gens()
    collapse = RationalMap(
        S.ring, F.source_ring, tuple(g * ys[i] for i in range(5))
    )
    with pytest.raises(NotACertificate):
        composition_identity(F, collapse)


def test_veronese_toy_type():
    P1 = Ring(["s", "t"])
    s, t = P1.gens()
    F = RationalMap(P1, Ring(["y0", "y1", "y2"]), (s * s, s * t, t * t))
    G = solve_inverse(F, 1)
    assert G is not None and map_type(F, G) == (2, 1)


def test_image_forms_matches_elimination(quartic_map):
    F, S = quartic_map
    quads = image_forms(F, 2)
    assert len(quads) == 2
    assert ideal_equal(Ideal(S.ring, quads), S)


def test_secant_of_twisted_cubic_in_p4():
    I = in_hyperplane(rational_normal_curve(3))
    sec = secant_ideal(I)
    assert [str(g) for g in sec.generators] == ["x4"]
    # degree law: a linear secant hypersurface matches inverse degree one
    assert sec.generators[0].degree() == 2 * 1 - 1


def test_secant_of_two_skew_lines_fills_space():
    ring = Ring(["x0", "x1", "x2", "x3"])
    x = ring.gens()
    lines = Ideal(ring, [x[0] * x[2], x[0] * x[3], x[1] * x[2], x[1] * x[3]])
    sec = secant_ideal(lines)
    assert sec.is_zero()


def test_map_report_fields():
    from quadbir.maps import (
        ASSUMPTION3_VIOLATED,
        NOT_LIFTABLE_CERTIFICATE,
        SKIPPED_HEAVY,
        MapReport,
    )

    rep = MapReport(a=2, inverse_degree=1, composition_identity=True)
    rep.flags.add(ASSUMPTION3_VIOLATED)
    assert rep.a == 2 and rep.image_degree is None
    assert ASSUMPTION3_VIOLATED in rep.flags
    assert {ASSUMPTION3_VIOLATED, NOT_LIFTABLE_CERTIFICATE, SKIPPED_HEAVY} >= rep.flags


def test_composition_identity_of_identity_maps():
    ring = Ring(["x0", "x1", "x2"])
    F = RationalMap(ring, Ring(["y0", "y1", "y2"]), tuple(ring.gens()))
    G = RationalMap(F.target_ring, Ring(["x0", "x1", "x2"]), tuple(F.target_ring.gens()))
    assert composition_identity(F, G)
    assert map_type(F, G) == (1, 1)


def test_secant_degree_law_for_linear_inverse():
    # where both the secant variety and the inverse degree complete, the
    # secant hypersurface has degree 2d - 1
    I = in_hyperplane(rational_normal_curve(3))
    F = map_from_ideal(I)
    G = solve_inverse(F, 1)
    assert G is not None
    _, d = map_type(F, G)
    sec = secant_ideal(I)
    assert len(sec.generators) == 1
    assert sec.generators[0].degree() == 2 * d - 1


@pytest.mark.skipif(
    os.environ.get("QUADBIR_RUN_HEAVY") != "1",
    reason="two-copy elimination takes about a minute; set QUADBIR_RUN_HEAVY=1",
)
def test_secant_of_elliptic_quintic_is_a_quintic_hypersurface():
    from quadbir.varieties import elliptic_quintic_pfaffian

    sec = secant_ideal(elliptic_quintic_pfaffian(), 400_000_000)
    assert len(sec.generators) == 1
    assert sec.generators[0].degree() == 5  # 2d - 1 with d = 3
