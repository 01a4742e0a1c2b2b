from fractions import Fraction

import pytest

from quadbir.groebner import Ideal
from quadbir.hilbert import (
    graded_piece,
    graded_piece_dim,
    hilbert_data,
    hilbert_series_numerator,
    initial_ideal,
    standard_monomial_count,
)
from quadbir.invariants import hp_relations
from quadbir.polyring import DEGREVLEX, LEX, Ring
from quadbir.varieties import rational_normal_curve, veronese


@pytest.fixture
def twisted_cubic():
    return rational_normal_curve(3)


@pytest.fixture
def quartic_image():
    ring = Ring([f"y{i}" for i in range(7)])
    return Ideal(
        ring,
        [
            ring.parse("y2*y3 - y4^2 - y5^2 - y0*y6"),
            ring.parse("y2^2 + y3^2 - y4*y5 + y1*y6"),
        ],
    )


def test_initial_ideal_simple():
    ring = Ring(["x", "y", "z"])
    I = Ideal(ring, [ring.parse("x^2 - y*z")])
    init = initial_ideal(I, DEGREVLEX)
    assert [str(g) for g in init.generators] == ["x^2"]


def test_initial_ideal_twisted_cubic(twisted_cubic):
    init = initial_ideal(twisted_cubic, DEGREVLEX)
    monos = sorted(str(g) for g in init.generators)
    assert monos == ["x1*x2", "x1^2", "x2^2"]


def test_initial_ideal_rejects_inhomogeneous():
    ring = Ring(["x", "y"])
    with pytest.raises(ValueError):
        initial_ideal(Ideal(ring, [ring.parse("x^2 - y")]))


def test_series_numerator_base_cases():
    assert hilbert_series_numerator([], 2) == (1,)
    assert hilbert_series_numerator([(2,)], 1) == (1, 0, -1)


def test_series_numerator_complete_intersection(quartic_image):
    # two quadrics forming a regular sequence: numerator (1 - t^2)^2
    # regardless of the order used for the initial ideal
    init = initial_ideal(quartic_image, DEGREVLEX)
    monos = [g.lead_monomial() for g in init.generators]
    N = hilbert_series_numerator(monos, 7)
    assert N == (1, 0, -2, 0, 1)


def test_hilbert_data_twisted_cubic(twisted_cubic):
    hd = hilbert_data(twisted_cubic, assume_saturated=True)
    assert (hd.dim_proj, hd.degree, hd.sectional_genus, hd.chi) == (1, 3, 0, 1)
    assert hd.hp_str() == "3*t + 1"


def test_hilbert_data_quartic_image(quartic_image):
    hd = hilbert_data(quartic_image, assume_saturated=True)
    assert (hd.dim_proj, hd.degree) == (4, 4)
    assert hd.hp == (
        Fraction(1),
        Fraction(5, 2),
        Fraction(7, 3),
        Fraction(1),
        Fraction(1, 6),
    )


def test_hilbert_data_line_with_embedded_structure():
    # the recorded singular scheme of the quartic image: hp = t + 5
    ring = Ring([f"y{i}" for i in range(7)])
    gens = [
        "y6", "y5^2", "y4*y5", "y3*y5", "y2*y5", "y4^2", "y3*y4", "y2*y4",
        "2*y1*y4 + y0*y5", "y0*y4 + 2*y1*y5", "y3^2", "y2*y3", "y2^2",
        "y1*y2 + 2*y0*y3", "2*y0*y2 + y1*y3",
    ]
    I = Ideal(ring, [ring.parse(t) for t in gens])
    hd = hilbert_data(I, assume_saturated=True)
    assert hd.hp_str() == "t + 5"
    assert (hd.dim_proj, hd.degree) == (1, 1)


def test_hilbert_data_thirteen_quadrics():
    from quadbir.ideal_io import read_ideal
    import os

    path = os.path.join(
        os.path.dirname(__file__), "..", "src", "quadbir", "data", "ideals",
        "line_times_quadric_base.ideal",
    )
    I = read_ideal(path)
    hd = hilbert_data(I, assume_saturated=True)
    assert (hd.dim_proj, hd.degree, hd.sectional_genus, hd.chi) == (3, 8, 2, 1)
    # Euler characteristic agrees with the threefold Hilbert relation
    assert hp_relations(3, 8, 4, 0, lam=8, g=2)["chi"] == hd.chi


def test_order_invariance(twisted_cubic, quartic_image):
    for I in (twisted_cubic, quartic_image, veronese(2, 2)):
        a = hilbert_data(I, DEGREVLEX, assume_saturated=True)
        b = hilbert_data(I, LEX, assume_saturated=True)
        assert a.hp == b.hp
        assert (a.dim_proj, a.degree, a.sectional_genus) == (
            b.dim_proj,
            b.degree,
            b.sectional_genus,
        )


def test_hilbert_function_oracle(twisted_cubic):
    hd = hilbert_data(twisted_cubic, assume_saturated=True)
    init = initial_ideal(twisted_cubic)
    monos = [g.lead_monomial() for g in init.generators]
    hf = hd.hilbert_function(hd.regularity_witness + 3)
    for m, value in enumerate(hf):
        assert value == standard_monomial_count(monos, 4, m)
        if m >= hd.regularity_witness:
            assert hd.hp_value(m) == value


def test_generic_section_first_difference():
    import random

    from quadbir.hilbert import poly_difference

    rng = random.Random(5)
    for I in (rational_normal_curve(3), veronese(2, 2)):
        hd = hilbert_data(I, assume_saturated=True)
        ring = I.ring
        coeffs = [rng.randint(1, 5) for _ in range(ring.nvars)]
        ell = ring.zero()
        for c, v in zip(coeffs, ring.variables):
            ell = ell + ring.var(v).scale(c)
        sliced = Ideal(ring, list(I.generators) + [ell])
        hs = hilbert_data(sliced, seed=3)
        assert hs.hp == poly_difference(hd.hp)


def test_graded_piece_dims():
    ring = Ring(["x"])
    I = Ideal(ring, [ring.parse("x^2")])
    assert graded_piece_dim(I, 2) == 1
    tc4 = rational_normal_curve(3)
    big = Ring(["x0", "x1", "x2", "x3", "x4"])
    lift = [big.var(v) for v in ("x0", "x1", "x2", "x3")]
    gens = [g.substitute(lift) for g in tc4.generators] + [big.var("x4")]
    I4 = Ideal(big, gens)
    dim2, basis = graded_piece(I4, 2)
    assert dim2 == 8
    assert all(b.is_homogeneous() and b.degree() == 2 for b in basis)
    # ambient gap bookkeeping: 8 quadrics minus dim of the linear system
    assert dim2 - (4 + 1) == 3


def test_graded_piece_thirteen():
    from quadbir.ideal_io import read_ideal
    import os

    path = os.path.join(
        os.path.dirname(__file__), "..", "src", "quadbir", "data", "ideals",
        "line_times_quadric_base.ideal",
    )
    I = read_ideal(path)
    assert graded_piece_dim(I, 2) == 13
