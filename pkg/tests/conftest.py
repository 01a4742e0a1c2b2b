"""Paranoid test mode: every basis and Hilbert computation made anywhere in
the test session is re-verified against its defining property (all
S-polynomials of a returned basis reduce to zero, input generators reduce to
zero, and Hilbert-series coefficients match brute-force standard-monomial
counts out to the regularity witness plus three).  Exact arithmetic, no
tolerances.  Set QUADBIR_TEST_PARANOID=0 to disable."""

import os

import pytest

import quadbir.groebner as groebner
import quadbir.hilbert as hilbert
from quadbir.groebner import Ideal, StepBudget, _Entry, _KeyCache, _reduce_int, _spoly_int, _to_int_terms
from quadbir.hilbert import standard_monomial_count
from quadbir.polyring import DEGREVLEX, mono_deg, mono_divides

_orig_buchberger = groebner.buchberger
_orig_hilbert_data = hilbert.hilbert_data

_stats = {"gb_checked": 0, "spolys": 0, "hilbert_checked": 0}


def _checked_buchberger(ideal, order=DEGREVLEX, budget=None):
    gb = _orig_buchberger(ideal, order, budget)
    if not gb:
        return gb
    kc = _KeyCache(order.key())
    check_budget = StepBudget(None)
    entries = [_Entry(_to_int_terms(g), kc, i) for i, g in enumerate(gb)]
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            s = _spoly_int(entries[i], entries[j])
            assert not _reduce_int(s, entries, kc, check_budget), (
                f"S-polynomial of basis elements {i}, {j} does not reduce to zero"
            )
            _stats["spolys"] += 1
    gens = ideal.generators if isinstance(ideal, Ideal) else [g for g in ideal if g]
    for g in gens:
        assert not _reduce_int(_to_int_terms(g), entries, kc, check_budget), (
            "input generator does not reduce to zero against the basis"
        )
    _stats["gb_checked"] += 1
    return gb


def _checked_hilbert_data(I, order=DEGREVLEX, assume_saturated=False, budget=None, seed=0):
    hd = _orig_hilbert_data(
        I, order=order, assume_saturated=assume_saturated, budget=budget, seed=seed
    )
    if not I.is_zero() and hd.dim_proj >= 0:
        gb = I.groebner(order)
        leads = [g.lead_monomial(order) for g in gb]
        mins = []
        for m in sorted(leads, key=mono_deg):
            if not any(mono_divides(h, m) for h in mins):
                mins.append(m)
        upto = hd.regularity_witness + 3
        series = hd.hilbert_function(upto)
        for m in range(upto + 1):
            brute = standard_monomial_count(mins, I.ring.nvars, m)
            assert series[m] == brute, f"Hilbert function mismatch in degree {m}"
            if m >= hd.regularity_witness:
                assert hd.hp_value(m) == brute, (
                    f"Hilbert polynomial disagrees with the Hilbert function at {m}"
                )
    _stats["hilbert_checked"] += 1
    return hd


@pytest.fixture(scope="session", autouse=True)
def paranoid_mode():
    if os.environ.get("QUADBIR_TEST_PARANOID", "1") == "0":
        yield
        return
    import quadbir.corpus as corpus
    import quadbir.maps as maps

    groebner.buchberger = _checked_buchberger
    groebner._paranoid_stats = _stats
    hilbert.hilbert_data = _checked_hilbert_data
    corpus.hilbert_data = _checked_hilbert_data
    patched_maps = False
    if getattr(maps, "buchberger", None) is _orig_buchberger:
        maps.buchberger = _checked_buchberger
        patched_maps = True
    yield
    groebner.buchberger = _orig_buchberger
    hilbert.hilbert_data = _orig_hilbert_data
    corpus.hilbert_data = _orig_hilbert_data
    if patched_maps:
        maps.buchberger = _orig_buchberger
