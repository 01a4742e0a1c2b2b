from dataclasses import replace

import pytest

from quadbir.classify import (
    check_row,
    check_table,
    coindex_solver,
    default_rule_table,
    enumerate_r1,
    enumerate_r2,
    enumerate_r3,
    enumerate_r4,
    load_table,
    table_all_pass,
)


def test_enumerate_r1_case_list():
    rows = enumerate_r1()
    keys = [(r.n, r.a, r.lam, r.g, r.d, r.Delta) for r in rows]
    assert keys == [
        (3, 1, 2, 0, 1, 2),
        (4, 0, 5, 1, 3, 1),
        (4, 1, 4, 0, 2, 2),
        (4, 2, 4, 1, 1, 4),
        (4, 3, 3, 0, 1, 5),
    ]
    struck = [r for r in rows if r.struck_by]
    assert len(struck) == 1
    assert struck[0].key()[1:] == (4, 2, 4, 1, 1, 4)
    assert struck[0].struck_by == "oadp_curve_is_twisted_cubic"
    survivors = [r for r in rows if r.struck_by is None]
    assert len(survivors) == 4


def test_enumerate_r1_rule_removal_enlarges():
    rules = default_rule_table().without("oadp_curve_is_twisted_cubic")
    rows = enumerate_r1(rules)
    assert all(r.struck_by is None for r in rows)
    assert len(rows) == 5


def test_enumerate_r2_matches_table():
    rows = enumerate_r2()
    expected = {row.key() for row in load_table() if row.r == 2}
    assert {row.key() for row in rows} == expected
    assert len(rows) == 10


def test_enumerate_r2_without_degree_rule_enlarges():
    rules = default_rule_table().without("nondegenerate_surface_needs_d_ge_2")
    rows = enumerate_r2(rules)
    assert {r.key() for r in enumerate_r2()} <= {r.key() for r in rows}
    extra = {r.key() for r in rows} - {r.key() for r in enumerate_r2()}
    assert extra == {(2, 6, 1, 7, 2, 1, 6)}


def test_enumerate_r3_matches_table():
    rows = enumerate_r3()
    expected = {row.key() for row in load_table() if row.r == 3}
    assert {row.key() for row in rows} == expected
    assert len(rows) == 19
    # existence flags travel with the rows
    flags = {r.key(): r.existence for r in rows}
    assert flags[(3, 8, 0, 12, 6, 5, 1)] == "?"
    assert flags[(3, 8, 1, 11, 5, 4, 2)] == "E**"


def test_enumerate_r3_gap_five_excluded_by_rules():
    rows = enumerate_r3()
    assert all(not (row.n == 8 and row.a == 5 and row.eps == 0) for row in rows)
    # removing both strike rules readmits the degree-seven candidate
    rules = default_rule_table().without(
        "threefold_a5_excluded", "inverse_degree_integral"
    )
    enlarged = enumerate_r3(rules)
    assert any(row.a == 5 and row.eps == 0 for row in enlarged)
    assert {r.key() for r in rows} <= {r.key() for r in enlarged}


def test_enumerate_r4_rows_and_families():
    rows, families = enumerate_r4()
    quads = {(r.a, r.lam, r.g, r.chi) for r in rows}
    assert (10, 7, 0, 1) in quads
    assert (7, 10, 3, 1) in quads
    assert (6, 11, 4, 1) in quads
    assert (5, 12, 5, 1) in quads
    assert (4, 14, 8, 1) in quads and (4, 13, 6, 1) in quads
    assert (3, 14, 7, 1) in quads
    # the rejected degree-11 elliptic scroll never appears
    assert all(not (r.a == 0 and r.lam == 11) for r in rows)
    assert all(r.a != 8 and r.a != 9 for r in rows)
    gaps = [f.a for f in families]
    assert gaps == [3, 2, 1, 0]
    by_gap = {f.a: f for f in families}
    assert (by_gap[3].lam_min, by_gap[3].lam_max, by_gap[3].g_max) == (14, 16, 11)
    assert (by_gap[2].lam_min, by_gap[2].lam_max, by_gap[2].g_max) == (15, 18, 14)
    assert (by_gap[1].lam_min, by_gap[1].lam_max, by_gap[1].g_max) == (15, 20, 17)
    assert by_gap[0].lam_max is None


def test_coindex_solver_triples():
    assert coindex_solver(3, 2, 10) == [(3, 8, 0), (6, 13, 1), (9, 18, 2)]
    # the linear-inverse coindex-2 family: exactly the slice tower rows
    sols = coindex_solver(1, 2, 3)
    assert sols == [(1, 4, 0), (2, 5, 1), (3, 6, 2)]
    probe = coindex_solver(1, 0, 2)
    assert probe == [(1, 2, 2), (2, 3, 3)]


def test_coindex_solver_closure():
    for d, c in [(3, 2), (1, 2), (2, 1), (4, 3)]:
        for r, n, delta in coindex_solver(d, c, 12):
            assert delta == (r - d - c + 2) // d
            assert (r - d - c + 2) % d == 0
            assert n == 2 * r + 2 - delta
            assert delta >= 0


def test_table_all_pass():
    reports = check_table()
    assert len(reports) == 33
    assert table_all_pass(reports)


@pytest.mark.parametrize("fieldname", ["n", "a", "lam", "g", "d", "Delta", "c"])
def test_table_mutation_detected(fieldname):
    rows = load_table()
    for row in rows:
        for delta in (1, -1):
            value = getattr(row, fieldname) + delta
            if value < 0:
                continue
            mutated = replace(row, **{fieldname: value})
            try:
                reports = check_row(mutated)
            except Exception:
                continue  # an exception also counts as detection
            assert not all(r.ok for r in reports), (
                f"undetected mutation {fieldname}{delta:+d} on {row.key()}"
            )


def test_existence_flags_cover_legend():
    flags = {row.existence for row in load_table()}
    assert flags == {"E", "E*", "E**", "?"}
