"""Degeneracies, level tables, diagram data and the Landau analogue."""

import math
from fractions import Fraction

import pytest

from salpeter_qho.spectrum import (
    allowed_l,
    degeneracy_level,
    degeneracy_total,
    diagram_data,
    landau_analogue,
    level_table,
    render_csv,
    render_json,
    render_svg,
    split_count,
)

F = Fraction


class TestDegeneracy:
    def test_total_examples(self):
        assert all(degeneracy_total(N, 1) == 1 for N in range(10))
        assert degeneracy_total(2, 3) == 6
        assert degeneracy_total(3, 2) == 4

    def test_total_closed_forms(self):
        for N in range(15):
            assert degeneracy_total(N, 2) == N + 1
            assert degeneracy_total(N, 3) == (N + 1) * (N + 2) // 2

    def test_level_examples(self):
        assert degeneracy_level(1, 3) == 3
        assert degeneracy_level(0, 2) == 1
        assert degeneracy_level(2, 2) == 2

    def test_level_d3_is_2l_plus_1(self):
        for l in range(20):
            assert degeneracy_level(l, 3) == 2 * l + 1

    def test_sum_rule(self):
        for N in range(31):
            for d in range(2, 11):
                assert sum(degeneracy_level(l, d) for l in allowed_l(N)) == degeneracy_total(N, d)

    def test_d1_special_case(self):
        assert degeneracy_level(0, 1) == 1


class TestSplitting:
    def test_examples(self):
        assert split_count(0) == 1
        assert split_count(1) == 1
        assert split_count(4) == 3
        assert split_count(7) == 4

    def test_matches_allowed_l(self):
        for N in range(31):
            ls = allowed_l(N)
            assert len(ls) == split_count(N)
            assert ls == list(range(N, -1, -2))[::-1]


class TestLevelTable:
    def test_rows_for_N2_d3(self):
        table = level_table(2, 3, F(1, 100))
        rows_n2 = [r for r in table.rows if r.N == 2]
        assert [(r.l, r.degeneracy) for r in rows_n2] == [(0, 1), (2, 5)]

    def test_single_row_N0(self):
        table = level_table(0, 2, F(1, 10))
        assert len(table.rows) == 1 and table.rows[0].eps0 == 1

    def test_invariants(self):
        table = level_table(8, 4, F(1, 1000))
        for N in range(9):
            rows = [r for r in table.rows if r.N == N]
            assert len(rows) == split_count(N)
            assert sum(r.degeneracy for r in rows) == degeneracy_total(N, 4)
            eps1_values = [r.eps1 for r in sorted(rows, key=lambda r: r.l)]
            assert all(a < b for a, b in zip(eps1_values, eps1_values[1:]))
            assert len(set(eps1_values)) == len(eps1_values)

    def test_shifted_energy_column(self):
        table = level_table(2, 3, F(1, 1000))
        for r in table.rows:
            assert r.energy == r.eps0 + F(1, 1000) * r.eps1 + F(1, 1000000) * r.eps2

    def test_d1_no_splitting(self):
        table = level_table(3, 1, F(1, 1000))
        assert len(table.rows) == 4
        assert all(r.l == 0 and r.degeneracy == 1 for r in table.rows)

    def test_lambda_must_be_positive(self):
        with pytest.raises(ValueError):
            level_table(2, 3, 0)
        with pytest.raises(ValueError):
            level_table(2, 3, F(-1, 10))


class TestLandau:
    def test_matched_frequencies(self):
        result = landau_analogue(2.0, 8.0, 4.0)
        assert result["omega_1"] == pytest.approx(result["omega_c"], rel=1e-15)
        assert result["omega_1"] == pytest.approx(2.0)
        assert result["B0_match"] == pytest.approx(4.0)

    def test_energy_ladder(self):
        result = landau_analogue(1.0, 1.0, 1.0, N_max=5)
        assert result["energies"][0] == pytest.approx(1.0)  # E(0) = hbar*omega
        assert result["energies"] == pytest.approx([N + 1.0 for N in range(6)])
        assert result["degeneracies"] == [N + 1 for N in range(6)]

    def test_both_negative_charges_allowed(self):
        result = landau_analogue(-2.0, -8.0, 4.0)
        assert result["omega_1"] == pytest.approx(result["omega_c"])

    def test_sign_mismatch_rejected(self):
        with pytest.raises(ValueError):
            landau_analogue(1.0, -1.0, 1.0)


class TestDiagram:
    def test_sublevel_counts(self):
        model = diagram_data(level_table(5, 3, F(1, 1000)))
        assert [len(lvl.sublevels) for lvl in model.levels] == [1, 1, 2, 2, 3, 3]

    def test_all_shifts_downward(self):
        model = diagram_data(level_table(6, 3, F(1, 1000)))
        for lvl in model.levels:
            for _, pos, _ in lvl.sublevels:
                assert pos < lvl.baseline

    def test_larger_l_smaller_shift(self):
        model = diagram_data(level_table(6, 5, F(1, 1000)))
        for lvl in model.levels:
            shifts = [lvl.baseline - pos for _, pos, _ in lvl.sublevels]
            assert all(a > b for a, b in zip(shifts, shifts[1:]))

    def test_default_exaggeration(self):
        model = diagram_data(level_table(2, 3, F(1, 500)))
        assert model.exaggeration == F(1, 10) * 500


class TestRenderers:
    def test_csv_header_and_rationals(self):
        text = render_csv(level_table(2, 3, F(1, 1000)))
        lines = text.strip().split("\n")
        assert lines[0] == "N,l,eps0,eps1,eps2,energy,degeneracy"
        assert lines[1].startswith("0,0,3/2,-15/32,255/512,")

    def test_json_and_csv_encode_identical_values(self):
        import json

        table = level_table(4, 3, F(1, 1000))
        csv_rows = render_csv(table).strip().split("\n")[1:]
        json_rows = json.loads(render_json(table))["rows"]
        assert len(csv_rows) == len(json_rows)
        for csv_row, json_row in zip(csv_rows, json_rows):
            fields = csv_row.split(",")
            assert fields == [
                str(json_row["N"]),
                str(json_row["l"]),
                json_row["eps0"],
                json_row["eps1"],
                json_row["eps2"],
                json_row["energy"],
                str(json_row["degeneracy"]),
            ]

    def test_svg_deterministic(self):
        table = level_table(5, 3, F(1, 1000))
        a = render_svg(diagram_data(table))
        b = render_svg(diagram_data(table))
        assert a == b
        assert a.count("firebrick") == sum(split_count(N) for N in range(6)) == 12

    def test_svg_labels(self):
        svg = render_svg(diagram_data(level_table(2, 3, F(1, 1000))))
        assert "l=0" in svg and "l=2" in svg and "N=2" in svg
