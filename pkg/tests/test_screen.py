from soltes.formats import write_graph6
from soltes.families import cycle
from soltes.screen import (
    CSV_HEADER,
    appendix_fixtures,
    rows_to_csv,
    screen_file,
    screen_record,
    screen_records,
    summarize,
)
from tests.conftest import petersen


class TestScreenRecord:
    def test_census_star_duals_all_invariant(self):
        # [PAPER] every bundled record passes the star-dual screen
        rows = screen_records(appendix_fixtures(), "star_dual")
        assert all(r.error is None for r in rows)
        assert all(r.soltes for r in rows)
        assert [r.diam_dual for r in rows] == [2, 7, 6, 8]
        assert all(r.uniformity == 4 and r.regular == 2 for r in rows)
        assert all(r.delta_min == 0 and r.delta_max == 0 for r in rows)
        assert [r.zero_count for r in rows] == [r.n_dual for r in rows]

    def test_petersen_star_dual_misses(self):
        row = screen_record(0, write_graph6(petersen()), "star_dual")
        assert row.error is None
        assert row.soltes is False
        assert row.n_dual == 15 and row.m_dual == 10

    def test_petersen_triangle_dual(self):
        # cubic and triangle-free: triangle dual equals the star dual
        a = screen_record(0, write_graph6(petersen()), "star_dual")
        b = screen_record(0, write_graph6(petersen()), "triangle_dual")
        assert (a.n_dual, a.m_dual, a.soltes) == (b.n_dual, b.m_dual, b.soltes)

    def test_bad_record_becomes_error_row(self):
        row = screen_record(3, "not graph6 \x01", "star_dual")
        assert row.error is not None
        assert row.index == 3 and row.soltes is None

    def test_triangle_dual_rejects_non_cubic(self):
        # census records are 4-regular, so the triangle transform errors
        row = screen_record(0, appendix_fixtures()[0], "triangle_dual")
        assert row.error is not None

    def test_unknown_transform(self):
        import pytest
        with pytest.raises(ValueError):
            screen_record(0, "Bw", "dual_of_dual")


class TestPipeline:
    def test_jobs_preserve_order(self):
        records = appendix_fixtures() + [write_graph6(petersen()), "Bw"]
        serial = screen_records(records, "star_dual")
        threaded = screen_records(records, "star_dual", jobs=4)
        assert [r.csv() for r in serial] == [r.csv() for r in threaded]

    def test_file_round_trip(self, tmp_path):
        p = tmp_path / "census.g6"
        p.write_text("\n".join(appendix_fixtures()) + "\n")
        rows = screen_file(p, "star_dual")
        assert len(rows) == 4
        assert all(r.soltes for r in rows)

    def test_csv_shape(self):
        rows = screen_records([appendix_fixtures()[0], "garbage\x02"],
                              "star_dual")
        text = rows_to_csv(rows)
        lines = text.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 3
        ncols = len(CSV_HEADER.split(","))
        assert all(len(l.split(",")) == ncols for l in lines[1:])
        # error row: only index and transform populated
        assert lines[2].startswith("1,,")

    def test_summary(self):
        records = appendix_fixtures() + ["junk\x03", write_graph6(cycle(6))]
        rows = screen_records(records, "star_dual")
        text = summarize(rows)
        assert "records: 6" in text
        assert "deletion-invariant: 4" in text
        assert "errors: 1" in text
