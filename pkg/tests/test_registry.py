from islandcolor.registry import HARD_ROWS, REGISTRY, SMALL_ROWS, lookup


class TestTables:
    def test_row_counts(self):
        assert len(SMALL_ROWS) == 19
        assert len(HARD_ROWS) == 24
        assert len(SMALL_ROWS) + len(HARD_ROWS) == 43

    def test_duplicate_row_consistent(self):
        # DSJC250.5 appears in both tables with identical data
        small = [r for r in SMALL_ROWS if r.name == "DSJC250.5"]
        hard = [r for r in HARD_ROWS if r.name == "DSJC250.5"]
        assert len(small) == 1 and len(hard) == 1
        assert small[0] == hard[0]
        assert len(REGISTRY) == 42  # distinct names

    def test_spot_values(self):
        assert REGISTRY["DSJC125.1"].vertex_count == 125
        assert REGISTRY["DSJC125.1"].edge_count == 736
        assert REGISTRY["DSJC125.1"].best_known_k == 5
        assert REGISTRY["R250.1"].edge_count == 867
        assert REGISTRY["R250.1"].best_known_k == 8
        assert REGISTRY["C2000.5"].vertex_count == 2000
        assert REGISTRY["C2000.5"].edge_count == 999836
        assert REGISTRY["C2000.5"].best_known_k == 153
        assert REGISTRY["C4000.5"].edge_count == 4000268
        assert REGISTRY["latin_sqr_10"].edge_count == 307350
        assert REGISTRY["le450_25b"].best_known_k == 25
        assert REGISTRY["school1"].edge_count == 19095
        assert REGISTRY["flat1000_76_0"].best_known_k == 82

    def test_all_rows_sane(self):
        for row in SMALL_ROWS + HARD_ROWS:
            assert row.vertex_count >= 1
            assert row.edge_count >= 0
            assert 1 <= row.best_known_k <= row.vertex_count
            max_edges = row.vertex_count * (row.vertex_count - 1) // 2
            assert row.edge_count <= max_edges

    def test_lookup_case_insensitive(self):
        assert lookup("dsjc125.1") is REGISTRY["DSJC125.1"]
        assert lookup("DSJC125.1") is REGISTRY["DSJC125.1"]
        assert lookup("no_such_instance") is None
