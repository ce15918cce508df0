import pytest
from hypothesis import given
from hypothesis import strategies as st

import threshold_spectra as ts
from threshold_spectra.graphs import FERRERS_GLYPH, parse_sequence_text

from helpers import brute_degree_sequence, brute_edge_count, creation_adjacency

EXAMPLE1 = "001101010111"
EXAMPLE1_BLOCKS = ((0, 2), (1, 2), (0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 3))

bit_lists = st.lists(st.sampled_from([0, 1]), min_size=1, max_size=32)


class TestParse:
    def test_plain_bits(self):
        assert ts.parse_bits("0011") == (0, 0, 1, 1)

    def test_single_bit(self):
        assert ts.parse_bits("1") == (1,)

    def test_illegal_character_reports_position(self):
        with pytest.raises(ts.SequenceError) as exc:
            ts.parse_bits("0x1")
        assert exc.value.position == 2

    def test_empty_rejected(self):
        with pytest.raises(ts.SequenceError):
            ts.parse_bits("")

    def test_run_length_form(self):
        assert parse_sequence_text("0^2,1^2,0,1,0,1,0,1^3") == ts.parse_bits(EXAMPLE1)

    def test_run_length_single_token(self):
        assert parse_sequence_text("1^5") == (1, 1, 1, 1, 1)

    @pytest.mark.parametrize("text", ["1^", "2^3", "1^0", "0,,1", "0^2,"])
    def test_run_length_malformed(self, text):
        with pytest.raises(ts.SequenceError):
            parse_sequence_text(text)


class TestNormalize:
    def test_first_bit_is_overwritten(self):
        assert ts.normalize([0, 1]).blocks == ((1, 2),)

    def test_example1(self):
        g = ts.parse(EXAMPLE1)
        assert g.blocks == EXAMPLE1_BLOCKS
        assert (g.n, g.r, g.kbar) == (12, 8, 7)

    def test_leading_one_before_zeros(self):
        assert ts.normalize([1, 0, 0]).blocks == ((0, 3),)

    def test_single_vertex_kept_degenerate(self):
        assert ts.normalize([1]).blocks == ((1, 1),)

    @given(bit_lists)
    def test_idempotent(self, bits):
        g = ts.normalize(bits)
        assert ts.normalize(g.bits()) == g

    def test_invalid_blocks_rejected(self):
        with pytest.raises(ValueError):
            ts.ThresholdGraph(((0, 2), (0, 3)))
        with pytest.raises(ValueError):
            ts.ThresholdGraph(((1, 1), (0, 3)))


class TestDegrees:
    def test_example1_profile(self):
        profile = ts.block_degrees(ts.parse(EXAMPLE1))
        assert profile.block_degrees == (7, 8, 5, 9, 4, 10, 3, 11)
        assert profile.edge_count == 47
        assert profile.degree_sequence == (3, 4, 5, 7, 7, 8, 8, 9, 10, 11, 11, 11)

    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_complete_graph(self, n):
        profile = ts.block_degrees(ts.normalize((1,) * n))
        assert profile.block_degrees == (n - 1,)
        assert profile.edge_count == n * (n - 1) // 2

    def test_star(self):
        profile = ts.block_degrees(ts.parse("0001"))
        assert profile.block_degrees == (1, 3)
        assert profile.degree_sequence == (1, 1, 1, 3)
        assert profile.edge_count == 3

    @given(bit_lists)
    def test_matches_creation_process(self, bits):
        g = ts.normalize(bits)
        profile = ts.block_degrees(g)
        assert profile.degree_sequence == brute_degree_sequence(g.bits())
        assert profile.edge_count == brute_edge_count(g.bits())

    @given(bit_lists)
    def test_degree_ordering_chain(self, bits):
        # zero-block degrees strictly fall, one-block degrees strictly rise,
        # and the largest zero degree stays below the smallest one degree
        g = ts.normalize(bits)
        p = ts.block_degrees(g).block_degrees
        zero = [p[k] for k, (b, _) in enumerate(g.blocks) if b == 0]
        one = [p[k] for k, (b, _) in enumerate(g.blocks) if b == 1]
        assert all(a > b for a, b in zip(zero, zero[1:]))
        assert all(a < b for a, b in zip(one, one[1:]))
        if zero and one:
            assert max(zero) <= min(one) - 1


class TestEdges:
    def test_complete_pair(self):
        assert ts.is_edge(ts.normalize([1, 1]), 1, 2) is True

    def test_empty_graph(self):
        g = ts.normalize([0, 0, 0])
        assert not any(ts.is_edge(g, i, j) for i in range(1, 4) for j in range(i + 1, 4))

    def test_example1_pair(self):
        # vertex 12 lies in the final one-block, so it sees vertex 1
        assert ts.is_edge(ts.parse(EXAMPLE1), 1, 12) is True

    def test_pair_is_unordered(self):
        g = ts.parse(EXAMPLE1)
        assert ts.is_edge(g, 12, 1) == ts.is_edge(g, 1, 12)

    def test_bad_pairs_rejected(self):
        g = ts.normalize([0, 1])
        with pytest.raises(ValueError):
            ts.is_edge(g, 1, 1)
        with pytest.raises(ValueError):
            ts.is_edge(g, 0, 2)
        with pytest.raises(ValueError):
            ts.is_edge(g, 1, 3)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_edge_rule_equals_creation_process(self, n):
        for g in ts.enumerate_graphs(n):
            adj = creation_adjacency(g.bits())
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    assert ts.is_edge(g, i, j) == ((j - 1) in adj[i - 1])


class TestComplement:
    def test_complete_to_empty(self):
        assert ts.complement(ts.normalize((1,) * 5)).blocks == ((0, 5),)

    @given(bit_lists)
    def test_involution(self, bits):
        g = ts.normalize(bits)
        assert ts.complement(ts.complement(g)) == g

    @given(bit_lists)
    def test_degree_relation(self, bits):
        g = ts.normalize(bits)
        p = ts.block_degrees(g).block_degrees
        pbar = ts.block_degrees(ts.complement(g)).block_degrees
        assert all(pb == g.n - 1 - pk for pb, pk in zip(pbar, p))

    def test_example1_complement(self):
        gc = ts.complement(ts.parse(EXAMPLE1))
        assert gc.blocks == ((1, 2), (0, 2), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1), (0, 3))
        assert ts.block_degrees(gc).block_degrees == (4, 3, 6, 2, 7, 1, 8, 0)


class TestEnumerate:
    def test_two_vertices(self):
        got = [g.blocks for g in ts.enumerate_graphs(2)]
        assert got == [((0, 2),), ((1, 2),)]

    def test_counts(self):
        assert sum(1 for _ in ts.enumerate_graphs(4)) == 8
        assert sum(1 for _ in ts.enumerate_graphs(1)) == 1

    def test_each_graph_once(self):
        seen = set(ts.enumerate_graphs(7))
        assert len(seen) == 64

    def test_counter_order_is_big_endian(self):
        g = ts.graph_from_counter(4, 1)
        assert g.bits() == (0, 0, 0, 1)
        g = ts.graph_from_counter(4, 4)
        assert g.bits() == (1, 1, 0, 0)

    def test_example1_is_enumerated(self):
        target = ts.parse(EXAMPLE1)
        assert target in set(ts.enumerate_graphs(12))

    def test_counter_range_partition(self):
        whole = list(ts.enumerate_graphs(6))
        parts = list(ts.enumerate_graphs(6, 0, 10)) + list(ts.enumerate_graphs(6, 10, 32))
        assert whole == parts

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            list(ts.enumerate_graphs(0))


class TestFerrers:
    @staticmethod
    def row_lengths(text):
        return [line.count(FERRERS_GLYPH) for line in text.splitlines()]

    def test_triangle(self):
        assert self.row_lengths(ts.ferrers(ts.normalize((1, 1, 1)))) == [2, 2, 2]

    def test_star(self):
        assert self.row_lengths(ts.ferrers(ts.parse("0001"))) == [3, 1, 1, 1]

    def test_example1(self):
        text = ts.ferrers(ts.parse(EXAMPLE1))
        assert self.row_lengths(text) == [11, 11, 11, 10, 9, 8, 8, 7, 7, 5, 4, 3]
        labels = [line.split("|")[0].strip() for line in text.splitlines()]
        assert labels == ["b8", "b8", "b8", "b6", "b4", "b2", "b2", "b1", "b1", "b3", "b5", "b7"]

    def test_single_vertex_is_one_empty_row(self):
        text = ts.ferrers(ts.normalize([1]))
        assert text.splitlines() == ["b1 |"]
