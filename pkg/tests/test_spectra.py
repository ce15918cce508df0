import math

import numpy as np
import pytest

import threshold_spectra as ts

EXAMPLE1 = "001101010111"
# approximate spectrum of the worked 12-vertex example
EXAMPLE1_SPECTRUM = [
    2.46158, 3.50373, 4.49073, 5.68371, 7, 7,
    7.84337, 8.68471, 9.49912, 10, 10, 17.83303,
]


def all_graphs(max_n, start=2):
    for n in range(start, max_n + 1):
        yield from ts.enumerate_graphs(n)


class TestAssembleQ:
    def test_single_edge(self):
        assert np.array_equal(ts.assemble_q(ts.normalize([1, 1])), [[1, 1], [1, 1]])

    def test_empty_graph(self):
        assert np.array_equal(ts.assemble_q(ts.normalize([0, 0, 0])), np.zeros((3, 3)))

    def test_two_blocks(self):
        q = ts.assemble_q(ts.parse("0011"))
        want = np.ones((4, 4))
        np.fill_diagonal(want, [2, 2, 3, 3])
        want[0, 1] = want[1, 0] = 0.0
        assert np.array_equal(q, want)

    def test_trace_is_twice_edge_count(self):
        for g in all_graphs(8):
            assert np.trace(ts.assemble_q(g)) == 2.0 * ts.block_degrees(g).edge_count

    def test_matches_edge_rule(self):
        for g in all_graphs(7):
            q = ts.assemble_q(g)
            for i in range(1, g.n + 1):
                for j in range(i + 1, g.n + 1):
                    assert q[i - 1, j - 1] == float(ts.is_edge(g, i, j))


class TestAssembleCondensed:
    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_complete_graph(self, n):
        c = ts.assemble_condensed(ts.normalize((1,) * n))
        assert np.array_equal(c, [[2 * n - 2]])

    def test_star(self):
        c = ts.assemble_condensed(ts.parse("0001"))
        s3 = math.sqrt(3.0)
        assert np.array_equal(c, [[1.0, s3], [s3, 3.0]])

    def test_two_blocks(self):
        c = ts.assemble_condensed(ts.parse("0011"))
        assert np.array_equal(c, [[2.0, 2.0], [2.0, 4.0]])


class TestDirectEigenpairs:
    def test_complete_graph(self):
        pairs = ts.direct_eigenpairs(ts.normalize((1,) * 6))
        assert len(pairs) == 1
        assert pairs[0].eigenvalue == 4
        assert pairs[0].multiplicity == 5

    def test_example1_repeated_degrees(self):
        pairs = {p.block: p for p in ts.direct_eigenpairs(ts.parse(EXAMPLE1))}
        assert set(pairs) == {1, 2, 8}
        assert (pairs[1].eigenvalue, pairs[1].multiplicity) == (7, 1)
        assert (pairs[2].eigenvalue, pairs[2].multiplicity) == (7, 1)
        assert (pairs[8].eigenvalue, pairs[8].multiplicity) == (10, 2)

    def test_star_multiplicity(self):
        pairs = ts.direct_eigenpairs(ts.parse("0001"))
        assert pairs[0].eigenvalue == 1
        assert pairs[0].multiplicity == 2

    def test_residuals_and_orthogonality(self):
        # each sparse vector must be an exact eigenvector of Q, and vectors
        # within one block must be pairwise orthogonal
        for g in all_graphs(8):
            q = ts.assemble_q(g)
            for pair in ts.direct_eigenpairs(g):
                dense = []
                for vec in pair.vectors:
                    v = np.zeros(g.n)
                    for vertex, coeff in vec:
                        v[vertex - 1] = coeff
                    resid = np.abs(q @ v - pair.eigenvalue * v).max()
                    assert resid <= 1e-12
                    dense.append(v)
                for i in range(len(dense)):
                    for j in range(i + 1, len(dense)):
                        assert abs(dense[i] @ dense[j]) <= 1e-12


class TestEigensolve:
    def test_example1_dense_solve_matches_reported_values(self):
        spec = ts.eigensolve(ts.assemble_q(ts.parse(EXAMPLE1)))
        assert np.abs(np.array(spec.values) - EXAMPLE1_SPECTRUM).max() < 1e-4

    def test_spectrum_type_fields(self):
        spec = ts.eigensolve(np.array([[2.0, 2.0], [2.0, 4.0]]))
        assert spec.n == 2
        assert spec.provenance == ("dense", "dense")
        assert spec.values[0] == pytest.approx(3.0 - math.sqrt(5.0), abs=1e-12)


class TestFullSpectrum:
    def test_star(self):
        spec = ts.full_spectrum(ts.parse("0001"))
        assert np.allclose(spec.values, [0.0, 1.0, 1.0, 4.0], atol=1e-10)
        assert spec.provenance == ("condensed", "direct:1", "direct:1", "condensed")

    def test_single_edge(self):
        spec = ts.full_spectrum(ts.normalize([1, 1]))
        assert np.allclose(spec.values, [0.0, 2.0], atol=1e-12)

    def test_example1_values_and_provenance(self):
        spec = ts.full_spectrum(ts.parse(EXAMPLE1))
        assert np.abs(np.array(spec.values) - EXAMPLE1_SPECTRUM).max() < 1e-4
        direct = [v for v, tag in zip(spec.values, spec.provenance) if tag.startswith("direct")]
        assert sorted(direct) == [7.0, 7.0, 10.0, 10.0]
        assert spec.provenance.count("condensed") == 8

    def test_matches_dense_solve(self):
        for g in all_graphs(9):
            merged = np.array(ts.full_spectrum(g).values)
            dense = np.array(ts.eigensolve(ts.assemble_q(g)).values)
            assert np.abs(merged - dense).max() <= 1e-8

    def test_matches_lapack(self):
        for g in all_graphs(8):
            merged = np.array(ts.full_spectrum(g).values)
            want = np.linalg.eigvalsh(ts.assemble_q(g))
            assert np.abs(merged - want).max() <= 1e-8

    def test_nonnegative(self):
        for g in all_graphs(8):
            assert ts.full_spectrum(g).values[0] >= -1e-9

    def test_json_dict(self):
        d = ts.full_spectrum(ts.normalize([1, 1])).to_json_dict()
        assert set(d) == {"n", "values", "provenance"}
        assert d["n"] == 2


class TestComplementIdentities:
    def test_single_edge_condensed_complement(self):
        got = ts.condensed_complement(np.array([[2.0]]), (2,))
        assert np.abs(got - [[0.0]]).max() <= 1e-12

    def test_two_block_example(self):
        got = ts.condensed_complement(np.array([[2.0, 2.0], [2.0, 4.0]]), (2, 2))
        assert np.abs(got - [[2.0, 0.0], [0.0, 0.0]]).max() <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            ts.condensed_complement(np.eye(2), (2, 2, 1))

    def test_matches_complement_assembly(self):
        for g in all_graphs(8):
            q_sizes = tuple(q for _, q in g.blocks)
            via_identity = ts.condensed_complement(ts.assemble_condensed(g), q_sizes)
            direct = ts.assemble_condensed(ts.complement(g))
            assert np.abs(via_identity - direct).max() <= 1e-12

    def test_involution(self):
        for g in all_graphs(7):
            q_sizes = tuple(q for _, q in g.blocks)
            c = ts.assemble_condensed(g)
            twice = ts.condensed_complement(ts.condensed_complement(c, q_sizes), q_sizes)
            assert np.abs(twice - c).max() <= 1e-12

    def test_dense_complement_identity_exact(self):
        for g in all_graphs(8):
            n = g.n
            total = ts.assemble_q(g) + ts.assemble_q(ts.complement(g))
            want = (n - 2.0) * np.eye(n) + np.ones((n, n))
            assert np.array_equal(total, want)
