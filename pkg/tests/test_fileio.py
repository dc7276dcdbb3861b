"""Round trips and format checks for the matrix file formats."""

import io
from fractions import Fraction

import numpy as np
import pytest

from crpinv import (
    DomainError,
    exact_eq,
    float_matrix,
    rational_matrix,
    read_matrix,
    read_matrix_market,
    read_rational_text,
    write_matrix,
    write_matrix_market,
    write_rational_text,
)


class TestRationalText:
    def test_round_trip_is_exact(self, tmp_path):
        a = rational_matrix(
            [[Fraction(1, 3), Fraction(-7, 11)], [5, Fraction(2**70, 3**40)]]
        )
        path = tmp_path / "a.txt"
        write_rational_text(a, path)
        assert exact_eq(read_rational_text(path), a)

    def test_written_entries_are_verbatim(self, tmp_path):
        path = tmp_path / "a.txt"
        write_rational_text(rational_matrix([[Fraction(-2, 6), 3]]), path)
        lines = path.read_text().splitlines()
        assert lines[0] == "1 2"
        assert lines[1] == "-1/3 3"

    @pytest.mark.parametrize("shape", [(0, 3), (3, 0), (1, 1), (1, 4), (4, 1)])
    def test_degenerate_shapes_round_trip(self, tmp_path, shape):
        from crpinv import zeros

        a = zeros(*shape, domain="rational")
        path = tmp_path / "z.txt"
        write_rational_text(a, path)
        back = read_rational_text(path)
        assert back.shape == shape

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError):
            read_rational_text(io.StringIO("3\n1 2 3\n"))

    def test_short_row_rejected(self):
        with pytest.raises(ValueError):
            read_rational_text(io.StringIO("1 3\n1 2\n"))

    def test_float_matrix_rejected(self):
        with pytest.raises(DomainError):
            write_rational_text(float_matrix([[1.0]]), io.StringIO())

    def test_file_like_round_trip(self):
        a = rational_matrix([[Fraction(3, 7), 0], [1, Fraction(-9, 2)]])
        buf = io.StringIO()
        write_rational_text(a, buf)
        buf.seek(0)
        assert exact_eq(read_rational_text(buf), a)


class TestMatrixMarket:
    def test_array_round_trip_bit_exact(self, tmp_path, rng):
        a = rng.standard_normal((4, 3))
        path = tmp_path / "a.mtx"
        write_matrix_market(a, path)
        assert np.array_equal(read_matrix_market(path), a)

    def test_array_entries_are_column_major(self, tmp_path):
        a = float_matrix([[1.0, 3.0], [2.0, 4.0]])
        path = tmp_path / "a.mtx"
        write_matrix_market(a, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "%%MatrixMarket matrix array real general"
        assert lines[1] == "2 2"
        assert [float(x) for x in lines[2:]] == [1.0, 2.0, 3.0, 4.0]

    def test_coordinate_round_trip_bit_exact(self, tmp_path, rng):
        a = rng.standard_normal((5, 4))
        a[rng.random((5, 4)) < 0.5] = 0.0
        path = tmp_path / "a.mtx"
        write_matrix_market(a, path, fmt="coordinate")
        assert np.array_equal(read_matrix_market(path), a)

    def test_coordinate_indices_are_one_based(self, tmp_path):
        a = float_matrix([[0.0, 0.0], [0.0, 2.5]])
        path = tmp_path / "a.mtx"
        write_matrix_market(a, path, fmt="coordinate")
        lines = path.read_text().splitlines()
        assert lines[1] == "2 2 1"
        assert lines[2] == "2 2 2.5"

    def test_integer_field_accepted(self):
        text = "%%MatrixMarket matrix array integer general\n2 1\n3\n-4\n"
        out = read_matrix_market(io.StringIO(text))
        assert np.array_equal(out, np.array([[3.0], [-4.0]]))

    def test_comment_lines_before_size(self):
        text = (
            "%%MatrixMarket matrix coordinate real general\n"
            "% produced by hand\n"
            "% second comment\n"
            "2 2 1\n"
            "1 2 7.0\n"
        )
        out = read_matrix_market(io.StringIO(text))
        assert out[0, 1] == 7.0

    def test_bad_banner_rejected(self):
        with pytest.raises(ValueError):
            read_matrix_market(io.StringIO("MatrixMarket matrix array real general\n"))

    def test_unsupported_layout_rejected(self):
        text = "%%MatrixMarket matrix tensor real general\n"
        with pytest.raises(ValueError):
            read_matrix_market(io.StringIO(text))

    def test_complex_field_rejected(self):
        text = "%%MatrixMarket matrix array complex general\n2 2\n"
        with pytest.raises(ValueError):
            read_matrix_market(io.StringIO(text))

    def test_unknown_fmt_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            write_matrix_market(np.eye(2), tmp_path / "a.mtx", fmt="banded")

    def test_rational_matrix_rejected(self):
        with pytest.raises(DomainError):
            write_matrix_market(rational_matrix([[1]]), io.StringIO())

    def test_subnormal_and_tiny_values_survive(self, tmp_path):
        a = float_matrix([[5e-324, 1e308], [-0.0, 1.0 + 2**-52]])
        path = tmp_path / "tiny.mtx"
        write_matrix_market(a, path)
        assert np.array_equal(read_matrix_market(path), a)


class TestDomainDispatch:
    def test_round_trip_by_domain(self, tmp_path):
        q = rational_matrix([[Fraction(1, 2)]])
        f = float_matrix([[0.1, 0.2]])
        qp = tmp_path / "q.txt"
        fp = tmp_path / "f.mtx"
        write_matrix(q, qp)
        write_matrix(f, fp)
        assert exact_eq(read_matrix(qp, "rational"), q)
        assert np.array_equal(read_matrix(fp, "float"), f)

    def test_unknown_domain_rejected(self, tmp_path):
        with pytest.raises(DomainError):
            read_matrix(tmp_path / "x", "decimal")
