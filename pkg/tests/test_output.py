# 3rd party
import numpy
import pytest
from domdf_python_tools.paths import PathPlus
from hypothesis import given
from hypothesis import strategies as st

# this package
from paraxial_momenta.output import format_cell, format_float, write_csv, write_grid_text, write_pgm


@given(value=st.floats(allow_nan=False, allow_infinity=False))
def test_format_float_round_trips(value: float):
	assert float(format_float(value)) == value


def test_format_cell():
	assert format_float(0.1) == "0.10000000000000001"
	assert format_cell(0.5) == "0.5"
	assert format_cell(numpy.float64(1) / 3) == "0.33333333333333331"
	assert format_cell(3) == '3'
	assert format_cell(True) == "true"
	assert format_cell("orthonormality z=0") == "orthonormality z=0"


def test_write_csv(tmp_pathplus: PathPlus):
	filename = write_csv(
			tmp_pathplus / "nested" / "table.csv",
			["theta_rad", "sigma", "note"],
			[[0.1, 1.0, "a,b"], [0.25, -1.0, "plain"]],
			)

	assert filename.read_text() == 'theta_rad,sigma,note\n0.10000000000000001,1,"a,b"\n0.25,-1,plain\n'


def test_write_csv_row_length(tmp_pathplus: PathPlus):
	with pytest.raises(ValueError, match="2 cells"):
		write_csv(tmp_pathplus / "table.csv", ["a", "b", "c"], [[1, 2]])


def test_write_grid_text(tmp_pathplus: PathPlus):
	xs = numpy.array([-1.0, 1.0])
	ys = numpy.array([0.0, 0.5, 1.0])
	values = numpy.arange(6.0).reshape(2, 3)

	lines = write_grid_text(tmp_pathplus / "grid.txt", xs, ys, values).read_lines()
	assert lines[0] == "# x y value"
	assert lines[1] == "-1 0 0"
	assert lines[3] == "-1 1 2"
	assert lines[6] == "1 1 5"

	with pytest.raises(ValueError, match="does not match"):
		write_grid_text(tmp_pathplus / "grid.txt", xs, ys, values.T)


def test_write_pgm(tmp_pathplus: PathPlus):
	values = numpy.zeros((4, 3))
	values[0, 0] = 1.0  # x minimum, y minimum
	values[3, 2] = 2.0  # x maximum, y maximum

	data = write_pgm(tmp_pathplus / "map.pgm", values).read_bytes()
	header = b"P5\n4 3\n255\n"
	assert data.startswith(header)

	pixels = numpy.frombuffer(data[len(header):], dtype=numpy.uint8).reshape(3, 4)
	assert pixels[0, 3] == 255
	assert pixels[2, 0] == 128
	assert pixels.sum() == 255 + 128


def test_write_pgm_blank(tmp_pathplus: PathPlus):
	data = write_pgm(tmp_pathplus / "blank.pgm", numpy.zeros((2, 2))).read_bytes()
	assert data == b"P5\n2 2\n255\n" + bytes(4)

	with pytest.raises(ValueError, match="2-D"):
		write_pgm(tmp_pathplus / "line.pgm", numpy.zeros(3))
