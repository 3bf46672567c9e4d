#!/usr/bin/env python3
#
#  output.py
"""
Writers for CSV tables, plain-text grids and portable graymaps.
"""
#
#  Copyright © 2026 Dominic Davis-Foster <dominic@davis-foster.co.uk>
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to deal
#  in the Software without restriction, including without limitation the rights
#  to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#  copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in all
#  copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
#  EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
#  MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
#  IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
#  DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
#  OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE
#  OR OTHER DEALINGS IN THE SOFTWARE.
#

# stdlib
import csv
import io
from typing import Any, Iterable, Sequence

# 3rd party
import numpy
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.stringlist import StringList
from numpy.typing import NDArray

__all__ = ["format_float", "format_cell", "write_csv", "write_grid_text", "write_pgm"]


def format_float(value: float) -> str:
	"""
	Format ``value`` with 17 significant digits, enough to round-trip any double.

	:param value:
	"""

	return f"{float(value):.17g}"


def format_cell(value: Any) -> str:
	"""
	Format a single CSV cell. Floats use :func:`~.format_float`; everything else :class:`str`.

	:param value:
	"""

	if isinstance(value, bool):
		return "true" if value else "false"
	if isinstance(value, (float, numpy.floating)):
		return format_float(value)
	return str(value)


def write_csv(filename: PathPlus, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> PathPlus:
	"""
	Write a comma-separated table with a header row.

	:param filename:
	:param header:
	:param rows:

	:returns: The path written to.
	"""

	buf = io.StringIO()
	writer = csv.writer(buf, lineterminator='\n')
	writer.writerow(header)

	for row in rows:
		if len(row) != len(header):
			raise ValueError(f"row has {len(row)} cells, header has {len(header)}")
		writer.writerow([format_cell(cell) for cell in row])

	filename = PathPlus(filename)
	filename.parent.maybe_make(parents=True)
	filename.write_text(buf.getvalue(), encoding="UTF-8")
	return filename


def write_grid_text(
		filename: PathPlus,
		xs: NDArray[numpy.float64],
		ys: NDArray[numpy.float64],
		values: NDArray[numpy.float64],
		) -> PathPlus:
	"""
	Write ``values[i, j]`` sampled at ``(xs[i], ys[j])`` as ``x y value`` lines.

	:param filename:
	:param xs:
	:param ys:
	:param values: Array of shape ``(len(xs), len(ys))``.
	"""

	values = numpy.asarray(values)
	if values.shape != (len(xs), len(ys)):
		raise ValueError(f"grid of shape {values.shape} does not match {len(xs)} x {len(ys)} nodes")

	buf = StringList(["# x y value"])
	for i, x in enumerate(xs):
		buf.extend(f"{format_float(x)} {format_float(y)} {format_float(values[i, j])}" for j, y in enumerate(ys))

	filename = PathPlus(filename)
	filename.parent.maybe_make(parents=True)
	filename.write_lines(buf)
	return filename


def write_pgm(filename: PathPlus, values: NDArray[numpy.float64]) -> PathPlus:
	"""
	Write a binary (P5) 8-bit portable graymap, scaling ``values`` so that its maximum is white.

	Row ``i`` of the image is ``values[:, -1 - i]``, so :math:`y` increases upwards and :math:`x` to the right.

	:param filename:
	:param values: Non-negative array indexed ``[x, y]``.
	"""

	values = numpy.asarray(values, dtype=numpy.float64)
	if values.ndim != 2:
		raise ValueError(f"expected a 2-D array, got {values.ndim} dimensions")

	peak = values.max()
	scaled = numpy.zeros_like(values) if not peak > 0 else numpy.clip(values / peak, 0, 1)
	pixels = numpy.rint(255 * scaled).astype(numpy.uint8)

	image = numpy.ascontiguousarray(pixels.T[::-1])
	height, width = image.shape

	filename = PathPlus(filename)
	filename.parent.maybe_make(parents=True)
	filename.write_bytes(f"P5\n{width} {height}\n255\n".encode("ascii") + image.tobytes())
	return filename
