#!/usr/bin/env python3
#
#  densities.py
"""
Pointwise electromagnetic fields and momentum densities of a polarized paraxial beam.
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
from typing import NamedTuple, Union

# 3rd party
import numpy
from numpy.typing import NDArray

# this package
from paraxial_momenta.exceptions import InvariantViolation
from paraxial_momenta.modes import (
		BeamGeometry,
		Complex,
		ModeSuperposition,
		Point3,
		PolarizationState,
		helicity,
		superposition_amplitude_and_gradient
		)

__all__ = [
		"DensitySample",
		"VectorFieldSample",
		"vector_fields",
		"poynting_momentum",
		"momentum_density",
		"angular_momentum_density",
		"angular_momentum_density_expanded",
		"density_sample",
		]

Vector = NDArray[numpy.float64]


class VectorFieldSample(NamedTuple):
	"""
	Complex amplitudes of the electric and magnetic fields, each with a leading axis of length 3.
	"""

	E: NDArray[numpy.complex128]
	B: NDArray[numpy.complex128]


class DensitySample(NamedTuple):
	"""
	Linear and angular momentum densities at a point (or grid of points).

	``p`` and ``j`` have a leading axis of length 3.
	"""

	point: Point3
	p: Vector
	j: Vector


def _check_sigma(sigma: float) -> None:
	if not -1 <= sigma <= 1:
		raise InvariantViolation("polarization.helicity", f"sigma must lie in [-1, 1], got {sigma!r}")


def vector_fields(f: Complex, f_x: Complex, f_y: Complex, pol: PolarizationState) -> VectorFieldSample:
	"""
	Build :math:`\\mathbf{E}` and :math:`\\mathbf{B}` from the scalar envelope, with :math:`\\omega = k = 1`.

	:param f: The envelope.
	:param f_x: :math:`\\partial_x f`
	:param f_y: :math:`\\partial_y f`
	:param pol:
	"""

	helicity(pol)  # validates normalisation
	alpha, beta = pol.alpha, pol.beta
	f, f_x, f_y = numpy.broadcast_arrays(
			numpy.asarray(f, dtype=numpy.complex128),
			numpy.asarray(f_x, dtype=numpy.complex128),
			numpy.asarray(f_y, dtype=numpy.complex128),
			)

	E = 1j * numpy.stack([alpha * f, beta * f, 1j * (alpha * f_x + beta * f_y)])
	B = 1j * numpy.stack([-beta * f, alpha * f, -1j * (beta * f_x - alpha * f_y)])
	return VectorFieldSample(E, B)


def poynting_momentum(fields: VectorFieldSample, epsilon0: float = 1.0) -> Vector:
	"""
	The time-averaged momentum density :math:`\\epsilon_0 \\mathrm{Re}[\\mathbf{E} \\times \\mathbf{B}^*]`.

	With :math:`\\omega = k = 1` this coincides with :func:`~.momentum_density`.

	:param fields:
	:param epsilon0:
	"""

	return epsilon0 * numpy.cross(fields.E, fields.B.conj(), axis=0).real


def momentum_density(f: Complex, f_x: Complex, f_y: Complex, sigma: float, k: float = 1.0) -> Vector:
	r"""
	The linear momentum density :math:`\mathbf{p}` of a beam with envelope ``f`` and helicity ``sigma``.

	.. math::

		k p_x &= -\mathrm{Im}(f\partial_x f^*) + \sigma\,\mathrm{Re}(f\partial_y f^*) \\
		k p_y &= -\mathrm{Im}(f\partial_y f^*) - \sigma\,\mathrm{Re}(f\partial_x f^*) \\
		p_z &= |f|^2

	:param f:
	:param f_x:
	:param f_y:
	:param sigma:
	:param k:

	:return: Array whose leading axis holds the x, y and z components.
	"""

	_check_sigma(sigma)

	f = numpy.asarray(f, dtype=numpy.complex128)
	a = f * numpy.conj(f_x)
	b = f * numpy.conj(f_y)

	p_x = (-a.imag + sigma * b.real) / k
	p_y = (-b.imag - sigma * a.real) / k
	p_z = (f * f.conj()).real

	return numpy.stack(numpy.broadcast_arrays(p_x, p_y, p_z))


def angular_momentum_density(point: Point3, p: Vector) -> Vector:
	"""
	The angular momentum density :math:`\\mathbf{j} = \\mathbf{r} \\times \\mathbf{p}` about the frame origin.

	:param point:
	:param p: Momentum density with a leading axis of length 3.
	"""

	x, y, z = point
	p_x, p_y, p_z = p

	return numpy.stack(numpy.broadcast_arrays(
			y * p_z - z * p_y,
			z * p_x - x * p_z,
			x * p_y - y * p_x,
			))


def angular_momentum_density_expanded(
		f: Complex,
		f_x: Complex,
		f_y: Complex,
		sigma: float,
		point: Point3,
		k: float = 1.0,
		) -> Vector:
	"""
	The angular momentum density written out componentwise in terms of the envelope.

	Agrees with ``angular_momentum_density(point, momentum_density(f, f_x, f_y, sigma, k))``.

	:param f:
	:param f_x:
	:param f_y:
	:param sigma:
	:param point:
	:param k:
	"""

	_check_sigma(sigma)
	x, y, z = point

	f = numpy.asarray(f, dtype=numpy.complex128)
	a = f * numpy.conj(f_x)
	b = f * numpy.conj(f_y)
	intensity = (f * f.conj()).real

	j_x = k * y * intensity + z * b.imag + z * sigma * a.real
	j_y = -k * x * intensity - z * a.imag + z * sigma * b.real
	j_z = -x * b.imag + y * a.imag - sigma * (x * a.real + y * b.real)

	return numpy.stack(numpy.broadcast_arrays(j_x, j_y, j_z)) / k


def density_sample(
		modes: ModeSuperposition,
		pol: Union[PolarizationState, float],
		geom: BeamGeometry,
		point: Point3,
		) -> DensitySample:
	"""
	Evaluate :math:`\\mathbf{p}` and :math:`\\mathbf{j}` of a superposition at ``point``.

	:param modes:
	:param pol: A polarization state, or the helicity directly.
	:param geom:
	:param point:

	:raises InvariantViolation: If any coordinate of ``point`` is not finite.
	"""

	point = Point3.checked(*point)
	sigma = helicity(pol) if isinstance(pol, PolarizationState) else float(pol)
	f, f_x, f_y = superposition_amplitude_and_gradient(modes, point, geom)
	p = momentum_density(f, f_x, f_y, sigma, geom.k)
	return DensitySample(point, p, angular_momentum_density(point, p))
