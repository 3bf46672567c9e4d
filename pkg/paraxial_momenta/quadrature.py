#!/usr/bin/env python3
#
#  quadrature.py
"""
Transverse-plane integration: centroids and momenta per unit length of a paraxial beam.
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
import functools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

# 3rd party
import numpy
from numpy.typing import NDArray

# this package
from paraxial_momenta.densities import angular_momentum_density, momentum_density
from paraxial_momenta.exceptions import InvariantViolation, NonFiniteSampleError
from paraxial_momenta.modes import (
		BeamGeometry,
		ModeSuperposition,
		Point3,
		PolarizationState,
		helicity,
		superposition_amplitude_and_gradient
		)

__all__ = [
		"QuadratureSpec",
		"PlaneWindow",
		"BeamMoments",
		"Sampler",
		"gauss_legendre",
		"integrate_plane",
		"convergence_check",
		"integrate_moments",
		"beam_window",
		"centroid",
		"momenta_numeric",
		"momenta_convergence",
		"parts_relations_residuals",
		"centroid_trajectory",
		"transverse_momentum_from_centroid",
		]

logger = logging.getLogger(__name__)

#: Signature of an integrand: ``sampler(x, y, z)`` with ``x`` and ``y`` 2-D node grids.
#: The result may carry leading component axes in front of the grid axes.
Sampler = Callable[[NDArray[numpy.float64], NDArray[numpy.float64], float], NDArray]

#: Rows of the node grid evaluated per tile. Fixed, so the reduction order never depends on ``workers``.
TILE_ROWS = 32


@dataclass(frozen=True)
class QuadratureSpec:
	"""
	Tensor-product Gauss–Legendre rule on a truncated square.

	:param half_width_factor: Half-width of the square in units of the spot size.
	:param nodes_per_axis: Odd number of nodes along each axis.
	:param workers: Number of threads used to evaluate tiles of the node grid.
	"""

	half_width_factor: float = 8.0
	nodes_per_axis: int = 201
	workers: int = 1

	def __post_init__(self) -> None:
		if self.nodes_per_axis < 21 or self.nodes_per_axis % 2 == 0:
			raise InvariantViolation(
					"quadrature.nodes",
					f"nodes_per_axis must be odd and at least 21, got {self.nodes_per_axis!r}",
					)
		if not self.half_width_factor >= 5:
			raise InvariantViolation(
					"quadrature.half_width",
					f"half_width_factor must be at least 5, got {self.half_width_factor!r}",
					)
		if self.workers < 1:
			raise InvariantViolation("quadrature.workers", f"workers must be positive, got {self.workers!r}")

	def doubled(self) -> "QuadratureSpec":
		"""
		The same rule with ``2n + 1`` nodes per axis.
		"""

		return replace(self, nodes_per_axis=2 * self.nodes_per_axis + 1)


class PlaneWindow(NamedTuple):
	"""
	The square :math:`[x_c - h, x_c + h] \\times [y_c - h, y_c + h]` integrated over.
	"""

	centre_x: float
	centre_y: float
	half_width: float


class BeamMoments(NamedTuple):
	"""
	Linear and angular momentum per unit length, and the intensity centroid, in the plane ``z``.
	"""

	#: :math:`\mathbf{P}`
	P: NDArray[numpy.float64]

	#: :math:`\mathbf{J}`
	J: NDArray[numpy.float64]

	#: :math:`\langle \mathbf{r}_\perp \rangle`
	centroid: NDArray[numpy.float64]

	z: float


@functools.lru_cache(maxsize=None)
def gauss_legendre(nodes: int) -> Tuple[NDArray[numpy.float64], NDArray[numpy.float64]]:
	"""
	Gauss–Legendre nodes and weights on :math:`[-1, 1]`.

	:param nodes:
	"""

	points, weights = numpy.polynomial.legendre.leggauss(nodes)
	points.setflags(write=False)
	weights.setflags(write=False)
	return points, weights


def _pairwise_sum(partials: Sequence[NDArray]) -> NDArray:
	if len(partials) == 1:
		return partials[0]

	middle = len(partials) // 2
	return _pairwise_sum(partials[:middle]) + _pairwise_sum(partials[middle:])


def integrate_plane(
		sampler: Sampler,
		z: float,
		spec: QuadratureSpec,
		window: PlaneWindow,
		) -> Union[float, complex, NDArray]:
	"""
	Integrate ``sampler`` over the square ``window`` of the plane at ``z``.

	The node grid is split into tiles of :py:data:`~.TILE_ROWS` rows which may be evaluated concurrently.
	Partial sums are combined in a fixed pairwise order, so the result is bit-identical for any number of workers.

	:param sampler: Pure function of the node coordinates.
	:param z:
	:param spec:
	:param window:

	:raises NonFiniteSampleError: If the sampler returns ``nan`` or ``inf`` at any node.
	"""

	reference, unit_weights = gauss_legendre(spec.nodes_per_axis)
	h = window.half_width
	xs = window.centre_x + h * reference
	ys = window.centre_y + h * reference
	weights = h * unit_weights

	def tile(rows: slice) -> NDArray:
		x, y = numpy.meshgrid(xs[rows], ys, indexing="ij")
		values = numpy.asarray(sampler(x, y, z))

		finite = numpy.isfinite(values)
		if not finite.all():
			bad = numpy.argwhere(~finite.reshape(-1, *x.shape).all(axis=0))[0]
			raise NonFiniteSampleError(float(x[tuple(bad)]), float(y[tuple(bad)]), float(z))

		return numpy.einsum("...ij,i,j->...", values, weights[rows], weights)

	tiles = [slice(start, start + TILE_ROWS) for start in range(0, spec.nodes_per_axis, TILE_ROWS)]

	partials: List[NDArray]
	if spec.workers > 1:
		with ThreadPoolExecutor(max_workers=spec.workers) as executor:
			partials = list(executor.map(tile, tiles))
	else:
		partials = [tile(rows) for rows in tiles]

	total = _pairwise_sum(partials)
	if numpy.ndim(total) == 0:
		return total.item()
	return total


def convergence_check(sampler: Sampler, z: float, spec: QuadratureSpec, window: PlaneWindow) -> float:
	"""
	Relative change of :func:`~.integrate_plane` when the node count is doubled.

	:param sampler:
	:param z:
	:param spec:
	:param window:
	"""

	coarse = numpy.asarray(integrate_plane(sampler, z, spec, window))
	fine = numpy.asarray(integrate_plane(sampler, z, spec.doubled(), window))
	scale = numpy.max(numpy.abs(fine))
	change = float(numpy.max(numpy.abs(fine - coarse)) / scale) if scale else float(numpy.max(numpy.abs(fine)))

	logger.debug(
			"node doubling %d -> %d changed the integral by %.3e",
			spec.nodes_per_axis,
			spec.doubled().nodes_per_axis,
			change,
			)
	return change


def beam_window(
		geom: BeamGeometry,
		z: float,
		spec: QuadratureSpec,
		centre: Tuple[float, float] = (0.0, 0.0),
		cos_theta: float = 1.0,
		) -> PlaneWindow:
	"""
	The integration square for a beam whose footprint in the plane ``z`` is centred at ``centre``.

	The half-width is ``half_width_factor`` spot sizes, widened by :math:`1/\\cos\\theta` for a tilted beam.

	:param geom:
	:param z: Distance from the waist measured along the beam axis.
	:param spec:
	:param centre:
	:param cos_theta:
	"""

	half_width = spec.half_width_factor * float(geom.spot_size(z)) / cos_theta
	return PlaneWindow(float(centre[0]), float(centre[1]), half_width)


def _moments_sampler(momentum_field: Callable[[Point3], NDArray[numpy.float64]]) -> Sampler:

	def sampler(x: NDArray[numpy.float64], y: NDArray[numpy.float64], z: float) -> NDArray[numpy.float64]:
		point = Point3(x, y, z)
		p = momentum_field(point)
		j = angular_momentum_density(point, p)
		return numpy.concatenate([p, j, [x * p[2], y * p[2]]])

	return sampler


def integrate_moments(
		momentum_field: Callable[[Point3], NDArray[numpy.float64]],
		z: float,
		spec: QuadratureSpec,
		window: PlaneWindow,
		) -> BeamMoments:
	"""
	Integrate a momentum density field over the plane ``z``.

	:param momentum_field: Maps a grid of points to :math:`\\mathbf{p}`, with a leading axis of length 3.
	:param z:
	:param spec:
	:param window:

	:raises InvariantViolation: If the flux :math:`P_z` through the plane is not positive.
	"""

	totals = numpy.asarray(integrate_plane(_moments_sampler(momentum_field), z, spec, window))
	P, J, first_moment = totals[:3], totals[3:6], totals[6:]

	if not P[2] > 0:
		raise InvariantViolation("centroid.flux", f"flux through the plane z={z!r} is {P[2]!r}")

	return BeamMoments(P=P, J=J, centroid=first_moment / P[2], z=float(z))


def _sigma(pol: Union[PolarizationState, float]) -> float:
	return helicity(pol) if isinstance(pol, PolarizationState) else float(pol)


def _envelope_field(
		modes: ModeSuperposition,
		sigma: float,
		geom: BeamGeometry,
		) -> Callable[[Point3], NDArray[numpy.float64]]:

	def field(point: Point3) -> NDArray[numpy.float64]:
		f, f_x, f_y = superposition_amplitude_and_gradient(modes, point, geom)
		return momentum_density(f, f_x, f_y, sigma, geom.k)

	return field


def centroid(
		modes: ModeSuperposition,
		pol: Union[PolarizationState, float],
		geom: BeamGeometry,
		z: float,
		spec: QuadratureSpec,
		) -> NDArray[numpy.float64]:
	"""
	The intensity centroid :math:`\\langle \\mathbf{r}_\\perp \\rangle` in the plane ``z``.

	:param modes:
	:param pol: Polarization state or helicity. The centroid does not depend on it.
	:param geom:
	:param z:
	:param spec:

	:raises InvariantViolation: If the integrated intensity vanishes.
	"""

	_sigma(pol)

	def sampler(x: NDArray[numpy.float64], y: NDArray[numpy.float64], z: float) -> NDArray[numpy.float64]:
		f, _, _ = superposition_amplitude_and_gradient(modes, Point3(x, y, z), geom)
		intensity = (f * f.conj()).real
		return numpy.stack([intensity, x * intensity, y * intensity])

	flux, *first_moment = integrate_plane(sampler, z, spec, beam_window(geom, z, spec))
	if not flux > 0:
		raise InvariantViolation("centroid.flux", f"flux through the plane z={z!r} is {flux!r}")

	return numpy.asarray(first_moment) / flux


def momenta_numeric(
		modes: ModeSuperposition,
		pol: Union[PolarizationState, float],
		geom: BeamGeometry,
		z: float,
		spec: QuadratureSpec,
		) -> BeamMoments:
	"""
	Integrate :math:`\\mathbf{p}` and :math:`\\mathbf{j}` of a superposition over the plane ``z``.

	:param modes:
	:param pol: Polarization state or helicity.
	:param geom:
	:param z:
	:param spec:
	"""

	sigma = _sigma(pol)
	window = beam_window(geom, z, spec)
	logger.debug("integrating momenta at z=%g over half-width %g", z, window.half_width)
	return integrate_moments(_envelope_field(modes, sigma, geom), z, spec, window)


def momenta_convergence(
		modes: ModeSuperposition,
		pol: Union[PolarizationState, float],
		geom: BeamGeometry,
		z: float,
		spec: QuadratureSpec,
		) -> float:
	"""
	Relative change of the integrals behind :func:`~.momenta_numeric` when the node count is doubled.

	:param modes:
	:param pol: Polarization state or helicity.
	:param geom:
	:param z:
	:param spec:
	"""

	sampler = _moments_sampler(_envelope_field(modes, _sigma(pol), geom))
	return convergence_check(sampler, z, spec, beam_window(geom, z, spec))


def parts_relations_residuals(
		modes: ModeSuperposition,
		geom: BeamGeometry,
		z: float,
		spec: QuadratureSpec,
		) -> Tuple[float, float]:
	"""
	Residuals of the integration-by-parts identities

	.. math::

		\\int \\mathrm{Re}(f\\partial_x f^*) = \\int \\mathrm{Re}(f\\partial_y f^*) = 0, \\qquad
		\\int [x\\,\\mathrm{Re}(f\\partial_x f^*) + y\\,\\mathrm{Re}(f\\partial_y f^*)] = -\\int |f|^2 .

	:param modes:
	:param geom:
	:param z:
	:param spec:
	"""  # noqa: D400

	def sampler(x: NDArray[numpy.float64], y: NDArray[numpy.float64], z: float) -> NDArray[numpy.float64]:
		f, f_x, f_y = superposition_amplitude_and_gradient(modes, Point3(x, y, z), geom)
		a = (f * numpy.conj(f_x)).real
		b = (f * numpy.conj(f_y)).real
		return numpy.stack([a, b, x * a + y * b, (f * f.conj()).real])

	int_a, int_b, radial, intensity = integrate_plane(sampler, z, spec, beam_window(geom, z, spec))
	return abs(int_a) + abs(int_b), abs(radial + intensity)


def centroid_trajectory(
		modes: ModeSuperposition,
		pol: Union[PolarizationState, float],
		geom: BeamGeometry,
		zs: Sequence[float],
		spec: QuadratureSpec,
		) -> NDArray[numpy.float64]:
	"""
	The centroid at each plane in ``zs``, as an array of shape ``(len(zs), 2)``.

	:param modes:
	:param pol:
	:param geom:
	:param zs:
	:param spec:
	"""

	return numpy.array([centroid(modes, pol, geom, z, spec) for z in zs])


def transverse_momentum_from_centroid(
		moments: BeamMoments,
		P: Optional[NDArray[numpy.float64]] = None,
		) -> NDArray[numpy.float64]:
	"""
	Predict :math:`(J_x, J_y)` from the centroid, :math:`J_x = \\langle y \\rangle P_z - z P_y`
	and :math:`J_y = z P_x - \\langle x \\rangle P_z`.

	:param moments:
	:param P: The momentum to use instead of ``moments.P``.
	"""  # noqa: D400

	P = moments.P if P is None else P
	x_bar, y_bar = moments.centroid
	z = moments.z
	return numpy.array([y_bar * P[2] - z * P[1], z * P[0] - x_bar * P[2]])
