#!/usr/bin/env python3
#
#  tilt.py
"""
A circularly polarized Gaussian beam observed from a tilted frame.
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
#
#  The momentum density of the fundamental Gaussian is rotated from the frame
#  attached to the beam into the observation frame; its centroid there shifts
#  by a helicity-dependent amount perpendicular to the plane of incidence.
#

# stdlib
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

# 3rd party
import numpy
from numpy.typing import NDArray

# this package
from paraxial_momenta.densities import momentum_density
from paraxial_momenta.exceptions import InvariantViolation
from paraxial_momenta.modes import BeamGeometry, ModeSuperposition, Point3, superposition_amplitude_and_gradient
from paraxial_momenta.quadrature import BeamMoments, PlaneWindow, QuadratureSpec, integrate_moments

__all__ = [
		"TiltFrame",
		"RotationMatrix",
		"SpinEstimate",
		"so3_generators",
		"rotation_matrix",
		"rotation_matrix_series",
		"beam_frame_density",
		"rotated_momentum_density",
		"tilted_window",
		"tilted_momenta_numeric",
		"tilted_centroid_numeric",
		"tilted_centroid_closed",
		"tilted_momenta_closed",
		"tilted_angular_momentum_norm",
		"tilted_spin_estimate",
		"slice_direction",
		"slice_profile",
		"slice_numeric",
		]

logger = logging.getLogger(__name__)

#: Default upper bound on the tilt angle.
DEFAULT_THETA_MAX = 1.4

_FUNDAMENTAL = ModeSuperposition({(0, 0): 1.0})


@dataclass(frozen=True)
class TiltFrame:
	"""
	Orientation of the beam axis :math:`\\hat{z}' = (\\sin\\theta\\cos\\phi, \\sin\\theta\\sin\\phi, \\cos\\theta)`.

	:param theta: Polar tilt angle, in radians.
	:param phi: Azimuth, in radians. Reduced modulo :math:`2\\pi`.
	:param theta_max: Largest permitted tilt; must stay below :math:`\\pi/2`.
	"""

	theta: float
	phi: float = 0.0
	theta_max: float = DEFAULT_THETA_MAX

	def __post_init__(self) -> None:
		if not 0 < self.theta_max < math.pi / 2:
			raise InvariantViolation("frame.theta_max", f"theta_max must lie in (0, pi/2), got {self.theta_max!r}")
		if not 0 <= self.theta < self.theta_max:
			raise InvariantViolation(
					"frame.theta",
					f"theta={self.theta!r} outside [0, {self.theta_max}); tan(theta) diverges as theta -> pi/2",
					)
		if not math.isfinite(self.phi):
			raise InvariantViolation("frame.phi", f"phi must be finite, got {self.phi!r}")

		object.__setattr__(self, "phi", self.phi % (2 * math.pi))

	@property
	def beam_axis(self) -> NDArray[numpy.float64]:
		"""
		The unit vector :math:`\\hat{z}'` in the observation frame.
		"""

		s = math.sin(self.theta)
		return numpy.array([s * math.cos(self.phi), s * math.sin(self.phi), math.cos(self.theta)])


@dataclass(frozen=True, eq=False)
class RotationMatrix:
	"""
	A proper rotation of three-dimensional space.

	:param matrix: The :math:`3 \\times 3` orthogonal matrix with unit determinant.
	"""

	matrix: NDArray[numpy.float64]

	def __post_init__(self) -> None:
		matrix = numpy.array(self.matrix, dtype=numpy.float64)
		if matrix.shape != (3, 3):
			raise InvariantViolation("rotation.shape", f"expected a 3x3 matrix, got shape {matrix.shape}")
		if not numpy.allclose(matrix.T @ matrix, numpy.eye(3), rtol=0, atol=1e-12):
			raise InvariantViolation("rotation.orthogonal", "R^T R differs from the identity")
		if abs(numpy.linalg.det(matrix) - 1) > 1e-12:
			raise InvariantViolation("rotation.proper", "det R differs from 1")

		matrix.setflags(write=False)
		object.__setattr__(self, "matrix", matrix)

	def apply(self, vector: NDArray[numpy.float64]) -> NDArray[numpy.float64]:
		"""
		Rotate ``vector``, whose leading axis holds the three components.

		:param vector:
		"""

		return numpy.tensordot(self.matrix, vector, axes=1)

	def apply_inverse(self, vector: NDArray[numpy.float64]) -> NDArray[numpy.float64]:
		"""
		Apply :math:`R^{-1} = R^T` to ``vector``.

		:param vector:
		"""

		return numpy.tensordot(self.matrix.T, vector, axes=1)


class SpinEstimate(NamedTuple):
	"""
	Single-ray estimate of the spin of a tilted beam seen from the observation frame.
	"""

	j_z: float
	j_perp: float
	J_perp: float


def so3_generators() -> Tuple[NDArray[numpy.float64], NDArray[numpy.float64], NDArray[numpy.float64]]:
	"""
	The generators :math:`[L_i]_{jk} = -\\epsilon_{ijk}` of rotations about x, y and z.
	"""

	epsilon = numpy.zeros((3, 3, 3))
	for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
		epsilon[i, j, k] = 1
		epsilon[i, k, j] = -1

	L_1, L_2, L_3 = -epsilon
	return L_1, L_2, L_3


def _axis_generator(frame: TiltFrame) -> NDArray[numpy.float64]:
	# n = z x z' / |z x z'| = (-sin(phi), cos(phi), 0)
	n = (-math.sin(frame.phi), math.cos(frame.phi), 0.0)
	return sum(n_i * L_i for n_i, L_i in zip(n, so3_generators()))  # type: ignore[return-value]


def rotation_matrix(frame: TiltFrame) -> RotationMatrix:
	"""
	The rotation :math:`R(\\theta, \\phi) = \\exp(\\theta\\,\\hat{n}\\cdot\\mathbf{L})`,
	which takes :math:`\\hat{z}` to :math:`\\hat{z}'`.

	Evaluated with the axis–angle formula :math:`I + \\sin\\theta\\,K + (1 - \\cos\\theta) K^2`.

	:param frame:
	"""  # noqa: D400

	if frame.theta == 0:
		return RotationMatrix(numpy.eye(3))

	K = _axis_generator(frame)
	return RotationMatrix(numpy.eye(3) + math.sin(frame.theta) * K + (1 - math.cos(frame.theta)) * (K @ K))


def rotation_matrix_series(frame: TiltFrame, terms: int = 24) -> NDArray[numpy.float64]:
	"""
	Sum the first ``terms`` terms of the power series of :math:`\\exp(\\theta\\,\\hat{n}\\cdot\\mathbf{L})`.

	:param frame:
	:param terms:
	"""

	A = frame.theta * _axis_generator(frame)
	term = numpy.eye(3)
	total = numpy.eye(3)

	for order in range(1, terms):
		term = term @ A / order
		total = total + term

	return total


def beam_frame_density(sigma: float, geom: BeamGeometry, point: Point3) -> NDArray[numpy.float64]:
	r"""
	Closed form of the momentum density of :math:`\psi_{00}` in the frame attached to the beam.

	.. math::

		\mathbf{p}' = \frac{2 L^2}{\pi w_0^2}\frac{e^{-kL\rho^2 / (z^2 + L^2)}}{(z^2 + L^2)^2}
			\left[ \hat{x}(xz - \sigma y L) + \hat{y}(yz + \sigma x L) + \hat{z}(z^2 + L^2) \right]

	:param sigma:
	:param geom:
	:param point: Coordinates in the beam frame.
	"""

	x, y, z = (numpy.asarray(c, dtype=numpy.float64) for c in point)
	L = geom.rayleigh_range
	d = z * z + L * L
	scale = 2 * L * L / (math.pi * geom.w0 * geom.w0) * numpy.exp(-geom.k * L * (x * x + y * y) / d) / (d * d)

	return numpy.stack(numpy.broadcast_arrays(
			scale * (x * z - sigma * y * L),
			scale * (y * z + sigma * x * L),
			scale * d,
			))


def rotated_momentum_density(
		sigma: float,
		geom: BeamGeometry,
		frame: TiltFrame,
		point: Point3,
		rotation: Optional[RotationMatrix] = None,
		) -> NDArray[numpy.float64]:
	"""
	Momentum density of the tilted fundamental Gaussian,
	:math:`\\mathbf{p}(\\mathbf{r}) = R\\,\\mathbf{p}'(R^{-1}\\mathbf{r})`.

	:param sigma: Helicity of the beam.
	:param geom:
	:param frame:
	:param point: Coordinates in the observation frame.
	:param rotation: The precomputed :func:`~.rotation_matrix` of ``frame``.
	"""  # noqa: D400

	if not -1 <= sigma <= 1:
		raise InvariantViolation("polarization.helicity", f"sigma must lie in [-1, 1], got {sigma!r}")

	R = rotation_matrix(frame) if rotation is None else rotation
	coords = numpy.stack(numpy.broadcast_arrays(*(numpy.asarray(c, dtype=numpy.float64) for c in point)))
	beam_point = Point3(*R.apply_inverse(coords))

	f, f_x, f_y = superposition_amplitude_and_gradient(_FUNDAMENTAL, beam_point, geom)
	return R.apply(momentum_density(f, f_x, f_y, sigma, geom.k))


def tilted_window(geom: BeamGeometry, frame: TiltFrame, z: float, spec: QuadratureSpec) -> PlaneWindow:
	"""
	Integration square in the plane ``z`` for the tilted beam.

	Centred where the beam axis crosses the plane, with half-width
	:math:`c\\,w(z/\\cos\\theta)/\\cos\\theta`.

	:param geom:
	:param frame:
	:param z:
	:param spec:
	"""

	cos_theta = math.cos(frame.theta)
	reach = z * math.tan(frame.theta)
	half_width = spec.half_width_factor * float(geom.spot_size(z / cos_theta)) / cos_theta
	return PlaneWindow(reach * math.cos(frame.phi), reach * math.sin(frame.phi), half_width)


def tilted_momenta_numeric(
		sigma: float,
		geom: BeamGeometry,
		frame: TiltFrame,
		spec: QuadratureSpec,
		z: float = 0.0,
		) -> BeamMoments:
	"""
	Integrate the rotated momentum density over the plane ``z`` of the observation frame.

	:param sigma:
	:param geom:
	:param frame:
	:param spec:
	:param z:
	"""

	R = rotation_matrix(frame)
	window = tilted_window(geom, frame, z, spec)
	logger.debug("tilted beam theta=%g phi=%g: window %r", frame.theta, frame.phi, window)

	def field(point: Point3) -> NDArray[numpy.float64]:
		return rotated_momentum_density(sigma, geom, frame, point, rotation=R)

	return integrate_moments(field, z, spec, window)


def tilted_centroid_numeric(
		sigma: float,
		geom: BeamGeometry,
		frame: TiltFrame,
		z: float,
		spec: QuadratureSpec,
		) -> NDArray[numpy.float64]:
	"""
	The centroid of the rotated intensity :math:`p_z` in the plane ``z``.

	:param sigma:
	:param geom:
	:param frame:
	:param z:
	:param spec:
	"""

	return tilted_momenta_numeric(sigma, geom, frame, spec, z).centroid


def tilted_centroid_closed(sigma: float, frame: TiltFrame, z: float, geom: BeamGeometry) -> NDArray[numpy.float64]:
	"""
	Leading-order centroid of the tilted beam in the plane ``z``.

	.. math::

		\\langle x \\rangle &= -\\bar{\\lambda}(\\sigma/2)\\tan\\theta\\sin\\phi + z\\tan\\theta\\cos\\phi \\\\
		\\langle y \\rangle &= \\bar{\\lambda}(\\sigma/2)\\tan\\theta\\cos\\phi + z\\tan\\theta\\sin\\phi

	:param sigma:
	:param frame:
	:param z:
	:param geom:
	"""

	tan_theta = math.tan(frame.theta)
	spin = geom.lambda_bar * sigma / 2 * tan_theta
	cos_phi, sin_phi = math.cos(frame.phi), math.sin(frame.phi)

	return numpy.array([
			-spin * sin_phi + z * tan_theta * cos_phi,
			spin * cos_phi + z * tan_theta * sin_phi,
			])


def tilted_momenta_closed(
		sigma: float,
		frame: TiltFrame,
		lambda_bar: float = 1.0,
		) -> Tuple[NDArray[numpy.float64], NDArray[numpy.float64]]:
	"""
	Leading-order :math:`\\mathbf{P}/P_z` and :math:`\\mathbf{J}/P_z` of the tilted beam.

	:param sigma:
	:param frame:
	:param lambda_bar:
	"""

	tan_theta = math.tan(frame.theta)
	cos_phi, sin_phi = math.cos(frame.phi), math.sin(frame.phi)
	spin = lambda_bar * sigma / 2

	P = numpy.array([tan_theta * cos_phi, tan_theta * sin_phi, 1.0])
	J = numpy.array([
			spin * tan_theta * cos_phi,
			spin * tan_theta * sin_phi,
			spin * (2 - math.sin(frame.theta)**2) / math.cos(frame.theta)**2,
			])
	return P, J


def tilted_angular_momentum_norm(sigma: float, frame: TiltFrame, lambda_bar: float = 1.0) -> float:
	"""
	:math:`|\\mathbf{J}|/P_z` of the tilted beam,
	:math:`\\bar{\\lambda}(|\\sigma|/2)(4 - 3\\sin^2\\theta)^{1/2}\\sec^2\\theta`.

	This grows with :math:`\\theta`, so :math:`|\\mathbf{J}|` is not conserved by the rotation.

	:param sigma:
	:param frame:
	:param lambda_bar:
	"""  # noqa: D400

	sin2 = math.sin(frame.theta)**2
	return lambda_bar * abs(sigma) / 2 * math.sqrt(4 - 3 * sin2) / math.cos(frame.theta)**2


def tilted_spin_estimate(sigma: float, frame: TiltFrame, lambda_bar: float = 1.0) -> SpinEstimate:
	"""
	Single-ray estimate: a spin :math:`\\bar{\\lambda}\\sigma` along :math:`\\hat{z}'`, projected onto the
	observation frame, with the transverse part enhanced by the :math:`1/\\cos\\theta` footprint.

	The rigorous :math:`J_\\perp` is half of :attr:`~.SpinEstimate.J_perp`.

	:param sigma:
	:param frame:
	:param lambda_bar:
	"""  # noqa: D400

	return SpinEstimate(
			j_z=lambda_bar * sigma * math.cos(frame.theta),
			j_perp=lambda_bar * abs(sigma) * math.sin(frame.theta),
			J_perp=lambda_bar * sigma * math.tan(frame.theta),
			)


def slice_direction(frame: TiltFrame) -> NDArray[numpy.float64]:
	"""
	Unit vector in the plane :math:`z = 0` perpendicular to the plane of incidence,
	:math:`\\hat{n} = (-\\sin\\phi, \\cos\\phi)`.

	:param frame:
	"""  # noqa: D400

	return numpy.array([-math.sin(frame.phi), math.cos(frame.phi)])


def slice_profile(
		sigma: float,
		geom: BeamGeometry,
		frame: TiltFrame,
		t: NDArray[numpy.float64],
		) -> NDArray[numpy.float64]:
	"""
	Leading-order :math:`p_z` along the line :math:`t\\hat{n}` of the plane :math:`z = 0`,
	normalised to 1 at :math:`t = 0`.

	.. math::

		e^{-2\\tau^2}(1 + \\sigma\\theta_0\\tau\\tan\\theta), \\qquad \\tau = t / w_0

	:param sigma:
	:param geom:
	:param frame:
	:param t: Signed distance along :func:`~.slice_direction`.
	"""  # noqa: D400

	tau = numpy.asarray(t, dtype=numpy.float64) / geom.w0
	return numpy.exp(-2 * tau * tau) * (1 + sigma * geom.angular_spread * tau * math.tan(frame.theta))


def slice_numeric(
		sigma: float,
		geom: BeamGeometry,
		frame: TiltFrame,
		t: NDArray[numpy.float64],
		) -> NDArray[numpy.float64]:
	"""
	The rotated :math:`p_z` along the same line as :func:`~.slice_profile`, normalised to 1 at :math:`t = 0`.

	:param sigma:
	:param geom:
	:param frame:
	:param t:
	"""

	t = numpy.asarray(t, dtype=numpy.float64)
	n_x, n_y = slice_direction(frame)
	R = rotation_matrix(frame)

	p_z = rotated_momentum_density(sigma, geom, frame, Point3(t * n_x, t * n_y, 0.0), rotation=R)[2]
	origin = rotated_momentum_density(sigma, geom, frame, Point3(0.0, 0.0, 0.0), rotation=R)[2]
	return p_z / origin
