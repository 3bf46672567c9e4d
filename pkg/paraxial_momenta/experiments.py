#!/usr/bin/env python3
#
#  experiments.py
"""
The named experiments run by the command-line interface.
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
import logging
import math
import sys
from typing import Callable, Dict, Iterator, List, NamedTuple, Union

# 3rd party
import numpy
from domdf_python_tools.paths import PathPlus
from numpy.typing import NDArray

# this package
from paraxial_momenta.config import RunConfig
from paraxial_momenta.densities import (
		angular_momentum_density,
		angular_momentum_density_expanded,
		density_sample,
		momentum_density,
		poynting_momentum,
		vector_fields
		)
from paraxial_momenta.modes import (
		BeamGeometry,
		ModeSuperposition,
		Point3,
		PolarizationState,
		laguerre_gauss_10,
		mode_amplitude,
		paraxial_residual,
		superposition_amplitude_and_gradient
		)
from paraxial_momenta.modespace import angular_momentum_modespace, momentum_modespace, spin_flux_ratio
from paraxial_momenta.output import write_csv, write_grid_text, write_pgm
from paraxial_momenta.quadrature import (
		BeamMoments,
		beam_window,
		centroid_trajectory,
		integrate_plane,
		momenta_convergence,
		momenta_numeric,
		parts_relations_residuals,
		transverse_momentum_from_centroid
		)
from paraxial_momenta.tilt import (
		TiltFrame,
		rotation_matrix,
		rotation_matrix_series,
		slice_direction,
		slice_numeric,
		slice_profile,
		tilted_angular_momentum_norm,
		tilted_centroid_closed,
		tilted_momenta_closed,
		tilted_momenta_numeric,
		tilted_spin_estimate
		)

__all__ = [
		"Check",
		"RUNNERS",
		"run",
		"run_moments",
		"run_centroid",
		"run_tilt_sweep",
		"run_density_grid",
		"run_verify",
		"verification_checks",
		"random_superposition",
		"random_polarization",
		"output_filename",
		]

logger = logging.getLogger(__name__)

#: Seeds of the random superpositions used by ``verify``.
VERIFY_SEEDS = (1, 2, 3)

#: Tolerance for quantities computed two exact ways.
EXACT_TOLERANCE = 1e-9

MOMENTS_HEADER = (
		"sigma",
		"z_lambdabar",
		"P_x",
		"P_y",
		"P_z",
		"J_x_lambdabar",
		"J_y_lambdabar",
		"J_z_lambdabar",
		"P_x_modespace",
		"P_y_modespace",
		"P_z_modespace",
		"J_x_modespace_lambdabar",
		"J_y_modespace_lambdabar",
		"J_z_modespace_lambdabar",
		"x_centroid_lambdabar",
		"y_centroid_lambdabar",
		)

CENTROID_HEADER = (
		"z_lambdabar",
		"spot_size_lambdabar",
		"x_centroid_lambdabar",
		"y_centroid_lambdabar",
		"x_predicted_lambdabar",
		"y_predicted_lambdabar",
		)

TILT_SWEEP_HEADER = (
		"theta_rad",
		"phi_rad",
		"sigma",
		"z_lambdabar",
		"x_centroid_lambdabar",
		"y_centroid_lambdabar",
		"x_centroid_closed_lambdabar",
		"y_centroid_closed_lambdabar",
		"shift_lambdabar",
		"shift_closed_lambdabar",
		"Px_over_Pz",
		"Py_over_Pz",
		"Jx_over_Pz_lambdabar",
		"Jy_over_Pz_lambdabar",
		"Jz_over_Pz_lambdabar",
		"Jz_over_Pz_closed_lambdabar",
		"J_norm_over_Pz_lambdabar",
		"J_norm_over_Pz_closed_lambdabar",
		)

DENSITY_GRID_HEADER = (
		"z_lambdabar",
		"half_width_lambdabar",
		"points",
		"peak_intensity",
		"on_axis_intensity",
		"on_axis_over_peak",
		)

VERIFY_HEADER = ("check", "value", "tolerance", "passed")


class Check(NamedTuple):
	"""
	The outcome of one invariant check run by ``verify``.
	"""

	name: str

	#: The measured deviation, normalised so that it is compared directly against ``tolerance``.
	value: float

	tolerance: float

	@property
	def passed(self) -> bool:
		"""
		Whether :attr:`~.value` is finite and does not exceed :attr:`~.tolerance`.
		"""

		return math.isfinite(self.value) and self.value <= self.tolerance


def output_filename(config: RunConfig, suffix: str = ".csv") -> PathPlus:
	"""
	The file an experiment writes to, e.g. ``tilt_sweep.csv`` for ``tilt-sweep``.

	:param config:
	:param suffix:
	"""

	return config.output / f"{config.experiment.replace('-', '_')}{suffix}"


def _polarization(config: RunConfig, sigma: float) -> Union[PolarizationState, float]:
	# a configured Jones vector is passed through as is, otherwise the helicity alone
	return sigma if config.polarization is None else config.polarization


def run_moments(config: RunConfig) -> int:
	"""
	Integrate the momenta of the configured superposition and compare with the mode-space values.

	:param config:
	"""

	geom = config.geometry
	lambda_bar = geom.lambda_bar
	P_modespace = momentum_modespace(config.modes, geom)

	rows = []
	for sigma in config.sigmas:
		J_modespace = angular_momentum_modespace(config.modes, geom, sigma)

		for z in config.zs:
			logger.debug("moments: sigma=%g z=%g", sigma, z)
			moments = momenta_numeric(config.modes, _polarization(config, sigma), geom, z, config.quadrature)
			rows.append([
					sigma,
					z / lambda_bar,
					*moments.P,
					*(moments.J / lambda_bar),
					*P_modespace,
					*(J_modespace / lambda_bar),
					*(moments.centroid / lambda_bar),
					])

	write_csv(output_filename(config), MOMENTS_HEADER, rows)
	return 0


def run_centroid(config: RunConfig) -> int:
	"""
	Trace the intensity centroid along the configured planes and compare with the centroid theorem.

	:param config:
	"""

	geom = config.geometry
	lambda_bar = geom.lambda_bar
	sigma = config.sigmas[0]

	P = momentum_modespace(config.modes, geom)
	J = angular_momentum_modespace(config.modes, geom, sigma)
	pol = _polarization(config, sigma)
	trajectory = centroid_trajectory(config.modes, pol, geom, config.zs, config.quadrature)

	rows = []
	for z, (x_bar, y_bar) in zip(config.zs, trajectory):
		# <x> P_z = z P_x - J_y and <y> P_z = J_x + z P_y
		x_predicted = (z * P[0] - J[1]) / P[2]
		y_predicted = (J[0] + z * P[1]) / P[2]
		rows.append([
				z / lambda_bar,
				float(geom.spot_size(z)) / lambda_bar,
				x_bar / lambda_bar,
				y_bar / lambda_bar,
				x_predicted / lambda_bar,
				y_predicted / lambda_bar,
				])

	write_csv(output_filename(config), CENTROID_HEADER, rows)
	return 0


def _tilt_row(config: RunConfig, frame: TiltFrame, sigma: float, z: float) -> List[float]:
	geom = config.geometry
	lambda_bar = geom.lambda_bar

	moments = tilted_momenta_numeric(sigma, geom, frame, config.quadrature, z)
	P_ratio = moments.P / moments.P[2]
	J_ratio = moments.J / moments.P[2]
	_, J_closed = tilted_momenta_closed(sigma, frame, lambda_bar)

	tan_theta = math.tan(frame.theta)
	crossing = z * tan_theta * numpy.array([math.cos(frame.phi), math.sin(frame.phi)])
	shift = float(numpy.dot(moments.centroid - crossing, slice_direction(frame)))

	return [
			frame.theta,
			frame.phi,
			sigma,
			z / lambda_bar,
			*(moments.centroid / lambda_bar),
			*(tilted_centroid_closed(sigma, frame, z, geom) / lambda_bar),
			shift / lambda_bar,
			sigma / 2 * tan_theta,
			*P_ratio[:2],
			*(J_ratio / lambda_bar),
			J_closed[2] / lambda_bar,
			float(numpy.linalg.norm(J_ratio)) / lambda_bar,
			tilted_angular_momentum_norm(sigma, frame, lambda_bar) / lambda_bar,
			]


def run_tilt_sweep(config: RunConfig) -> int:
	"""
	Sweep the tilt of a fundamental Gaussian and tabulate its centroid shift and momenta.

	The configured superposition is not used; the tilted beam is always :math:`\\psi_{00}`.

	:param config:
	"""

	rows = []
	for frame in config.frames:
		for sigma in config.sigmas:
			for z in config.zs:
				logger.debug("tilt-sweep: theta=%g phi=%g sigma=%g z=%g", frame.theta, frame.phi, sigma, z)
				rows.append(_tilt_row(config, frame, sigma, z))

	write_csv(output_filename(config), TILT_SWEEP_HEADER, rows)
	return 0


def run_density_grid(config: RunConfig) -> int:
	"""
	Sample the intensity :math:`p_z` of the superposition on a square grid in the first configured plane.

	Writes a plain-text grid, a summary CSV and, unless disabled, a portable graymap.

	:param config:
	"""

	geom = config.geometry
	lambda_bar = geom.lambda_bar
	sigma = config.sigmas[0]
	z = config.zs[0]

	half_width = config.grid_extent * float(geom.spot_size(z))
	axis = numpy.linspace(-half_width, half_width, config.grid_points)
	x, y = numpy.meshgrid(axis, axis, indexing="ij")

	pol = _polarization(config, sigma)
	intensity = density_sample(config.modes, pol, geom, Point3(x, y, z)).p[2]
	on_axis = float(density_sample(config.modes, pol, geom, Point3(0.0, 0.0, z)).p[2])
	peak = float(intensity.max())

	write_grid_text(output_filename(config, ".txt"), axis / lambda_bar, axis / lambda_bar, intensity)
	if config.heatmap:
		write_pgm(output_filename(config, ".pgm"), intensity)

	row = [z / lambda_bar, half_width / lambda_bar, config.grid_points, peak, on_axis, on_axis / peak]
	write_csv(output_filename(config), DENSITY_GRID_HEADER, [row])
	return 0


def random_superposition(seed: int, max_index: int = 3) -> ModeSuperposition:
	"""
	A normalised superposition of all :math:`\\psi_{nm}` with :math:`n, m \\le` ``max_index``,
	with complex coefficients drawn from a seeded generator.

	:param seed:
	:param max_index:
	"""  # noqa: D400

	rng = numpy.random.default_rng(seed)
	size = (max_index + 1)**2
	values = rng.standard_normal(size) + 1j * rng.standard_normal(size)

	indices = [(n, m) for n in range(max_index + 1) for m in range(max_index + 1)]
	return ModeSuperposition(dict(zip(indices, (complex(v) for v in values)))).normalized()


def random_polarization(seed: int) -> PolarizationState:
	"""
	A Jones vector with complex normal components drawn from a seeded generator, then normalised.

	:param seed:
	"""

	rng = numpy.random.default_rng([seed, 1])
	alpha, beta = rng.standard_normal(2) + 1j * rng.standard_normal(2)
	norm = math.sqrt(abs(alpha)**2 + abs(beta)**2)
	return PolarizationState(complex(alpha) / norm, complex(beta) / norm)


def _max_abs(values: NDArray) -> float:
	return float(numpy.max(numpy.abs(values)))


def _verify_sigmas(config: RunConfig) -> List[float]:
	return sorted({*config.sigmas, -1.0, 1.0})


def _leading_order_tolerance(geom: BeamGeometry) -> float:
	# corrections to the leading-order tilted results grow with the angular spread
	return max(2e-2, 4 * geom.angular_spread)


def _orthonormality_check(geom: BeamGeometry, config: RunConfig, z: float) -> Check:
	indices = [(n, m) for n in range(4) for m in range(4)]

	def sampler(x: NDArray[numpy.float64], y: NDArray[numpy.float64], z: float) -> NDArray[numpy.complex128]:
		point = Point3(x, y, z)
		amplitudes = [mode_amplitude(n, m, point, geom) for n, m in indices]
		return numpy.stack([numpy.conj(a) * b for a in amplitudes for b in amplitudes])

	gram = numpy.asarray(integrate_plane(sampler, z, config.quadrature, beam_window(geom, z, config.quadrature)))
	deviation = _max_abs(gram.reshape(len(indices), len(indices)) - numpy.eye(len(indices)))
	return Check(f"orthonormality z={z:g}", deviation, EXACT_TOLERANCE)


def _sample_points(geom: BeamGeometry) -> Iterator[Point3]:
	L = geom.rayleigh_range
	for x, y, z in ((0.3, -0.7, 0.0), (-1.1, 0.4, 0.5), (0.8, 0.9, -1.2)):
		yield Point3(x * geom.w0, y * geom.w0, z * L)


def _local_checks(modes: ModeSuperposition, geom: BeamGeometry, label: str) -> Iterator[Check]:
	# sqrt(2/pi)/w0 is the peak of a normalised psi_00
	amplitude_scale = math.sqrt(2 / math.pi * modes.norm()) / geom.w0

	residual = 0.0
	gradient = 0.0
	orthogonal = 0.0
	expanded = 0.0
	poynting = 0.0

	for point in _sample_points(geom):
		f, f_x, f_y = superposition_amplitude_and_gradient(modes, point, geom)
		scale = abs(f) + amplitude_scale

		residual = max(residual, abs(paraxial_residual(modes, point, geom, step=2.5e-4)) * geom.w0**2 / scale)

		h = 2e-5 * geom.w0
		x, y, z = point
		fd_x = (
				superposition_amplitude_and_gradient(modes, Point3(x + h, y, z), geom)[0]
				- superposition_amplitude_and_gradient(modes, Point3(x - h, y, z), geom)[0]
				) / (2 * h)
		fd_y = (
				superposition_amplitude_and_gradient(modes, Point3(x, y + h, z), geom)[0]
				- superposition_amplitude_and_gradient(modes, Point3(x, y - h, z), geom)[0]
				) / (2 * h)
		gradient = max(gradient, (abs(fd_x - f_x) + abs(fd_y - f_y)) * geom.w0 / scale)

		for sigma in (-1.0, 0.0, 0.6, 1.0):
			p = momentum_density(f, f_x, f_y, sigma, geom.k)
			j = angular_momentum_density(point, p)
			r = numpy.array(point)
			p_scale = float(numpy.linalg.norm(p))
			orthogonal = max(orthogonal, abs(float(numpy.dot(r, j))) / (float(numpy.linalg.norm(r))**2 * p_scale))

			j_expanded = angular_momentum_density_expanded(f, f_x, f_y, sigma, point, geom.k)
			j_scale = float(numpy.linalg.norm(r)) * p_scale
			expanded = max(expanded, _max_abs(j_expanded - j) / j_scale)

		pol = PolarizationState.from_helicity(0.6)
		p = momentum_density(f, f_x, f_y, 0.6, geom.k)
		p_poynting = poynting_momentum(vector_fields(f, f_x, f_y, pol))
		poynting = max(poynting, _max_abs(p_poynting - p) / float(numpy.linalg.norm(p)))

	yield Check(f"paraxial equation {label}", residual, 1e-3)
	yield Check(f"gradient vs finite difference {label}", gradient, 1e-6)
	yield Check(f"r.j = 0 {label}", orthogonal, 1e-12)
	yield Check(f"expanded j vs r x p {label}", expanded, 1e-12)
	yield Check(f"E x B* vs p {label}", poynting, 1e-12)


def _helicity_only_check(modes: ModeSuperposition, geom: BeamGeometry) -> Check:
	# rotating the Jones vector by a real angle keeps the helicity
	base = PolarizationState.from_helicity(0.6)
	c, s = math.cos(0.7), math.sin(0.7)
	rotated = PolarizationState(c * base.alpha - s * base.beta, s * base.alpha + c * base.beta)

	deviation = 0.0
	for point in _sample_points(geom):
		first = density_sample(modes, base, geom, point)
		second = density_sample(modes, rotated, geom, point)
		scale = float(numpy.linalg.norm(first.p))
		deviation = max(deviation, _max_abs(first.p - second.p) / scale)

	return Check("density depends only on helicity", deviation, 1e-12)


def _modespace_checks(
		modes: ModeSuperposition,
		geom: BeamGeometry,
		config: RunConfig,
		label: str,
		pol: PolarizationState,
		) -> Iterator[Check]:
	norm = modes.norm()
	L = geom.rayleigh_range
	sigma = pol.helicity

	P = momentum_modespace(modes, geom)
	J = angular_momentum_modespace(modes, geom, sigma)
	P_scale = numpy.array([geom.angular_spread, geom.angular_spread, 1.0]) * norm
	J_scale = numpy.array([geom.w0, geom.w0, geom.lambda_bar]) * norm

	r1, r2 = parts_relations_residuals(modes, geom, 0.0, config.quadrature)
	yield Check(f"integration by parts {label}", max(r1 * geom.w0 / norm, r2 / norm), EXACT_TOLERANCE)

	yield Check(
			f"quadrature convergence {label}",
			momenta_convergence(modes, pol, geom, 0.0, config.quadrature),
			EXACT_TOLERANCE,
			)

	planes = {z: momenta_numeric(modes, pol, geom, z, config.quadrature) for z in (0.0, L, 3 * L)}
	for z, moments in planes.items():
		yield Check(f"P numeric vs mode space {label} z={z:g}", _max_abs((moments.P - P) / P_scale), EXACT_TOLERANCE)
		yield Check(f"J numeric vs mode space {label} z={z:g}", _max_abs((moments.J - J) / J_scale), EXACT_TOLERANCE)

		predicted = transverse_momentum_from_centroid(moments, P)
		yield Check(
				f"centroid theorem {label} z={z:g}",
				_max_abs((predicted - moments.J[:2]) / J_scale[:2]),
				EXACT_TOLERANCE,
				)

	near, far = planes[0.0], planes[3 * L]
	drift = max(_max_abs((far.P - near.P) / P_scale), _max_abs((far.J - near.J) / J_scale))
	yield Check(f"z-independence {label} z=0..{3 * L:g}", drift, 1e-7)

	yield Check(f"r.J_perp = 0 {label} z=0", _centroid_orthogonality(near), EXACT_TOLERANCE)

	# only the spin current depends on sigma, and it carries no transverse J
	J_left = momenta_numeric(modes, -1.0, geom, L, config.quadrature).J
	J_right = momenta_numeric(modes, 1.0, geom, L, config.quadrature).J
	yield Check(
			f"J_perp independent of sigma {label} z={L:g}",
			_max_abs((J_right[:2] - J_left[:2]) / J_scale[:2]),
			EXACT_TOLERANCE,
			)


def _centroid_orthogonality(moments: BeamMoments) -> float:
	# |<r> . J_perp| / (|<r>| |J_perp|), or 0 when either vanishes
	J_perp = moments.J[:2]
	scale = float(numpy.linalg.norm(moments.centroid) * numpy.linalg.norm(J_perp))
	dot = abs(float(numpy.dot(moments.centroid, J_perp)))
	return dot / scale if scale else dot


def _angular_momentum_checks(geom: BeamGeometry, config: RunConfig) -> Iterator[Check]:
	for sigma in _verify_sigmas(config):
		ratio = spin_flux_ratio(random_superposition(VERIFY_SEEDS[0]), geom, sigma)
		yield Check(f"spin flux ratio sigma={sigma:g}", abs(ratio - geom.lambda_bar * sigma), 1e-12)

		for handedness in (1, -1):
			modes = laguerre_gauss_10(handedness)
			expected = geom.lambda_bar * (sigma + handedness)
			closed = angular_momentum_modespace(modes, geom, sigma)[2] / modes.norm()
			moments = momenta_numeric(modes, sigma, geom, 0.0, config.quadrature)
			numeric = moments.J[2] / moments.P[2]
			yield Check(
					f"LG J_z l={handedness:+d} sigma={sigma:g}",
					max(abs(closed - expected), abs(numeric - expected)) / geom.lambda_bar,
					EXACT_TOLERANCE,
					)


def _rotation_checks(frame: TiltFrame) -> Iterator[Check]:
	label = f"theta={frame.theta:g} phi={frame.phi:g}"
	R = rotation_matrix(frame)

	yield Check(f"rotation series {label}", _max_abs(rotation_matrix_series(frame) - R.matrix), 1e-12)
	z_hat = numpy.array([0.0, 0.0, 1.0])
	yield Check(f"rotation maps z to beam axis {label}", _max_abs(R.apply(z_hat) - frame.beam_axis), 1e-12)


def _tilt_checks(geom: BeamGeometry, config: RunConfig, frame: TiltFrame) -> Iterator[Check]:
	label = f"theta={frame.theta:g} phi={frame.phi:g}"
	tolerance = _leading_order_tolerance(geom)
	lambda_bar = geom.lambda_bar
	tan_theta = math.tan(frame.theta)

	for sigma in _verify_sigmas(config):
		moments = tilted_momenta_numeric(sigma, geom, frame, config.quadrature)
		P_closed, J_closed = tilted_momenta_closed(sigma, frame, lambda_bar)
		P_ratio = moments.P / moments.P[2]
		J_ratio = moments.J / moments.P[2]
		shift_scale = lambda_bar * max(tan_theta, 1e-3) / 2

		centroid_closed = tilted_centroid_closed(sigma, frame, 0.0, geom)
		yield Check(
				f"spin Hall shift {label} sigma={sigma:g}",
				_max_abs(moments.centroid - centroid_closed) / shift_scale,
				tolerance,
				)
		yield Check(
				f"tilted P/P_z {label} sigma={sigma:g}",
				_max_abs(P_ratio - P_closed) / max(1.0, tan_theta),
				tolerance,
				)

		J_scale = lambda_bar / math.cos(frame.theta)**2
		yield Check(f"tilted J/P_z {label} sigma={sigma:g}", _max_abs(J_ratio - J_closed) / J_scale, tolerance)

		norm = float(numpy.linalg.norm(J_ratio))
		norm_closed = tilted_angular_momentum_norm(sigma, frame, lambda_bar)
		yield Check(f"tilted |J|/P_z {label} sigma={sigma:g}", abs(norm - norm_closed) / J_scale, tolerance)

		if sigma and frame.theta:
			estimate = tilted_spin_estimate(sigma, frame, lambda_bar)
			transverse = float(numpy.hypot(J_ratio[0], J_ratio[1])) * math.copysign(1, sigma)
			yield Check(
					f"rigorous J_perp is half the single-ray estimate {label} sigma={sigma:g}",
					abs(transverse / estimate.J_perp - 0.5),
					tolerance,
					)

		yield Check(
				f"spin Hall shift . J_perp = 0 {label} sigma={sigma:g}",
				_centroid_orthogonality(moments),
				EXACT_TOLERANCE,
				)
		yield Check(
				f"straight line {label} sigma={sigma:g}",
				_straight_line_deviation(sigma, geom, config, frame, moments),
				1e-4,
				)

		t = numpy.linspace(-2, 2, 41) * geom.w0
		yield Check(
				f"slice profile {label} sigma={sigma:g}",
				_max_abs(slice_numeric(sigma, geom, frame, t) - slice_profile(sigma, geom, frame, t)),
				geom.angular_spread**2,
				)


def _straight_line_deviation(
		sigma: float,
		geom: BeamGeometry,
		config: RunConfig,
		frame: TiltFrame,
		waist: BeamMoments,
		) -> float:
	# the centroid at z = +-L/4 should lie on the line through the z = 0 centroid with slope P_perp / P_z
	slope = waist.P[:2] / waist.P[2]
	scale = max(float(numpy.linalg.norm(slope)), geom.angular_spread)

	deviation = 0.0
	for z in (-geom.rayleigh_range / 4, geom.rayleigh_range / 4):
		moments = tilted_momenta_numeric(sigma, geom, frame, config.quadrature, z)
		offset = moments.centroid - waist.centroid - z * slope
		deviation = max(deviation, float(numpy.linalg.norm(offset)) / (abs(z) * scale))

	return deviation


def verification_checks(config: RunConfig) -> List[Check]:
	"""
	Run the invariant suite for the configured geometry, helicities, tilt frames and quadrature rule.

	:param config:
	"""

	geom = config.geometry
	checks: List[Check] = []

	for z in (0.0, geom.rayleigh_range / 2, 3 * geom.rayleigh_range):
		checks.append(_orthonormality_check(geom, config, z))

	for seed in VERIFY_SEEDS:
		modes = random_superposition(seed)
		label = f"seed={seed}"
		logger.debug("verify: superposition %s", label)
		checks.extend(_local_checks(modes, geom, label))
		checks.extend(_modespace_checks(modes, geom, config, label, random_polarization(seed)))

	checks.append(_helicity_only_check(random_superposition(VERIFY_SEEDS[0]), geom))
	checks.extend(_angular_momentum_checks(geom, config))

	for frame in config.frames:
		logger.debug("verify: tilt theta=%g phi=%g", frame.theta, frame.phi)
		checks.extend(_rotation_checks(frame))
		checks.extend(_tilt_checks(geom, config, frame))

	return checks


def run_verify(config: RunConfig) -> int:
	"""
	Run :func:`~.verification_checks`, print a PASS/FAIL table and write it as CSV.

	:param config:

	:returns: ``0`` if every check passed, otherwise ``1``.
	"""

	checks = verification_checks(config)
	width = max(len(check.name) for check in checks)

	for check in checks:
		status = "PASS" if check.passed else "FAIL"
		print(f"{check.name:<{width}}  {check.value:.3e} <= {check.tolerance:.1e}  {status}")

	write_csv(
			output_filename(config),
			VERIFY_HEADER,
			[[check.name, check.value, check.tolerance, check.passed] for check in checks],
			)

	failed = sum(not check.passed for check in checks)
	if failed:
		print(f"{failed} of {len(checks)} checks failed", file=sys.stderr)
		return 1

	print(f"all {len(checks)} checks passed")
	return 0


#: Maps each experiment name to the function running it.
RUNNERS: Dict[str, Callable[[RunConfig], int]] = {
		"moments": run_moments,
		"centroid": run_centroid,
		"tilt-sweep": run_tilt_sweep,
		"density-grid": run_density_grid,
		"verify": run_verify,
		}


def run(config: RunConfig) -> int:
	"""
	Run the experiment named by ``config.experiment``, writing its output files into ``config.output``.

	:param config:

	:returns: The exit status.
	"""

	logger.info("running %s, writing to %s", config.experiment, config.output)
	return RUNNERS[config.experiment](config)
