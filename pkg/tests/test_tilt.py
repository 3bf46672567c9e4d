# stdlib
import math

# 3rd party
import numpy
import pytest
from scipy.linalg import expm

# this package
from paraxial_momenta.densities import momentum_density
from paraxial_momenta.exceptions import InvariantViolation
from paraxial_momenta.modes import BeamGeometry, ModeSuperposition, Point3, superposition_amplitude_and_gradient
from paraxial_momenta.quadrature import QuadratureSpec
from paraxial_momenta.tilt import (
		RotationMatrix,
		TiltFrame,
		beam_frame_density,
		rotated_momentum_density,
		rotation_matrix,
		rotation_matrix_series,
		slice_direction,
		slice_numeric,
		slice_profile,
		so3_generators,
		tilted_angular_momentum_norm,
		tilted_centroid_closed,
		tilted_centroid_numeric,
		tilted_momenta_closed,
		tilted_momenta_numeric,
		tilted_spin_estimate,
		tilted_window
		)

_THETAS = [0.1, 0.3, 0.6]


def test_frame_validation():
	assert TiltFrame(0.0).phi == 0.0
	assert TiltFrame(0.3, 2 * math.pi + 0.5).phi == pytest.approx(0.5)
	assert TiltFrame(0.3, -math.pi / 2).phi == pytest.approx(1.5 * math.pi)

	with pytest.raises(InvariantViolation, match="frame.theta"):
		TiltFrame(1.4)
	with pytest.raises(InvariantViolation, match="frame.theta"):
		TiltFrame(-0.1)
	with pytest.raises(InvariantViolation, match="frame.theta_max"):
		TiltFrame(0.1, theta_max=2.0)
	with pytest.raises(InvariantViolation, match="frame.phi"):
		TiltFrame(0.1, math.nan)

	assert TiltFrame(1.5, theta_max=1.55).theta == 1.5


def test_generators():
	L_1, L_2, L_3 = so3_generators()

	for L in (L_1, L_2, L_3):
		numpy.testing.assert_array_equal(L, -L.T)

	numpy.testing.assert_array_equal(L_1 @ L_2 - L_2 @ L_1, L_3)
	numpy.testing.assert_array_equal(L_2 @ L_3 - L_3 @ L_2, L_1)
	numpy.testing.assert_array_equal(L_3 @ L_1 - L_1 @ L_3, L_2)


@pytest.mark.parametrize("theta", [0.0, *_THETAS, 1.3])
@pytest.mark.parametrize("phi", [0.0, math.pi / 2, 2.1, 5.0])
def test_rotation_matrix(theta: float, phi: float):
	frame = TiltFrame(theta, phi)
	R = rotation_matrix(frame).matrix

	numpy.testing.assert_allclose(R.T @ R, numpy.eye(3), rtol=0, atol=1e-12)
	assert numpy.linalg.det(R) == pytest.approx(1.0, abs=1e-12)
	numpy.testing.assert_allclose(R @ [0.0, 0.0, 1.0], frame.beam_axis, rtol=0, atol=1e-12)

	# the rotation axis is left fixed
	axis = numpy.array([-math.sin(phi), math.cos(phi), 0.0])
	numpy.testing.assert_allclose(R @ axis, axis, rtol=0, atol=1e-12)

	L_1, L_2, _ = so3_generators()
	generator = theta * (-math.sin(phi) * L_1 + math.cos(phi) * L_2)
	numpy.testing.assert_allclose(R, expm(generator), rtol=0, atol=1e-12)
	numpy.testing.assert_allclose(rotation_matrix_series(frame), R, rtol=0, atol=1e-12)


@pytest.mark.parametrize("theta", [0.1, 0.2, 0.3])
def test_short_series(theta: float):
	frame = TiltFrame(theta, 0.7)
	numpy.testing.assert_allclose(rotation_matrix_series(frame, terms=12), rotation_matrix(frame).matrix, atol=1e-12)


def test_rotation_matrix_validation():
	with pytest.raises(InvariantViolation, match="rotation.shape"):
		RotationMatrix(numpy.eye(2))
	with pytest.raises(InvariantViolation, match="rotation.orthogonal"):
		RotationMatrix(2 * numpy.eye(3))
	with pytest.raises(InvariantViolation, match="rotation.proper"):
		RotationMatrix(numpy.diag([1.0, 1.0, -1.0]))


def test_rotation_apply_inverse():
	R = rotation_matrix(TiltFrame(0.4, 1.0))
	vectors = numpy.arange(12.0).reshape(3, 2, 2)
	numpy.testing.assert_allclose(R.apply_inverse(R.apply(vectors)), vectors, rtol=1e-14, atol=1e-14)


@pytest.mark.parametrize("sigma", [-1.0, 0.4, 1.0])
@pytest.mark.parametrize(
		"point",
		[(100.0, -50.0, 0.0), (-30.0, 250.0, 15000.0), (0.0, 0.0, -40000.0), (300.0, 300.0, 5.0)],
		)
def test_beam_frame_density_closed_form(geometry: BeamGeometry, sigma: float, point):
	where = Point3(*point)
	f, f_x, f_y = superposition_amplitude_and_gradient(ModeSuperposition({(0, 0): 1.0}), where, geometry)
	expected = momentum_density(f, f_x, f_y, sigma, geometry.k)

	numpy.testing.assert_allclose(beam_frame_density(sigma, geometry, where), expected, rtol=1e-10, atol=1e-25)


def test_no_tilt_is_beam_frame(geometry: BeamGeometry):
	point = Point3(40.0, -90.0, 0.0)
	numpy.testing.assert_allclose(
			rotated_momentum_density(1.0, geometry, TiltFrame(0.0, 1.2), point),
			beam_frame_density(1.0, geometry, point),
			rtol=1e-10,
			)


def test_rotated_density_is_covariant(geometry: BeamGeometry):
	frame = TiltFrame(0.5, 0.8)
	R = rotation_matrix(frame)

	beam_point = numpy.array([60.0, -20.0, 300.0])
	observed = R.apply(beam_point)

	p = rotated_momentum_density(-1.0, geometry, frame, Point3(*observed))
	numpy.testing.assert_allclose(p, R.apply(beam_frame_density(-1.0, geometry, Point3(*beam_point))), rtol=1e-10)


def test_rotated_density_helicity_range(geometry: BeamGeometry):
	with pytest.raises(InvariantViolation, match="polarization.helicity"):
		rotated_momentum_density(1.2, geometry, TiltFrame(0.1), Point3(0.0, 0.0, 0.0))


def test_tilted_window(geometry: BeamGeometry):
	spec = QuadratureSpec()
	frame = TiltFrame(0.3, math.pi / 2)

	window = tilted_window(geometry, frame, 0.0, spec)
	assert window.centre_x == 0.0
	assert window.centre_y == 0.0
	assert window.half_width == pytest.approx(8 * 200 / math.cos(0.3))

	window = tilted_window(geometry, frame, 1000.0, spec)
	assert window.centre_x == pytest.approx(0.0, abs=1e-12)
	assert window.centre_y == pytest.approx(1000.0 * math.tan(0.3))


@pytest.mark.parametrize("theta", _THETAS)
@pytest.mark.parametrize("sigma", [-1.0, 1.0])
def test_spin_hall_shift(geometry: BeamGeometry, spec: QuadratureSpec, theta: float, sigma: float):
	frame = TiltFrame(theta)
	x_bar, y_bar = tilted_centroid_numeric(sigma, geometry, frame, 0.0, spec)

	assert y_bar == pytest.approx(geometry.lambda_bar * sigma / 2 * math.tan(theta), rel=1e-3)
	assert x_bar == pytest.approx(0.0, abs=1e-6)


@pytest.mark.parametrize("phi", [math.pi / 2, 2.0])
def test_spin_hall_shift_is_perpendicular_to_plane_of_incidence(
		geometry: BeamGeometry,
		spec: QuadratureSpec,
		phi: float,
		):
	frame = TiltFrame(0.3, phi)
	numeric = tilted_centroid_numeric(1.0, geometry, frame, 0.0, spec)
	closed = tilted_centroid_closed(1.0, frame, 0.0, geometry)

	numpy.testing.assert_allclose(numeric, closed, rtol=0, atol=1e-3 * abs(closed).max())
	assert numpy.dot(closed, slice_direction(frame)) == pytest.approx(math.tan(0.3) / 2)


def test_shift_vanishes_for_linear_polarization(geometry: BeamGeometry, spec: QuadratureSpec):
	numpy.testing.assert_allclose(
			tilted_centroid_numeric(0.0, geometry, TiltFrame(0.6), 0.0, spec),
			[0.0, 0.0],
			atol=1e-9 * geometry.w0,
			)


def test_centroid_away_from_waist(geometry: BeamGeometry, spec: QuadratureSpec):
	frame = TiltFrame(0.3)
	z = 2000.0

	numeric = tilted_centroid_numeric(1.0, geometry, frame, z, spec)
	closed = tilted_centroid_closed(1.0, frame, z, geometry)

	# the footprint drifts along the plane of incidence with the beam axis
	assert numeric[0] == pytest.approx(closed[0], rel=1e-3)


@pytest.mark.parametrize("theta", _THETAS)
@pytest.mark.parametrize("phi", [0.0, 1.0, math.pi / 2])
@pytest.mark.parametrize("z_over_L", [-0.25, 0.0, 0.25])
@pytest.mark.parametrize("sigma", [-1.0, 0.0, 1.0])
def test_centroid_grid(
		geometry: BeamGeometry,
		spec: QuadratureSpec,
		theta: float,
		phi: float,
		z_over_L: float,
		sigma: float,
		):
	frame = TiltFrame(theta, phi)
	z = z_over_L * geometry.rayleigh_range

	numeric = tilted_centroid_numeric(sigma, geometry, frame, z, spec)
	closed = tilted_centroid_closed(sigma, frame, z, geometry)

	tolerance = numpy.maximum(0.01 * numpy.abs(closed), 5 * geometry.angular_spread**2 * geometry.lambda_bar)
	assert (numpy.abs(numeric - closed) <= tolerance).all()


@pytest.mark.parametrize("theta", _THETAS)
@pytest.mark.parametrize("phi", [0.0, 1.0])
@pytest.mark.parametrize("sigma", [-1.0, 1.0])
def test_centroid_moves_in_straight_line(
		geometry: BeamGeometry,
		spec: QuadratureSpec,
		theta: float,
		phi: float,
		sigma: float,
		):
	frame = TiltFrame(theta, phi)
	quarter = geometry.rayleigh_range / 4

	waist = tilted_momenta_numeric(sigma, geometry, frame, spec)
	slope = waist.P[:2] / waist.P[2]
	assert numpy.linalg.norm(slope) == pytest.approx(math.tan(theta), rel=1e-3)

	for z in (-quarter, quarter):
		centroid = tilted_centroid_numeric(sigma, geometry, frame, z, spec)
		offset = centroid - waist.centroid - z * slope
		assert numpy.linalg.norm(offset) <= 1e-4 * abs(z) * math.tan(theta)


@pytest.mark.parametrize("theta", _THETAS)
@pytest.mark.parametrize("phi", [0.0, 1.0, 4.0])
@pytest.mark.parametrize("sigma", [-1.0, 1.0])
def test_shift_perpendicular_to_angular_momentum(
		geometry: BeamGeometry,
		spec: QuadratureSpec,
		theta: float,
		phi: float,
		sigma: float,
		):
	moments = tilted_momenta_numeric(sigma, geometry, TiltFrame(theta, phi), spec)
	shift, J_perp = moments.centroid, moments.J[:2]

	assert numpy.linalg.norm(shift) > 0.4 * math.tan(theta)
	cosine = float(numpy.dot(shift, J_perp)) / (numpy.linalg.norm(shift) * numpy.linalg.norm(J_perp))
	assert abs(cosine) <= 1e-6

	# J_perp / P_z is the shift turned by a right angle
	numpy.testing.assert_allclose(
			J_perp / moments.P[2],
			[shift[1], -shift[0]],
			rtol=1e-9,
			atol=1e-12 * geometry.w0,
			)


@pytest.mark.parametrize("theta", _THETAS)
@pytest.mark.parametrize("phi", [0.0, math.pi / 2])
@pytest.mark.parametrize("sigma", [-1.0, 1.0])
def test_tilted_momenta(geometry: BeamGeometry, spec: QuadratureSpec, theta: float, phi: float, sigma: float):
	frame = TiltFrame(theta, phi)
	moments = tilted_momenta_numeric(sigma, geometry, frame, spec)
	P_closed, J_closed = tilted_momenta_closed(sigma, frame)

	numpy.testing.assert_allclose(moments.P / moments.P[2], P_closed, rtol=0, atol=1e-3 * math.tan(theta))

	J_ratio = moments.J / moments.P[2]
	numpy.testing.assert_allclose(J_ratio, J_closed, rtol=0, atol=1e-3 / math.cos(theta)**2)

	norm = tilted_angular_momentum_norm(sigma, frame)
	assert numpy.linalg.norm(J_ratio) == pytest.approx(norm, rel=1e-3)


def test_angular_momentum_norm_not_conserved():
	frame = TiltFrame(0.6)
	norm = tilted_angular_momentum_norm(1.0, frame)

	assert norm > 1.0
	assert tilted_angular_momentum_norm(1.0, TiltFrame(0.0)) == 1.0
	assert tilted_angular_momentum_norm(-1.0, frame) == norm

	_, J = tilted_momenta_closed(1.0, frame)
	assert numpy.linalg.norm(J) == pytest.approx(norm, rel=1e-14)


@pytest.mark.parametrize("theta", _THETAS)
def test_single_ray_estimate_is_twice_the_transverse_result(theta: float):
	frame = TiltFrame(theta, 1.0)
	estimate = tilted_spin_estimate(1.0, frame)
	_, J = tilted_momenta_closed(1.0, frame)

	assert estimate.j_z == pytest.approx(math.cos(theta))
	assert estimate.j_perp == pytest.approx(math.sin(theta))
	assert math.hypot(J[0], J[1]) == pytest.approx(estimate.J_perp / 2)


@pytest.mark.parametrize("theta", _THETAS)
@pytest.mark.parametrize("phi", [0.0, math.pi / 2, 4.0])
@pytest.mark.parametrize("sigma", [-1.0, 1.0])
def test_slice_profile(geometry: BeamGeometry, theta: float, phi: float, sigma: float):
	frame = TiltFrame(theta, phi)
	t = numpy.linspace(-2, 2, 41) * geometry.w0

	numeric = slice_numeric(sigma, geometry, frame, t)
	numpy.testing.assert_allclose(numeric, slice_profile(sigma, geometry, frame, t), rtol=1e-10, atol=1e-14)


def test_slice_profile_is_asymmetric(geometry: BeamGeometry):
	frame = TiltFrame(0.6)
	t = numpy.array([-geometry.w0 / 2, geometry.w0 / 2])

	left, right = slice_profile(1.0, geometry, frame, t)
	assert right > left

	left, right = slice_profile(-1.0, geometry, frame, t)
	assert right < left

	numpy.testing.assert_allclose(slice_direction(TiltFrame(0.2)), [0.0, 1.0], atol=1e-16)
	numpy.testing.assert_allclose(slice_direction(TiltFrame(0.2, math.pi / 2)), [-1.0, 0.0], atol=1e-16)
