#!/usr/bin/env python3
#
#  modes.py
"""
Hermite–Gaussian mode basis, beam geometry and polarization.

All lengths are measured in units of the reduced wavelength :math:`\\bar{\\lambda} = 1/k`
unless a different wavenumber is given to :class:`~.BeamGeometry`.
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
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, NamedTuple, Tuple, Union

# 3rd party
import numpy
from numpy.typing import NDArray

# this package
from paraxial_momenta.exceptions import InvariantViolation

__all__ = [
		"BeamGeometry",
		"Point3",
		"PolarizationState",
		"ModeSuperposition",
		"MAX_HERMITE_ORDER",
		"DEFAULT_MAX_ORDER",
		"hermite_eval",
		"mode_amplitude",
		"mode_transverse_gradient",
		"superposition_amplitude_and_gradient",
		"helicity",
		"paraxial_residual",
		"laguerre_gauss_10",
		"displaced_gaussian",
		"tilted_gaussian",
		]

#: Highest Hermite order the recurrence is trusted for.
MAX_HERMITE_ORDER = 64

#: Default cutoff :math:`N` for the mode indices of a :class:`~.ModeSuperposition`.
DEFAULT_MAX_ORDER = 8

Real = Union[float, NDArray[numpy.float64]]
Complex = Union[complex, NDArray[numpy.complex128]]


class Point3(NamedTuple):
	"""
	A point (or a grid of points, when the components are arrays) in the observation frame.
	"""

	x: Real
	y: Real
	z: Real

	@classmethod
	def checked(cls, x: Real, y: Real, z: Real) -> "Point3":
		"""
		Construct a :class:`~.Point3`, rejecting non-finite coordinates.

		:param x:
		:param y:
		:param z:
		"""

		for name, value in zip("xyz", (x, y, z)):
			if not numpy.all(numpy.isfinite(value)):
				raise InvariantViolation("point.finite", f"coordinate {name} is not finite")

		return cls(x, y, z)


@dataclass(frozen=True)
class BeamGeometry:
	"""
	Waist, wavenumber and the length scales derived from them.

	:param w0: Waist radius.
	:param k: Wavenumber. The internal unit system fixes this to 1.
	:param max_angular_spread: Upper bound on :attr:`~.angular_spread` for the paraxial approximation to hold.
		Use :py:data:`math.inf` to disable the check.
	"""

	w0: float
	k: float = 1.0
	max_angular_spread: float = 0.2

	def __post_init__(self) -> None:
		if not (math.isfinite(self.w0) and self.w0 > 0):
			raise InvariantViolation("geometry.w0", f"waist must be positive and finite, got {self.w0!r}")
		if not (math.isfinite(self.k) and self.k > 0):
			raise InvariantViolation("geometry.k", f"wavenumber must be positive and finite, got {self.k!r}")
		if self.angular_spread >= self.max_angular_spread:
			raise InvariantViolation(
					"geometry.paraxial",
					f"angular spread {self.angular_spread:g} is not below {self.max_angular_spread:g}; "
					"increase k*w0",
					)

	@classmethod
	def from_kw0(cls, kw0: float, k: float = 1.0, max_angular_spread: float = 0.2) -> "BeamGeometry":
		"""
		Construct a geometry from the dimensionless product :math:`k w_0`.

		:param kw0:
		:param k:
		:param max_angular_spread:
		"""

		return cls(w0=kw0 / k, k=k, max_angular_spread=max_angular_spread)

	@property
	def rayleigh_range(self) -> float:
		"""
		The Rayleigh range :math:`L = k w_0^2 / 2`.
		"""

		return self.k * self.w0 * self.w0 / 2

	@property
	def lambda_bar(self) -> float:
		"""
		The reduced wavelength :math:`1/k`.
		"""

		return 1 / self.k

	@property
	def angular_spread(self) -> float:
		"""
		The far-field divergence :math:`\\theta_0 = 2 / (k w_0)`.
		"""

		return 2 / (self.k * self.w0)

	def spot_size(self, z: Real) -> Real:
		"""
		The spot size :math:`w(z)` at distance ``z`` from the waist.

		:param z:
		"""

		return self.w0 * numpy.sqrt(1 + (numpy.asarray(z) / self.rayleigh_range)**2)


@dataclass(frozen=True)
class PolarizationState:
	"""
	Transverse Jones pair :math:`(\\alpha, \\beta)` of the polarization vector
	:math:`\\hat{u} = \\alpha\\hat{x} + \\beta\\hat{y}`.

	:param alpha:
	:param beta:
	"""  # noqa: D400

	alpha: complex
	beta: complex

	def __post_init__(self) -> None:
		object.__setattr__(self, "alpha", complex(self.alpha))
		object.__setattr__(self, "beta", complex(self.beta))

		norm = abs(self.alpha)**2 + abs(self.beta)**2
		if abs(norm - 1) > 1e-12:
			raise InvariantViolation("polarization.normalized", f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

	@classmethod
	def linear(cls, angle: float = 0.0) -> "PolarizationState":
		"""
		Linear polarization at ``angle`` radians from the x axis.

		:param angle:
		"""

		return cls(math.cos(angle), math.sin(angle))

	@classmethod
	def circular(cls, handedness: int = 1) -> "PolarizationState":
		"""
		Circular polarization with helicity ``handedness`` (``+1`` or ``-1``).

		:param handedness:
		"""

		if handedness not in {1, -1}:
			raise InvariantViolation("polarization.handedness", f"expected +1 or -1, got {handedness!r}")

		return cls(1 / math.sqrt(2), handedness * 1j / math.sqrt(2))

	@classmethod
	def from_helicity(cls, sigma: float) -> "PolarizationState":
		"""
		An elliptical polarization with the requested helicity.

		:param sigma: The helicity, in :math:`[-1, 1]`.
		"""

		if not -1 <= sigma <= 1:
			raise InvariantViolation("polarization.helicity", f"sigma must lie in [-1, 1], got {sigma!r}")

		chi = math.asin(sigma) / 2
		return cls(math.cos(chi), 1j * math.sin(chi))

	@property
	def helicity(self) -> float:
		"""
		The helicity :math:`\\sigma`. See :func:`~.helicity`.
		"""

		return helicity(self)


def helicity(pol: PolarizationState) -> float:
	r"""
	Returns the helicity :math:`\sigma = i(\alpha\beta^* - \alpha^*\beta)` of ``pol``.

	:param pol:

	:raises InvariantViolation: If ``pol`` is not normalised.
	"""

	norm = abs(pol.alpha)**2 + abs(pol.beta)**2
	if abs(norm - 1) > 1e-12:
		raise InvariantViolation("polarization.normalized", f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

	sigma = 1j * (pol.alpha * pol.beta.conjugate() - pol.alpha.conjugate() * pol.beta)
	assert abs(sigma.imag) < 1e-14, sigma
	return sigma.real


@dataclass(frozen=True)
class ModeSuperposition:
	"""
	Sparse expansion :math:`f = \\sum f_{nm} \\psi_{nm}` over the Hermite–Gaussian basis.

	Coefficients are stored in n-major, m-minor order, which is also the iteration order.

	:param coefficients: Mapping of ``(n, m)`` to the complex coefficient :math:`f_{nm}`.
	:param max_order: The cutoff :math:`N` for both indices.
	"""

	coefficients: Mapping[Tuple[int, int], complex]
	max_order: int = DEFAULT_MAX_ORDER
	_items: Tuple[Tuple[Tuple[int, int], complex], ...] = field(init=False, repr=False, compare=False)

	def __post_init__(self) -> None:
		if not 0 <= self.max_order <= MAX_HERMITE_ORDER:
			raise InvariantViolation(
					"superposition.max_order",
					f"max_order must lie in [0, {MAX_HERMITE_ORDER}], got {self.max_order!r}",
					)

		if not self.coefficients:
			raise InvariantViolation("superposition.nonempty", "a superposition needs at least one mode")

		items: Dict[Tuple[int, int], complex] = {}
		for (n, m), value in self.coefficients.items():
			if int(n) != n or int(m) != m or n < 0 or m < 0:
				raise InvariantViolation("superposition.indices", f"invalid mode index ({n!r}, {m!r})")
			if n > self.max_order or m > self.max_order:
				raise InvariantViolation(
						"superposition.indices",
						f"mode ({n}, {m}) exceeds max_order {self.max_order}",
						)
			items[(int(n), int(m))] = complex(value)

		ordered = tuple(sorted(items.items()))
		object.__setattr__(self, "coefficients", dict(ordered))
		object.__setattr__(self, "_items", ordered)

		if self.norm() <= 0:
			raise InvariantViolation("superposition.norm", "sum of |f_nm|^2 must be positive")

	def __iter__(self) -> Iterator[Tuple[Tuple[int, int], complex]]:
		return iter(self._items)

	def __len__(self) -> int:
		return len(self._items)

	def coefficient(self, n: int, m: int) -> complex:
		"""
		Returns :math:`f_{nm}`, or zero for an unpopulated mode.

		:param n:
		:param m:
		"""

		return self.coefficients.get((n, m), 0j)

	def norm(self) -> float:
		"""
		Returns :math:`\\sum |f_{nm}|^2`.
		"""

		return math.fsum(abs(value)**2 for _, value in self._items)

	def normalized(self) -> "ModeSuperposition":
		"""
		Returns a copy scaled so that :math:`\\sum |f_{nm}|^2 = 1`.
		"""

		scale = 1 / math.sqrt(self.norm())
		return ModeSuperposition({key: value * scale for key, value in self._items}, max_order=self.max_order)

	@property
	def highest_order(self) -> int:
		"""
		The largest index present in the superposition.
		"""

		return max(max(n, m) for (n, m), _ in self._items)


def hermite_eval(n: int, u: Real) -> Real:
	"""
	Evaluate the physicists' Hermite polynomial :math:`H_n(u)`.

	Uses the three-term recurrence :math:`H_{n+1} = 2u H_n - 2n H_{n-1}`.

	:param n: The degree, at most :py:data:`~.MAX_HERMITE_ORDER`.
	:param u: Scalar or array argument.
	"""

	return _hermite_table(n, u)[n]


def _hermite_table(n_max: int, u: Real) -> List[Real]:
	if int(n_max) != n_max or n_max < 0:
		raise InvariantViolation("hermite.order", f"degree must be a non-negative integer, got {n_max!r}")
	if n_max > MAX_HERMITE_ORDER:
		raise InvariantViolation("hermite.order", f"degree {n_max} exceeds the cutoff {MAX_HERMITE_ORDER}")

	u = numpy.asarray(u, dtype=numpy.float64)
	table: List[Real] = [numpy.ones_like(u)]
	if n_max >= 1:
		table.append(2 * u)

	for n in range(1, n_max):
		table.append(2 * u * table[n] - 2 * n * table[n - 1])

	if not u.shape:
		return [float(h) for h in table]

	return table


def _log_normalization(n: int, m: int) -> float:
	# log of sqrt(2^(1-n-m) / (pi n! m!)), without the 1/w(z) factor
	return 0.5 * ((1 - n - m) * math.log(2) - math.log(math.pi) - math.lgamma(n + 1) - math.lgamma(m + 1))


class _Envelope(NamedTuple):
	# Factors of psi_nm shared by every mode at one set of points.
	u: Real
	v: Real
	inv_w: Real
	gaussian: Complex
	gouy: Complex
	dlog_x: Complex
	dlog_y: Complex


def _envelope(point: Point3, geom: BeamGeometry) -> _Envelope:
	x = numpy.asarray(point.x, dtype=numpy.float64)
	y = numpy.asarray(point.y, dtype=numpy.float64)
	z = numpy.asarray(point.z, dtype=numpy.float64)
	k = geom.k
	L = geom.rayleigh_range

	w = geom.spot_size(z)
	q = z - 1j * L

	return _Envelope(
			u=numpy.sqrt(2) * x / w,
			v=numpy.sqrt(2) * y / w,
			inv_w=1 / w,
			gaussian=numpy.exp(0.5j * k * (x * x + y * y) / q),
			gouy=numpy.arctan(z / L),
			dlog_x=1j * k * x / q,
			dlog_y=1j * k * y / q,
			)


def _check_order(n: int, m: int) -> None:
	for index in (n, m):
		if int(index) != index or index < 0 or index > MAX_HERMITE_ORDER:
			raise InvariantViolation("mode.order", f"mode index {index!r} outside [0, {MAX_HERMITE_ORDER}]")


def mode_amplitude(n: int, m: int, point: Point3, geom: BeamGeometry) -> Complex:
	r"""
	Evaluate the Hermite–Gaussian mode :math:`\psi_{nm}` at ``point``.

	.. math::

		\psi_{nm} = \sqrt{\frac{2^{1-n-m}}{\pi w^2 n! m!}} H_n\!\left(\frac{\sqrt{2}x}{w}\right)
			H_m\!\left(\frac{\sqrt{2}y}{w}\right) e^{\frac{ik}{2}\frac{x^2+y^2}{z-iL}} e^{-i(n+m+1)\arctan(z/L)}

	:param n: Order along x.
	:param m: Order along y.
	:param point: Scalar point or grid of points.
	:param geom:
	"""

	_check_order(n, m)
	env = _envelope(point, geom)
	hx = _hermite_table(n, env.u)[n]
	hy = _hermite_table(m, env.v)[m]
	return _assemble(n, m, hx, hy, env)


def _assemble(n: int, m: int, hx: Real, hy: Real, env: _Envelope) -> Complex:
	prefactor = math.exp(_log_normalization(n, m)) * env.inv_w
	phase = numpy.exp(-1j * (n + m + 1) * env.gouy)
	value = prefactor * hx * hy * env.gaussian * phase
	if numpy.ndim(value) == 0:
		return complex(value)
	return value


def mode_transverse_gradient(n: int, m: int, point: Point3, geom: BeamGeometry) -> Tuple[Complex, Complex]:
	"""
	Analytic transverse gradient :math:`(\\partial_x \\psi_{nm}, \\partial_y \\psi_{nm})`.

	Combines :math:`H_n'(u) = 2n H_{n-1}(u)` with the derivative of the complex Gaussian.

	:param n:
	:param m:
	:param point:
	:param geom:
	"""

	_check_order(n, m)
	env = _envelope(point, geom)
	hx_table = _hermite_table(n, env.u)
	hy_table = _hermite_table(m, env.v)
	return _gradient(n, m, hx_table, hy_table, env)


def _gradient(
		n: int,
		m: int,
		hx_table: List[Real],
		hy_table: List[Real],
		env: _Envelope,
		) -> Tuple[Complex, Complex]:
	hx, hy = hx_table[n], hy_table[m]
	dhx = 2 * n * hx_table[n - 1] if n else 0.0
	dhy = 2 * m * hy_table[m - 1] if m else 0.0

	# d/dx H_n(sqrt(2) x / w) = sqrt(2) / w * H_n'
	scale = numpy.sqrt(2) * env.inv_w
	d_x = _assemble(n, m, scale * dhx * hy + hx * hy * env.dlog_x, 1.0, env)
	d_y = _assemble(n, m, hx * (scale * dhy + hy * env.dlog_y), 1.0, env)
	return d_x, d_y


def superposition_amplitude_and_gradient(
		modes: ModeSuperposition,
		point: Point3,
		geom: BeamGeometry,
		) -> Tuple[Complex, Complex, Complex]:
	"""
	Evaluate the envelope :math:`f = \\sum f_{nm}\\psi_{nm}` and its transverse gradient.

	:param modes:
	:param point:
	:param geom:

	:return: ``(f, df/dx, df/dy)``
	"""

	if not len(modes):
		raise InvariantViolation("superposition.nonempty", "a superposition needs at least one mode")

	env = _envelope(point, geom)
	n_max = max(n for (n, _), _ in modes)
	m_max = max(m for (_, m), _ in modes)
	hx_table = _hermite_table(n_max, env.u)
	hy_table = _hermite_table(m_max, env.v)

	f: Complex = 0j
	f_x: Complex = 0j
	f_y: Complex = 0j

	for (n, m), coefficient in modes:
		f = f + coefficient * _assemble(n, m, hx_table[n], hy_table[m], env)
		d_x, d_y = _gradient(n, m, hx_table, hy_table, env)
		f_x = f_x + coefficient * d_x
		f_y = f_y + coefficient * d_y

	return f, f_x, f_y


def paraxial_residual(
		modes: ModeSuperposition,
		point: Point3,
		geom: BeamGeometry,
		step: float = 1e-2,
		) -> Complex:
	"""
	Finite-difference residual :math:`\\partial_x^2 f + \\partial_y^2 f + 2ik\\partial_z f`.

	:param modes:
	:param point:
	:param geom:
	:param step: Difference step, in units of :attr:`BeamGeometry.w0`.
	"""

	h = step * geom.w0
	x, y, z = point

	def f(dx: float = 0.0, dy: float = 0.0, dz: float = 0.0) -> Complex:
		return superposition_amplitude_and_gradient(modes, Point3(x + dx, y + dy, z + dz), geom)[0]

	centre = f()
	d2x = (f(dx=h) - 2 * centre + f(dx=-h)) / (h * h)
	d2y = (f(dy=h) - 2 * centre + f(dy=-h)) / (h * h)

	# the axial scale is the Rayleigh range, so the z step is widened accordingly
	hz = step * geom.rayleigh_range
	dz = (f(dz=hz) - f(dz=-hz)) / (2 * hz)

	return d2x + d2y + 2j * geom.k * dz


def laguerre_gauss_10(handedness: int = 1) -> ModeSuperposition:
	"""
	The Laguerre–Gaussian beam with one unit of orbital angular momentum,
	:math:`(\\psi_{10} + i l \\psi_{01}) / \\sqrt{2}`.

	:param handedness: The sign :math:`l = \\pm 1` of the orbital angular momentum.
	"""  # noqa: D400

	if handedness not in {1, -1}:
		raise InvariantViolation("superposition.handedness", f"expected +1 or -1, got {handedness!r}")

	return ModeSuperposition({(1, 0): 1 / math.sqrt(2), (0, 1): handedness * 1j / math.sqrt(2)})


def _first_order_admixture(amplitude: complex, axis: str) -> ModeSuperposition:
	if abs(amplitude) > 1:
		raise InvariantViolation("superposition.admixture", f"|amplitude| must not exceed 1, got {amplitude!r}")

	if axis == 'x':
		index = (1, 0)
	elif axis == 'y':
		index = (0, 1)
	else:
		raise InvariantViolation("superposition.axis", f"axis must be 'x' or 'y', got {axis!r}")

	return ModeSuperposition({(0, 0): math.sqrt(1 - abs(amplitude)**2), index: amplitude})


def displaced_gaussian(amplitude: float, axis: str = 'x') -> ModeSuperposition:
	"""
	A Gaussian with a real first-order admixture of weight ``amplitude``.

	The centroid moves along ``axis`` by :math:`w_0 a \\sqrt{1 - a^2}`.

	:param amplitude:
	:param axis: ``'x'`` or ``'y'``.
	"""

	return _first_order_admixture(float(amplitude), axis)


def tilted_gaussian(amplitude: float, axis: str = 'x') -> ModeSuperposition:
	"""
	A Gaussian with an imaginary first-order admixture, which tilts the direction of propagation towards ``axis``.

	:param amplitude:
	:param axis: ``'x'`` or ``'y'``.
	"""

	return _first_order_admixture(1j * float(amplitude), axis)
