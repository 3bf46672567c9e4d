#!/usr/bin/env python3
#
#  modespace.py
"""
Closed-form momenta of a Hermite–Gaussian superposition, as quadratic forms over its coefficients.
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
from typing import NamedTuple, Tuple

# 3rd party
import numpy
from numpy.typing import NDArray

# this package
from paraxial_momenta.exceptions import InvariantViolation
from paraxial_momenta.modes import BeamGeometry, ModeSuperposition

__all__ = [
		"LadderCoefficients",
		"ThreeModeSummary",
		"ladder_coefficients",
		"momentum_modespace",
		"angular_momentum_modespace",
		"spin_flux_ratio",
		"three_mode_coefficients",
		"three_mode_summary",
		]

_THREE_MODES = frozenset({(0, 0), (0, 1), (1, 0)})


class LadderCoefficients(NamedTuple):
	"""
	The banded matrices :math:`B` (antisymmetric) and :math:`C` (symmetric) coupling neighbouring mode orders.
	"""

	#: :math:`B_{np} = (\sqrt{p}\,\delta_{p,n+1} - \sqrt{n}\,\delta_{n,p+1}) / (k w_0)`
	B: NDArray[numpy.float64]

	#: :math:`C_{np} = k w_0 (\sqrt{p}\,\delta_{p,n+1} + \sqrt{n}\,\delta_{n,p+1}) / 2`
	C: NDArray[numpy.float64]

	#: The highest order :math:`N`; the matrices are :math:`(N+1) \times (N+1)`.
	order: int


class ThreeModeSummary(NamedTuple):
	"""
	Momenta of a superposition of :math:`\\psi_{00}`, :math:`\\psi_{01}` and :math:`\\psi_{10}`.
	"""

	P_x: float
	P_y: float
	P_z: float
	J_x: float
	J_y: float
	J_z: float


def _b(geom: BeamGeometry, n: int, p: int) -> float:
	kw0 = geom.k * geom.w0
	if p == n + 1:
		return math.sqrt(p) / kw0
	if n == p + 1:
		return -math.sqrt(n) / kw0
	return 0.0


def _c(geom: BeamGeometry, n: int, p: int) -> float:
	kw0 = geom.k * geom.w0
	if p == n + 1:
		return kw0 * math.sqrt(p) / 2
	if n == p + 1:
		return kw0 * math.sqrt(n) / 2
	return 0.0


def ladder_coefficients(geom: BeamGeometry, order: int) -> LadderCoefficients:
	"""
	Tabulate :math:`B` and :math:`C` up to ``order``.

	:param geom:
	:param order: The highest mode index :math:`N \\geq 1`.
	"""

	if order < 1:
		raise InvariantViolation("ladder.order", f"order must be at least 1, got {order!r}")

	size = order + 1
	B = numpy.zeros((size, size))
	C = numpy.zeros((size, size))

	for n in range(size):
		for p in (n - 1, n + 1):
			if 0 <= p < size:
				B[n, p] = _b(geom, n, p)
				C[n, p] = _c(geom, n, p)

	return LadderCoefficients(B, C, order)


def _real(value: complex, scale: float, what: str) -> float:
	assert abs(value.imag) <= 1e-13 * max(1.0, scale), f"{what} has imaginary part {value.imag!r}"
	return value.real


def momentum_modespace(modes: ModeSuperposition, geom: BeamGeometry) -> NDArray[numpy.float64]:
	"""
	The linear momentum per unit length :math:`\\mathbf{P}`, evaluated in mode space.

	.. math::

		P_x = -i \\sum f^*_{nm} B_{np} f_{pm}, \\quad
		P_y = -i \\sum f^*_{nm} B_{mq} f_{nq}, \\quad
		P_z = \\sum |f_{nm}|^2

	:param modes:
	:param geom:
	"""

	p_x = 0j
	p_y = 0j

	for (n, m), f_nm in modes:
		conj = f_nm.conjugate()
		for p in (n - 1, n + 1):
			p_x += conj * _b(geom, n, p) * modes.coefficient(p, m)
		for q in (m - 1, m + 1):
			p_y += conj * _b(geom, m, q) * modes.coefficient(n, q)

	p_z = modes.norm()
	return numpy.array([
			_real(-1j * p_x, p_z, "P_x"),
			_real(-1j * p_y, p_z, "P_y"),
			p_z,
			])


def angular_momentum_modespace(
		modes: ModeSuperposition,
		geom: BeamGeometry,
		sigma: float,
		) -> NDArray[numpy.float64]:
	"""
	The angular momentum per unit length :math:`\\mathbf{J}`, evaluated in mode space.

	The transverse components couple neighbouring orders through :math:`C`
	and do not depend on ``sigma``. The longitudinal component is the spin term
	:math:`\\bar{\\lambda}\\sigma P_z` plus the orbital cross terms between
	:math:`\\psi_{nm}` and :math:`\\psi_{n\\mp 1, m\\pm 1}`.

	:param modes:
	:param geom:
	:param sigma: The helicity.
	"""

	if not -1 <= sigma <= 1:
		raise InvariantViolation("polarization.helicity", f"sigma must lie in [-1, 1], got {sigma!r}")

	j_x = 0j
	j_y = 0j
	orbital = 0j

	for (n, m), f_nm in modes:
		conj = f_nm.conjugate()
		for q in (m - 1, m + 1):
			j_x += conj * _c(geom, m, q) * modes.coefficient(n, q)
		for p in (n - 1, n + 1):
			j_y -= conj * _c(geom, n, p) * modes.coefficient(p, m)

		if n:
			orbital -= 1j * math.sqrt(n * (m + 1)) * conj * modes.coefficient(n - 1, m + 1)
		if m:
			orbital += 1j * math.sqrt(m * (n + 1)) * conj * modes.coefficient(n + 1, m - 1)

	p_z = modes.norm()
	lambda_bar = geom.lambda_bar
	return numpy.array([
			lambda_bar * _real(j_x, p_z * geom.k * geom.w0, "J_x"),
			lambda_bar * _real(j_y, p_z * geom.k * geom.w0, "J_y"),
			lambda_bar * (sigma * p_z + _real(orbital, p_z, "J_z")),
			])


def spin_flux_ratio(modes: ModeSuperposition, geom: BeamGeometry, sigma: float) -> float:
	"""
	Ratio of the spin part of :math:`J_z` to the flux :math:`P_z`.

	This is :math:`\\bar{\\lambda}\\sigma` for every superposition,
	i.e. :math:`\\sigma/\\omega` once multiplied by :math:`c`.

	:param modes:
	:param geom:
	:param sigma:
	"""

	total = angular_momentum_modespace(modes, geom, sigma)[2]
	orbital = angular_momentum_modespace(modes, geom, 0.0)[2]
	return (total - orbital) / modes.norm()


def three_mode_coefficients(modes: ModeSuperposition) -> Tuple[complex, complex, complex]:
	"""
	Returns :math:`(f_{00}, f_{01}, f_{10})`.

	:param modes:

	:raises InvariantViolation: If any other mode is populated.
	"""

	extra = sorted(key for key, value in modes if key not in _THREE_MODES and value != 0)
	if extra:
		raise InvariantViolation("three_mode.populated", f"modes other than 00, 01 and 10 are populated: {extra}")

	return modes.coefficient(0, 0), modes.coefficient(0, 1), modes.coefficient(1, 0)


def three_mode_summary(
		f00: complex,
		f01: complex,
		f10: complex,
		sigma: float,
		geom: BeamGeometry,
		) -> ThreeModeSummary:
	"""
	Closed-form momenta of :math:`f_{00}\\psi_{00} + f_{01}\\psi_{01} + f_{10}\\psi_{10}`.

	A real :math:`f_{01}` admixture displaces the beam along y and so feeds :math:`J_x`;
	a real :math:`f_{10}` admixture feeds :math:`J_y` with the opposite sign.

	:param f00:
	:param f01:
	:param f10:
	:param sigma:
	:param geom:
	"""

	if not -1 <= sigma <= 1:
		raise InvariantViolation("polarization.helicity", f"sigma must lie in [-1, 1], got {sigma!r}")

	f00, f01, f10 = complex(f00), complex(f01), complex(f10)
	theta0 = geom.angular_spread
	p_z = math.fsum([abs(f00)**2, abs(f01)**2, abs(f10)**2])

	return ThreeModeSummary(
			P_x=theta0 * (f00.conjugate() * f10).imag,
			P_y=theta0 * (f00.conjugate() * f01).imag,
			P_z=p_z,
			J_x=geom.w0 * (f00.conjugate() * f01).real,
			J_y=-geom.w0 * (f00.conjugate() * f10).real,
			J_z=geom.lambda_bar * (sigma * p_z + 2 * (f10.conjugate() * f01).imag),
			)
