#!/usr/bin/env python3
#
#  exceptions.py
"""
Exception classes raised by :mod:`paraxial_momenta`.
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
from typing import Tuple

__all__ = ["ConfigError", "InvariantViolation", "NonFiniteSampleError", "ParaxialMomentaError"]


class ParaxialMomentaError(Exception):
	"""
	Base class for errors raised by this package.
	"""


class InvariantViolation(ParaxialMomentaError, ValueError):
	"""
	Raised when a value breaks one of the physical or numerical invariants of the model.

	:param invariant: Short name of the violated invariant, e.g. ``"polarization.normalized"``.
	:param message: Human-readable explanation.
	"""

	def __init__(self, invariant: str, message: str):
		super().__init__(f"{invariant}: {message}")
		self.invariant: str = invariant


class ConfigError(InvariantViolation):
	"""
	Raised for unreadable or unknown configuration entries.
	"""


class NonFiniteSampleError(ParaxialMomentaError, ArithmeticError):
	"""
	Raised by the quadrature engine when an integrand returns ``nan`` or ``inf``.

	:param x: Transverse coordinate of the first offending node.
	:param y:
	:param z: Axial position of the integration plane.
	"""

	def __init__(self, x: float, y: float, z: float):
		super().__init__(f"Non-finite integrand sample at (x={x!r}, y={y!r}, z={z!r})")
		self.coordinates: Tuple[float, float, float] = (x, y, z)
