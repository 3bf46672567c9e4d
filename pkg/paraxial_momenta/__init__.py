#!/usr/bin/env python3
#
#  __init__.py
"""
Linear and angular momentum of polarized paraxial beams, and the spin Hall effect of a tilted beam.
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

# this package
from paraxial_momenta.densities import (
		angular_momentum_density,
		density_sample,
		momentum_density,
		poynting_momentum,
		vector_fields
		)
from paraxial_momenta.exceptions import ConfigError, InvariantViolation, NonFiniteSampleError, ParaxialMomentaError
from paraxial_momenta.modes import (
		BeamGeometry,
		ModeSuperposition,
		Point3,
		PolarizationState,
		helicity,
		hermite_eval,
		laguerre_gauss_10,
		mode_amplitude,
		mode_transverse_gradient,
		superposition_amplitude_and_gradient
		)
from paraxial_momenta.modespace import (
		angular_momentum_modespace,
		ladder_coefficients,
		momentum_modespace,
		three_mode_summary
		)
from paraxial_momenta.quadrature import (
		BeamMoments,
		QuadratureSpec,
		centroid,
		integrate_plane,
		momenta_numeric
		)
from paraxial_momenta.tilt import (
		TiltFrame,
		rotated_momentum_density,
		rotation_matrix,
		tilted_centroid_closed,
		tilted_centroid_numeric
		)

__author__: str = "Dominic Davis-Foster"
__copyright__: str = "2026 Dominic Davis-Foster"
__license__: str = "MIT License"
__version__: str = "0.1.0"
__email__: str = "dominic@davis-foster.co.uk"

__all__ = [
		"BeamGeometry",
		"BeamMoments",
		"ConfigError",
		"InvariantViolation",
		"ModeSuperposition",
		"NonFiniteSampleError",
		"ParaxialMomentaError",
		"Point3",
		"PolarizationState",
		"QuadratureSpec",
		"TiltFrame",
		"angular_momentum_density",
		"angular_momentum_modespace",
		"centroid",
		"density_sample",
		"helicity",
		"hermite_eval",
		"integrate_plane",
		"ladder_coefficients",
		"laguerre_gauss_10",
		"mode_amplitude",
		"mode_transverse_gradient",
		"momenta_numeric",
		"momentum_density",
		"momentum_modespace",
		"poynting_momentum",
		"rotated_momentum_density",
		"rotation_matrix",
		"superposition_amplitude_and_gradient",
		"three_mode_summary",
		"tilted_centroid_closed",
		"tilted_centroid_numeric",
		"vector_fields",
		]
