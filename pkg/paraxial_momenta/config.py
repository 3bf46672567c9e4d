#!/usr/bin/env python3
#
#  config.py
"""
Run configuration for the command-line interface, read from TOML files and flags.
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
from typing import Any, Dict, Iterable, Mapping, MutableMapping, Optional, Sequence, Tuple, Union

# 3rd party
import dom_toml
from domdf_python_tools.paths import PathPlus
from domdf_python_tools.typing import PathLike

# this package
from paraxial_momenta.exceptions import ConfigError, InvariantViolation
from paraxial_momenta.modes import BeamGeometry, ModeSuperposition, PolarizationState, helicity
from paraxial_momenta.quadrature import QuadratureSpec
from paraxial_momenta.tilt import TiltFrame

__all__ = ["EXPERIMENTS", "CONFIG_KEYS", "RunConfig", "load_config_file", "flatten", "build_config", "parse_mode"]

#: Names of the experiments the command-line interface can run.
EXPERIMENTS = ("moments", "centroid", "tilt-sweep", "density-grid", "verify")

#: Recognised dotted configuration keys, with a short description of each.
CONFIG_KEYS: Dict[str, str] = {
		"experiment": "one of " + ", ".join(EXPERIMENTS),
		"beam.kw0": "dimensionless waist k*w0",
		"beam.sigma": "helicity, or a list of helicities",
		"beam.alpha_re": "real part of the x Jones component",
		"beam.alpha_im": "imaginary part of the x Jones component",
		"beam.beta_re": "real part of the y Jones component",
		"beam.beta_im": "imaginary part of the y Jones component",
		"beam.modes": "list of [n, m, re, im] coefficients",
		"beam.normalize": "rescale the coefficients so that P_z = 1",
		"frame.theta": "tilt angles in radians",
		"frame.phi": "azimuths in radians",
		"frame.z": "axial positions, in units of 1/k",
		"quadrature.nodes": "Gauss-Legendre nodes per axis",
		"quadrature.half_width_factor": "half-width of the integration square in spot sizes",
		"quadrature.workers": "threads used for quadrature",
		"grid.points": "samples per axis of the density grid",
		"grid.extent": "half-width of the density grid in spot sizes",
		"output.path": "output directory",
		"output.heatmap": "also write a portable graymap for density-grid",
		}

_DEFAULTS: Dict[str, Any] = {
		"beam.kw0": 200.0,
		"beam.modes": [[0, 0, 1.0, 0.0]],
		"beam.normalize": True,
		"frame.theta": [0.1, 0.3, 0.6],
		"frame.phi": [0.0],
		"frame.z": [0.0],
		"quadrature.nodes": 201,
		"quadrature.half_width_factor": 8.0,
		"quadrature.workers": 1,
		"grid.points": 101,
		"grid.extent": 3.0,
		"output.path": '.',
		"output.heatmap": True,
		}


@dataclass(frozen=True)
class RunConfig:
	"""
	A fully validated run of one experiment.
	"""

	experiment: str
	geometry: BeamGeometry
	sigmas: Tuple[float, ...]
	modes: ModeSuperposition
	frames: Tuple[TiltFrame, ...]
	zs: Tuple[float, ...]
	quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)
	grid_points: int = 101
	grid_extent: float = 3.0
	output: PathPlus = field(default_factory=PathPlus)
	heatmap: bool = True
	polarization: Optional[PolarizationState] = None


def flatten(table: Mapping[str, Any], prefix: str = '') -> Dict[str, Any]:
	"""
	Flatten nested tables into dotted keys, e.g. ``{"beam": {"kw0": 2}}`` to ``{"beam.kw0": 2}``.

	:param table:
	:param prefix:
	"""

	flat: Dict[str, Any] = {}

	for key, value in table.items():
		dotted = f"{prefix}{key}"
		if isinstance(value, Mapping):
			flat.update(flatten(value, prefix=f"{dotted}."))
		else:
			flat[dotted] = value

	return flat


def load_config_file(filename: PathLike) -> Dict[str, Any]:
	"""
	Read a TOML configuration file and return its flattened contents.

	:param filename:

	:raises ConfigError: If the file is not valid TOML.
	"""

	try:
		return flatten(dom_toml.load(filename))
	except (ValueError, TypeError) as e:  # TOMLDecodeError subclasses ValueError
		raise ConfigError("config.syntax", f"could not parse {filename!s}: {e}") from e


def parse_mode(text: str) -> Tuple[int, int, float, float]:
	"""
	Parse a mode given as ``"n,m,re,im"``.

	:param text:
	"""

	parts = [part.strip() for part in text.split(',')]
	if len(parts) != 4:
		raise ConfigError("beam.modes", f"expected 'n,m,re,im', got {text!r}")

	try:
		return int(parts[0]), int(parts[1]), float(parts[2]), float(parts[3])
	except ValueError as e:
		raise ConfigError("beam.modes", f"could not parse mode {text!r}: {e}") from e


def _as_tuple(key: str, value: Any, convert: Any = float) -> Tuple[Any, ...]:
	values: Iterable[Any] = value if isinstance(value, (list, tuple)) else [value]

	try:
		result = tuple(convert(v) for v in values)
	except (TypeError, ValueError) as e:
		raise ConfigError(key, f"invalid value {value!r}: {e}") from e

	if not result:
		raise InvariantViolation(key, "sweep lists must not be empty")
	for v in result:
		if isinstance(v, float) and not math.isfinite(v):
			raise InvariantViolation(key, f"value {v!r} is not finite")

	return result


def _scalar(key: str, value: Any, convert: Any) -> Any:
	if isinstance(value, (list, tuple)):
		raise ConfigError(key, f"expected a single value, got {value!r}")
	if convert is bool and not isinstance(value, bool):
		raise ConfigError(key, f"expected true or false, got {value!r}")

	try:
		return convert(value)
	except (TypeError, ValueError) as e:
		raise ConfigError(key, f"invalid value {value!r}: {e}") from e


def _polarization(values: Mapping[str, Any]) -> Tuple[Tuple[float, ...], Optional[PolarizationState]]:
	jones_keys = ("beam.alpha_re", "beam.alpha_im", "beam.beta_re", "beam.beta_im")
	given = [key for key in jones_keys if values.get(key) is not None]

	if given:
		if values.get("beam.sigma") is not None:
			raise ConfigError("beam.sigma", "give either sigma or the Jones components, not both")

		re_a, im_a, re_b, im_b = (_scalar(key, values.get(key, 0.0) or 0.0, float) for key in jones_keys)
		pol = PolarizationState(complex(re_a, im_a), complex(re_b, im_b))
		return (helicity(pol), ), pol

	sigmas = _as_tuple("beam.sigma", values.get("beam.sigma", 0.0))
	for sigma in sigmas:
		if not -1 <= sigma <= 1:
			raise InvariantViolation("polarization.helicity", f"sigma must lie in [-1, 1], got {sigma!r}")

	return sigmas, None


def _modes(values: Mapping[str, Any]) -> ModeSuperposition:
	raw = values["beam.modes"]
	if not isinstance(raw, (list, tuple)) or not raw:
		raise InvariantViolation("superposition.nonempty", "beam.modes must be a non-empty list")

	coefficients: Dict[Tuple[int, int], complex] = {}
	for entry in raw:
		if isinstance(entry, str):
			entry = parse_mode(entry)
		if not isinstance(entry, (list, tuple)) or len(entry) != 4:
			raise ConfigError("beam.modes", f"expected [n, m, re, im], got {entry!r}")

		n, m, re, im = entry
		if int(n) != n or int(m) != m:
			raise InvariantViolation("superposition.indices", f"invalid mode index ({n!r}, {m!r})")
		coefficients[(int(n), int(m))] = coefficients.get((int(n), int(m)), 0j) + complex(float(re), float(im))

	modes = ModeSuperposition(coefficients)
	if _scalar("beam.normalize", values["beam.normalize"], bool):
		modes = modes.normalized()

	return modes


def build_config(
		values: Mapping[str, Any],
		experiment: Optional[str] = None,
		) -> RunConfig:
	"""
	Validate flattened configuration values and assemble a :class:`~.RunConfig`.

	Missing keys take their defaults. Keys whose value is :py:obj:`None` are treated as missing.

	:param values: Dotted keys, as returned by :func:`~.load_config_file`, with flag overrides applied.
	:param experiment: Overrides ``values["experiment"]``.

	:raises ConfigError: For unknown keys or unparseable values.
	:raises InvariantViolation: If a physical or numerical invariant is violated.
	"""

	unknown = sorted(set(values) - set(CONFIG_KEYS))
	if unknown:
		raise ConfigError("config.keys", f"unknown configuration key(s): {', '.join(unknown)}")

	merged: MutableMapping[str, Any] = dict(_DEFAULTS)
	merged.update({key: value for key, value in values.items() if value is not None})
	if experiment is not None:
		merged["experiment"] = experiment

	name = merged.get("experiment")
	if name not in EXPERIMENTS:
		raise ConfigError("experiment", f"expected one of {', '.join(EXPERIMENTS)}, got {name!r}")

	geometry = BeamGeometry.from_kw0(_scalar("beam.kw0", merged["beam.kw0"], float))
	sigmas, polarization = _polarization(merged)

	frames = tuple(
			TiltFrame(theta, phi)
			for theta in _as_tuple("frame.theta", merged["frame.theta"])
			for phi in _as_tuple("frame.phi", merged["frame.phi"])
			)

	quadrature = QuadratureSpec(
			half_width_factor=_scalar("quadrature.half_width_factor", merged["quadrature.half_width_factor"], float),
			nodes_per_axis=_scalar("quadrature.nodes", merged["quadrature.nodes"], int),
			workers=_scalar("quadrature.workers", merged["quadrature.workers"], int),
			)

	grid_points = _scalar("grid.points", merged["grid.points"], int)
	if grid_points < 2:
		raise InvariantViolation("grid.points", f"need at least 2 points per axis, got {grid_points}")
	grid_extent = _scalar("grid.extent", merged["grid.extent"], float)
	if not grid_extent > 0:
		raise InvariantViolation("grid.extent", f"extent must be positive, got {grid_extent!r}")

	return RunConfig(
			experiment=name,
			geometry=geometry,
			sigmas=sigmas,
			modes=_modes(merged),
			frames=frames,
			zs=_as_tuple("frame.z", merged["frame.z"]),
			quadrature=quadrature,
			grid_points=grid_points,
			grid_extent=grid_extent,
			output=PathPlus(_scalar("output.path", merged["output.path"], str)),
			heatmap=_scalar("output.heatmap", merged["output.heatmap"], bool),
			polarization=polarization,
			)
