#!/usr/bin/env python3
#
#  __main__.py
"""
Command-line entry point.
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
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

# this package
from paraxial_momenta import __version__
from paraxial_momenta.config import EXPERIMENTS, build_config, load_config_file, parse_mode
from paraxial_momenta.exceptions import InvariantViolation
from paraxial_momenta.experiments import run

__all__ = ["build_parser", "flag_values", "main"]

logger = logging.getLogger(__name__)

_DESCRIPTIONS = {
		"moments": "integrate P and J of a superposition and compare with the mode-space values",
		"centroid": "trace the intensity centroid and compare with the centroid theorem",
		"tilt-sweep": "tabulate the helicity-dependent shift of a tilted Gaussian",
		"density-grid": "sample the intensity on a grid and write a heatmap",
		"verify": "run the invariant suite and print a PASS/FAIL table",
		}

# (flag, dotted key, type)
_SCALAR_FLAGS = (
		("--kw0", "beam.kw0", float),
		("--alpha-re", "beam.alpha_re", float),
		("--alpha-im", "beam.alpha_im", float),
		("--beta-re", "beam.beta_re", float),
		("--beta-im", "beam.beta_im", float),
		("--nodes", "quadrature.nodes", int),
		("--half-width-factor", "quadrature.half_width_factor", float),
		("--workers", "quadrature.workers", int),
		("--grid-points", "grid.points", int),
		("--grid-extent", "grid.extent", float),
		("--out", "output.path", str),
		)

_LIST_FLAGS = (
		("--sigma", "beam.sigma"),
		("--theta", "frame.theta"),
		("--phi", "frame.phi"),
		("--z", "frame.z"),
		)

_POLARIZATION_KEYS = ("beam.sigma", "beam.alpha_re", "beam.alpha_im", "beam.beta_re", "beam.beta_im")


def _dest(key: str) -> str:
	return key.replace('.', '__')


def _common_options() -> argparse.ArgumentParser:
	parent = argparse.ArgumentParser(add_help=False)
	parent.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
	parent.add_argument("--config", metavar="FILE", help="TOML configuration file; flags override its values")

	for flag, key, type_ in _SCALAR_FLAGS:
		parent.add_argument(flag, dest=_dest(key), type=type_, help=f"sets {key}")

	for flag, key in _LIST_FLAGS:
		parent.add_argument(flag, dest=_dest(key), type=float, action="append", help=f"sets {key} (repeatable)")

	parent.add_argument(
			"--mode",
			dest=_dest("beam.modes"),
			action="append",
			metavar="N,M,RE,IM",
			help="adds a Hermite-Gauss coefficient (repeatable)",
			)
	parent.add_argument("--heatmap", dest=_dest("output.heatmap"), action="store_true", default=None)
	parent.add_argument("--no-heatmap", dest=_dest("output.heatmap"), action="store_false")

	return parent


def build_parser() -> argparse.ArgumentParser:
	"""
	Construct the argument parser, with one subcommand per experiment.
	"""

	parser = argparse.ArgumentParser(
			prog="paraxial-momenta",
			description="Momenta, centroids and the spin Hall effect of paraxial Hermite-Gauss beams.",
			)
	parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

	subparsers = parser.add_subparsers(dest="experiment", metavar="EXPERIMENT")
	subparsers.required = True

	parent = _common_options()
	for name in EXPERIMENTS:
		subparsers.add_parser(name, parents=[parent], help=_DESCRIPTIONS[name], description=_DESCRIPTIONS[name])

	return parser


def _drop_overridden_polarization(values: Dict[str, Any], flags: Dict[str, Any]) -> None:
	# sigma and the Jones components are alternatives, so a flag for either replaces both from the file
	if any(key in flags for key in _POLARIZATION_KEYS):
		for key in _POLARIZATION_KEYS:
			values.pop(key, None)


def flag_values(args: argparse.Namespace) -> Dict[str, Any]:
	"""
	Collect the configuration keys given on the command line.

	:param args:

	:returns: Dotted keys mapped to values, omitting flags that were not given.
	"""

	keys: List[str] = [key for _, key, _ in _SCALAR_FLAGS]
	keys.extend(key for _, key in _LIST_FLAGS)
	keys.extend(["beam.modes", "output.heatmap"])

	values = {key: getattr(args, _dest(key)) for key in keys}
	if values["beam.modes"] is not None:
		values["beam.modes"] = [list(parse_mode(text)) for text in values["beam.modes"]]

	return {key: value for key, value in values.items() if value is not None}


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""
	Run the command-line interface.

	:param argv: Arguments, defaulting to :py:data:`sys.argv`.

	:returns: ``0`` on success, ``1`` if an invariant is violated or ``verify`` fails, ``2`` on I/O errors.
	"""

	args = build_parser().parse_args(argv)

	logging.basicConfig(
			level=logging.DEBUG if args.verbose else logging.WARNING,
			format="%(levelname)s %(name)s: %(message)s",
			)

	try:
		flags = flag_values(args)
		values: Dict[str, Any] = {}

		if args.config is not None:
			values.update(load_config_file(args.config))
			_drop_overridden_polarization(values, flags)

		values.update(flags)
		config = build_config(values, experiment=args.experiment)
		logger.debug("configuration: %r", config)
		return run(config)

	except InvariantViolation as e:
		print(f"error: {e}", file=sys.stderr)
		return 1
	except OSError as e:
		print(f"error: {e}", file=sys.stderr)
		return 2


if __name__ == "__main__":
	sys.exit(main())
