# stdlib
import math

# 3rd party
import pytest
from domdf_python_tools.paths import PathPlus

# this package
from paraxial_momenta.config import CONFIG_KEYS, EXPERIMENTS, build_config, flatten, load_config_file, parse_mode
from paraxial_momenta.exceptions import ConfigError, InvariantViolation

_CONFIG_FILE = """\
experiment = "tilt-sweep"

[beam]
kw0 = 150.0
sigma = [1.0, -1.0]
modes = [[0, 0, 1.0, 0.0]]

[frame]
theta = [0.1, 0.3, 0.6]
phi = [0.0, 1.5707963267948966]
z = [0.0]

[quadrature]
nodes = 61
half_width_factor = 8.0
workers = 2

[output]
path = "results"
heatmap = false
"""


def test_defaults():
	config = build_config({}, experiment="moments")

	assert config.experiment == "moments"
	assert config.geometry.w0 == 200.0
	assert config.sigmas == (0.0, )
	assert config.polarization is None
	assert [key for key, _ in config.modes] == [(0, 0)]
	assert [frame.theta for frame in config.frames] == [0.1, 0.3, 0.6]
	assert config.zs == (0.0, )
	assert config.quadrature.nodes_per_axis == 201
	assert config.output == PathPlus('.')
	assert config.heatmap is True
	assert config.grid_points == 101


def test_every_experiment_accepted():
	for name in EXPERIMENTS:
		assert build_config({"experiment": name}).experiment == name


def test_experiment_argument_wins():
	assert build_config({"experiment": "verify"}, experiment="centroid").experiment == "centroid"


@pytest.mark.parametrize("experiment", [None, "plot"])
def test_unknown_experiment(experiment):
	with pytest.raises(ConfigError, match="experiment"):
		build_config({"experiment": experiment})


def test_unknown_key():
	with pytest.raises(ConfigError) as excinfo:
		build_config({"beam.colour": "red", "frame.psi": 1.0}, experiment="moments")

	assert excinfo.value.invariant == "config.keys"
	assert "beam.colour" in str(excinfo.value)
	assert "frame.psi" in str(excinfo.value)


def test_none_values_are_missing():
	config = build_config({"beam.kw0": None, "frame.z": None}, experiment="moments")
	assert config.geometry.w0 == 200.0
	assert config.zs == (0.0, )


def test_sweep_lists():
	config = build_config(
			{"beam.sigma": [1.0, -1.0], "frame.theta": [0.2, 0.4], "frame.phi": [0.0, math.pi], "frame.z": 5.0},
			experiment="tilt-sweep",
			)

	assert config.sigmas == (1.0, -1.0)
	assert [(frame.theta, frame.phi) for frame in config.frames] == [
			(0.2, 0.0),
			(0.2, math.pi),
			(0.4, 0.0),
			(0.4, math.pi),
			]
	assert config.zs == (5.0, )


def test_jones_components():
	half = math.sqrt(0.5)
	config = build_config({"beam.alpha_re": half, "beam.beta_im": half}, experiment="moments")

	assert config.sigmas == (pytest.approx(1.0, abs=1e-15), )
	assert config.polarization is not None
	assert config.polarization.beta == 1j * half


def test_sigma_and_jones_conflict():
	with pytest.raises(ConfigError, match="beam.sigma"):
		build_config({"beam.sigma": 1.0, "beam.alpha_re": 1.0}, experiment="moments")


def test_modes():
	config = build_config({"beam.modes": [[1, 0, 1.0, 0.0], [0, 1, 0.0, 1.0]]}, experiment="density-grid")
	assert config.modes.norm() == pytest.approx(1.0)
	assert config.modes.coefficient(0, 1) == pytest.approx(1j * math.sqrt(0.5))

	config = build_config({"beam.modes": ["2,1,3,4"], "beam.normalize": False}, experiment="moments")
	assert config.modes.coefficient(2, 1) == 3 + 4j


@pytest.mark.parametrize(
		"values, invariant",
		[
				pytest.param({"beam.sigma": 1.5}, "polarization.helicity", id="sigma_range"),
				pytest.param({"beam.alpha_re": 0.5}, "polarization.normalized", id="jones_norm"),
				pytest.param({"beam.kw0": 5.0}, "geometry.paraxial", id="not_paraxial"),
				pytest.param({"beam.kw0": [100.0, 200.0]}, "beam.kw0", id="kw0_list"),
				pytest.param({"beam.kw0": "wide"}, "beam.kw0", id="kw0_text"),
				pytest.param({"beam.modes": []}, "superposition.nonempty", id="no_modes"),
				pytest.param({"beam.modes": [[0, 0, 1.0]]}, "beam.modes", id="short_mode"),
				pytest.param({"beam.modes": [[0.5, 0, 1.0, 0.0]]}, "superposition.indices", id="fractional_index"),
				pytest.param({"frame.theta": []}, "frame.theta", id="empty_sweep"),
				pytest.param({"frame.theta": [0.2, 1.45]}, "frame.theta", id="theta_max"),
				pytest.param({"frame.z": [math.inf]}, "frame.z", id="infinite_z"),
				pytest.param({"quadrature.nodes": 200}, "quadrature.nodes", id="even_nodes"),
				pytest.param({"quadrature.half_width_factor": 3}, "quadrature.half_width", id="narrow_window"),
				pytest.param({"grid.points": 1}, "grid.points", id="grid_points"),
				pytest.param({"grid.extent": -1.0}, "grid.extent", id="grid_extent"),
				pytest.param({"output.heatmap": "false"}, "output.heatmap", id="heatmap_text"),
				pytest.param({"output.heatmap": 0}, "output.heatmap", id="heatmap_int"),
				pytest.param({"beam.normalize": "no"}, "beam.normalize", id="normalize_text"),
				]
		)
def test_invalid(values, invariant: str):
	with pytest.raises(InvariantViolation) as excinfo:
		build_config(values, experiment="moments")

	assert excinfo.value.invariant == invariant
	assert str(excinfo.value).startswith(f"{invariant}: ")


def test_parse_mode():
	assert parse_mode("1, 2, 0.5, -0.25") == (1, 2, 0.5, -0.25)

	with pytest.raises(ConfigError, match="beam.modes"):
		parse_mode("1,2,3")
	with pytest.raises(ConfigError, match="beam.modes"):
		parse_mode("a,b,c,d")


def test_flatten():
	nested = {"experiment": "verify", "beam": {"kw0": 3, "extra": {"deep": True}}}
	assert flatten(nested) == {"experiment": "verify", "beam.kw0": 3, "beam.extra.deep": True}


def test_load_config_file(tmp_pathplus: PathPlus):
	(tmp_pathplus / "run.toml").write_text(_CONFIG_FILE)
	values = load_config_file(tmp_pathplus / "run.toml")

	assert set(values) <= set(CONFIG_KEYS)
	assert values["beam.kw0"] == 150.0
	assert values["output.heatmap"] is False

	config = build_config(values)
	assert config.experiment == "tilt-sweep"
	assert config.sigmas == (1.0, -1.0)
	assert len(config.frames) == 6
	assert config.quadrature.nodes_per_axis == 61
	assert config.quadrature.workers == 2
	assert config.output == PathPlus("results")
	assert config.heatmap is False


def test_load_config_file_syntax_error(tmp_pathplus: PathPlus):
	(tmp_pathplus / "broken.toml").write_text("[beam\nkw0 = ")

	with pytest.raises(ConfigError) as excinfo:
		load_config_file(tmp_pathplus / "broken.toml")

	assert excinfo.value.invariant == "config.syntax"


def test_load_config_file_missing(tmp_pathplus: PathPlus):
	with pytest.raises(FileNotFoundError):
		load_config_file(tmp_pathplus / "missing.toml")
