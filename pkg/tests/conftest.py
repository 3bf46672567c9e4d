# stdlib
import math

# 3rd party
import pytest

# this package
from paraxial_momenta.modes import BeamGeometry
from paraxial_momenta.quadrature import QuadratureSpec

pytest_plugins = ("coincidence", )


@pytest.fixture()
def geometry() -> BeamGeometry:
	# k w0 = 200, so theta_0 = 0.01 and L = 20000
	return BeamGeometry.from_kw0(200.0)


@pytest.fixture()
def unit_geometry() -> BeamGeometry:
	return BeamGeometry(w0=1.0, max_angular_spread=math.inf)


@pytest.fixture()
def spec() -> QuadratureSpec:
	return QuadratureSpec(nodes_per_axis=101)
