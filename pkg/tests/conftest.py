import copy

from pytest import fixture

from hblab.config import DEFAULT_CONFIG
from hblab.extremal import GridSpec, radial_levels
from hblab.main import HbLab


@fixture
def spec():
    """A coarser scan than the default, deep enough for every boundary estimate."""
    return GridSpec(radial_levels=radial_levels(20), angular_count=128, refine_depth=4)


@fixture
def config():
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["grid"].update(angular_count=128, refine_depth=4)
    config["random_count"] = 2
    config["radius_samples"] = 4
    config["radii"] = [0.1, 0.5, 0.9]
    return config


@fixture
def lab(config):
    return HbLab(config)
