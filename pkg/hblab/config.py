import copy
import json
import os
from json.decoder import JSONDecodeError

import toml

from .errors import UsageError

THREADS_ENV = "HBLAB_THREADS"

DEFAULT_CONFIG = {
    "order": 64,
    "tol": 1e-9,
    "seed": 0,
    "inflation": 1.05,
    "random_count": 50,
    "random_degree": 4,
    "random_k": 0.6,
    "threads": 1,
    "grid": {
        "angular_count": 512,
        "refine_depth": 5,
        "rmax_exp": 20,
        "divergence_ratio": 10.0,
    },
    "alphas": ["0.3", "0.5j", "-0.7"],
    "radii": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],
    "radius_samples": 25,
    "coefficient_order": 32,
    "eps": 0.5,
    "sharpness_eps": 0.1,
    "format": "json",
    "output": None,
}


def merge(config, update):
    """Merge ``update`` into ``config``; nested dicts are merged key by key."""
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(config.get(key), dict):
            merge(config[key], value)
        else:
            config[key] = value
    return config


def threads_from_env(default=1):
    value = os.environ.get(THREADS_ENV)
    if not value:
        return default
    try:
        threads = int(value)
    except ValueError:
        raise UsageError("%s must be an integer, got %r" % (THREADS_ENV, value))
    if threads < 1:
        raise UsageError("%s must be at least 1" % THREADS_ENV)
    return threads


def load_config(config_files=()):
    """Defaults, then each file in order: later files override earlier ones.

    Files ending in ``.toml`` are read as TOML, everything else as JSON.
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["threads"] = threads_from_env(config["threads"])
    for filename in config_files:
        try:
            with open(filename, "r") as fp:
                if filename.endswith(".toml"):
                    data = toml.load(fp)
                else:
                    data = json.load(fp)
        except (JSONDecodeError, toml.TomlDecodeError) as e:
            raise UsageError("Error loading config file {}: {}".format(filename, e))
        except OSError as e:
            raise UsageError("Cannot read config file {}: {}".format(filename, e))
        if not isinstance(data, dict):
            raise UsageError("Config file {} does not hold a mapping".format(filename))
        merge(config, data)
    unknown = set(config) - set(DEFAULT_CONFIG)
    if unknown:
        raise UsageError("Unknown config keys: %s" % ", ".join(sorted(unknown)))
    return config
