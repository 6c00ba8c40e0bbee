import os
from configparser import ConfigParser
from dataclasses import dataclass

from misc.errors import ConfigError

DEFAULTS = {
    "run": {
        "tolerance": "1e-10",
        "seed": "0",
        "workers": "1",
        "format": "json",
        "max_iterations": "100000",
        "rayleigh_every": "5",
        "store_reports": "true",
    },
    "limits": {
        "vertex_cap": "512",
        "construction_cap": "2000",
        "canonical_cap": "10",
        "exhaustive_cap": "9",
        "naive_fan_cap": "12",
        "naive_fan_k": "3",
        "exact_cut_cap": "24",
        "charpoly_cap": "6",
        "chvatal_hanson_budget": "25",
        "hill_climb_cap": "2000",
    },
    "search": {
        "restarts": "20",
        "steps": "1000",
        "certify_every": "100",
    },
    "storage": {
        "db_name": "fanfree.db",
    },
}

OUTPUT_FORMATS = ("table", "json", "csv", "graph6")

config = ConfigParser()
config.read_dict(DEFAULTS)
config.read(os.environ.get("FANFREE_CONFIG", "config.ini"))

default_tolerance = config["run"].getfloat("tolerance")
max_iterations = config["run"].getint("max_iterations")
rayleigh_every = config["run"].getint("rayleigh_every")
store_reports = config["run"].getboolean("store_reports")

vertex_cap = config["limits"].getint("vertex_cap")
construction_cap = config["limits"].getint("construction_cap")
canonical_cap = config["limits"].getint("canonical_cap")
exhaustive_cap = config["limits"].getint("exhaustive_cap")
naive_fan_cap = config["limits"].getint("naive_fan_cap")
naive_fan_k = config["limits"].getint("naive_fan_k")
exact_cut_cap = config["limits"].getint("exact_cut_cap")
charpoly_cap = config["limits"].getint("charpoly_cap")
chvatal_hanson_budget = config["limits"].getint("chvatal_hanson_budget")
hill_climb_cap = config["limits"].getint("hill_climb_cap")

search_restarts = config["search"].getint("restarts")
search_steps = config["search"].getint("steps")
certify_every = config["search"].getint("certify_every")


@dataclass(frozen=True)
class Config:
    tolerance: float = default_tolerance
    seed: int = config["run"].getint("seed")
    workers: int = config["run"].getint("workers")
    output_format: str = config["run"]["format"]

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f"seed must fit in 64 bits, got {self.seed}")


def run_config(tolerance=None, seed=None, workers=None, output_format=None) -> Config:
    """Build the run Config from CLI flags over config.ini; FANFREE_SEED beats --seed."""
    base = Config()
    env_seed = os.environ.get("FANFREE_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            raise ConfigError(f"FANFREE_SEED is not an integer: {env_seed!r}")
    return Config(
        tolerance=base.tolerance if tolerance is None else tolerance,
        seed=base.seed if seed is None else seed,
        workers=base.workers if workers is None else workers,
        output_format=base.output_format if output_format is None else output_format,
    )
