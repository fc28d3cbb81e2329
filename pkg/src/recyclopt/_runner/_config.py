"""Run configuration: defaults, config files and command-line overrides."""

__all__ = ["RunConfig", "read_config_file", "parse_overrides", "resolve_config"]

import math
import os
import pathlib
import typing

from dataclasses import asdict as _asdict
from dataclasses import dataclass, field, fields

import yaml

from .._exceptions import ConfigError
from ..hjb import ShootConfig
from ..model import ModelParams
from ..sde import SimConfig

CONFIG_ENV = "RECYCLOPT_CONFIG"


@dataclass
class RunConfig:
    """
    Flat configuration of a command-line run.

    Gathers the model parameters, the simulation and solver settings, and
    the subcommand-specific fields. ``sigma2`` is accepted as an input key
    in place of ``sigma``.

    """

    # model
    gamma: float = 5.0
    delta: float = 0.5
    sigma: float = math.sqrt(2.0)
    alpha: float = 0.25
    a0: float = 10.0
    a1: float = 1.1
    a2: float = 5.0
    c_v: float = 0.2
    p0: float = 1.0
    C_L: float = 0.5

    # simulation
    r0: float = 0.5
    T: float = 2.0
    dt: float = 0.002
    seed: int = 0
    regulated: bool = True

    # shooting
    grid_n: int = 4000
    eps_boundary: float = 1e-6
    k_lo: float = -2.0
    k_hi: float = 2.0
    tol_k: float = 1e-10
    tol_terminal: float = 1e-6
    max_doublings: int = 20
    max_iter: int = 200

    # monte carlo
    n_paths: int = 1000
    base_seed: int | None = None
    eval_T: float | None = None
    threads: int | None = None
    disc_allowance: float = 0.02

    # subcommands
    output_dir: str = "recyclopt_out"
    policy: str = "optimal"
    u_fixed: float = 0.0
    p_fixed: float = 1.0
    n_sim_paths: int = 1
    k_values: list[float] = field(default_factory=lambda: [-0.5, 0.5])
    k_family: list[float] = field(
        default_factory=lambda: [-1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0]
    )
    param_name: str = "a1"
    values: list[float] = field(default_factory=lambda: [0.3, 1.1])

    def __post_init__(self):
        if self.policy not in ("optimal", "zero", "fixed"):
            raise ConfigError(
                f"Unrecognized policy: {self.policy} - must be 'optimal', 'zero' or 'fixed'."
            )

    @property
    def resolved_seed(self) -> int:
        """Seed of the Monte Carlo noise streams."""
        return self.seed if self.base_seed is None else self.base_seed

    def model_params(self) -> ModelParams:
        names = [f.name for f in fields(ModelParams)]
        return ModelParams(**{name: getattr(self, name) for name in names})

    def sim_config(self) -> SimConfig:
        """Settings of stored path simulations."""
        return SimConfig(
            r0=self.r0, T=self.T, dt=self.dt, seed=self.seed, regulated=self.regulated
        )

    def eval_config(self) -> SimConfig:
        """Settings of Monte Carlo evaluations (``eval_T = None`` means ``40 / alpha``)."""
        return SimConfig(r0=self.r0, T=self.eval_T, dt=self.dt, seed=self.resolved_seed)

    def shoot_config(self) -> ShootConfig:
        names = [f.name for f in fields(ShootConfig) if hasattr(self, f.name)]
        return ShootConfig(**{name: getattr(self, name) for name in names})

    def asdict(self) -> dict:
        return _asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        """
        Build a configuration from a flat dictionary.

        Raises
        ------
        ConfigError
            On unknown keys or values that cannot be converted.

        """
        data = dict(data)
        if "sigma2" in data:
            sigma2 = data.pop("sigma2")
            try:
                data["sigma"] = math.sqrt(float(sigma2))
            except (TypeError, ValueError) as err:
                raise ConfigError(f"Invalid value for sigma2: {sigma2!r}") from err
        types = typing.get_type_hints(cls)
        unknown = sorted(set(data) - set(types))
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(unknown)}")
        kwargs = {key: _coerce(key, value, types[key]) for key, value in data.items()}
        return cls(**kwargs)


def read_config_file(path: str | os.PathLike | None = None) -> dict:
    """
    Read a flat YAML (or JSON) configuration file.

    If ``path`` is ``None``, the ``RECYCLOPT_CONFIG`` environment variable is
    used; without it, an empty configuration is returned. A run manifest is
    also accepted, in which case its ``config`` section is used.

    Raises
    ------
    ConfigError
        If the file cannot be read or parsed, or is not a mapping.

    """
    if path is None:
        path = os.getenv(CONFIG_ENV, None)
    if path is None:
        return {}
    path = pathlib.Path(path)
    try:
        with open(path) as config_file:
            config = yaml.safe_load(config_file)
    except OSError as err:
        raise ConfigError(f"Cannot read config file {path}: {err}") from err
    except yaml.YAMLError as err:
        raise ConfigError(f"Cannot parse config file {path}: {err}") from err
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ConfigError(f"Config file {path} must contain a mapping")
    if "config" in config and "subcommand" in config:  # run manifest
        config = config["config"]
    return config


def parse_overrides(args: list[str]) -> dict:
    """
    Parse ``--key=value`` command-line overrides.

    Dashes in keys map to underscores; values are parsed as YAML scalars
    or flow sequences (e.g. ``--k_values=[-0.5,0.5]``).

    """
    overrides = {}
    for arg in args:
        if not arg.startswith("--") or "=" not in arg:
            raise ConfigError(f"Overrides must read --key=value, got {arg!r}")
        key, value = arg[2:].split("=", 1)
        try:
            overrides[key.replace("-", "_")] = yaml.safe_load(value)
        except yaml.YAMLError as err:
            raise ConfigError(f"Cannot parse override {arg!r}: {err}") from err
    return overrides


def resolve_config(file_values: dict, overrides: dict) -> RunConfig:
    """Merge configuration layers with precedence override > file > default."""
    merged = dict(file_values)
    if "sigma2" in overrides or "sigma" in overrides:
        merged.pop("sigma", None)
        merged.pop("sigma2", None)
    merged.update(overrides)
    return RunConfig.from_dict(merged)


# %% local utils
def _coerce(key, value, hint):
    if value is None:
        if type(None) in typing.get_args(hint):
            return None
        raise ConfigError(f"{key} cannot be null")
    if typing.get_origin(hint) is list:
        target = list
    else:
        base = [arg for arg in typing.get_args(hint) if arg is not type(None)]
        target = base[0] if base else hint
    try:
        if target is list:
            if not isinstance(value, (list, tuple)):
                value = [value]
            return [float(item) for item in value]
        if target is bool:
            if isinstance(value, str):
                if value.lower() not in ("true", "false"):
                    raise ValueError(value)
                return value.lower() == "true"
            return bool(value)
        if target is int:
            if float(value) != int(float(value)):
                raise ValueError(value)
            return int(float(value))
        if target is float:
            return float(value)
        return str(value)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"Invalid value for {key}: {value!r}") from err
