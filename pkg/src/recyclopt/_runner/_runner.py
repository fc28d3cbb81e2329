"""Experiment runner: logging, app discovery, artifacts and exit codes."""

__all__ = [
    "EXIT_CODES",
    "exit_code",
    "load_apps",
    "setup_main_logger",
    "setup_function_logger",
    "write_csv",
    "write_manifest",
    "run_app",
]

import importlib.util
import json
import logging
import os
import pathlib
import warnings

from datetime import datetime

import numpy as np

from .. import __version__
from .._exceptions import ConfigError, SolverError, ValidationError
from ._config import RunConfig

LOG_ENV = "RECYCLOPT_LOG"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

# exit status per error family; anything else exits with 1
EXIT_CODES = {
    ConfigError: 2,
    ValidationError: 3,
    SolverError: 4,
    OSError: 5,
}


def exit_code(err: BaseException) -> int:
    """Exit status reported for an error raised by an app."""
    for cls, code in EXIT_CODES.items():
        if isinstance(err, cls):
            return code
    return 1


# Apps
def _get_app_dir():
    PKG_DIR = pathlib.Path(os.path.realpath(__file__)).parents[1].resolve()
    return os.path.join(PKG_DIR, "_apps")


# Logs
def _get_log_dir(output_dir):
    LOG_DIR = os.getenv(LOG_ENV, None)
    if LOG_DIR is None:  # default to the run output folder
        LOG_DIR = os.path.join(output_dir, "log")
    os.makedirs(LOG_DIR, exist_ok=True)
    return LOG_DIR


# Configure main session logging
def setup_main_logger(output_dir):
    LOG_DIR = _get_log_dir(output_dir)
    session_start_time = datetime.now().strftime("%Y%m%d_%H%M%S")
    main_log_filename = os.path.join(LOG_DIR, f"session_{session_start_time}.log")
    logging.basicConfig(
        level=logging.DEBUG,
        format=LOG_FORMAT,
        handlers=[logging.FileHandler(main_log_filename), logging.StreamHandler()],
        force=True,
    )
    logging.getLogger("numba").setLevel(logging.WARNING)
    logging.captureWarnings(True)
    return logging.getLogger("main")


def setup_function_logger(function_name, output_dir):
    LOG_DIR = _get_log_dir(output_dir)
    function_start_time = datetime.now().strftime("%Y%m%d_%H%M%S")
    function_log_filename = os.path.join(
        LOG_DIR, f"{function_name}_{function_start_time}.log"
    )
    function_logger = logging.getLogger(function_name)
    function_logger.setLevel(logging.DEBUG)
    for handler in list(function_logger.handlers):
        function_logger.removeHandler(handler)
        handler.close()
    handler = logging.FileHandler(function_log_filename)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    function_logger.addHandler(handler)
    return function_logger


def load_apps(logger=None):
    """
    Load the subcommand implementations.

    Every ``_apps/<name>.py`` module must define a function ``<name>``
    taking ``(config, logger)`` and returning a dictionary of results to be
    stored in the run manifest.

    """
    APP_DIR = _get_app_dir()
    apps = {}
    for filename in sorted(os.listdir(APP_DIR)):
        if filename.endswith(".py") and not filename.startswith("_"):
            filepath = os.path.join(APP_DIR, filename)
            module_name = filename[:-3]
            spec = importlib.util.spec_from_file_location(
                f"recyclopt._apps.{module_name}", filepath
            )
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)
            try:
                func = getattr(module, module_name)
            except AttributeError as err:
                if logger is not None:
                    logger.error(
                        f"App function {module_name} must have the same name as its module."
                    )
                raise ImportError(f"{filepath} does not define {module_name}") from err
            apps[module_name] = func
            if logger is not None:
                logger.debug(f"Loaded app: {module_name} from {filepath}")
    return apps


# Artifacts
def write_csv(df, output_dir, filename, logger=None) -> str:
    """Write a table under the output directory and return its path."""
    path = os.path.join(output_dir, filename)
    df.to_csv(path, index=False)
    if logger is not None:
        logger.info(f"Wrote {path} ({len(df)} rows)")
    return path


def write_manifest(
    subcommand: str, config: RunConfig, results: dict, output_dir, logger=None
) -> str:
    """
    Write ``manifest.json`` echoing the resolved configuration and results.

    The manifest can be passed back as ``--config`` to reproduce the run.

    """
    manifest = {
        "subcommand": subcommand,
        "version": __version__,
        "config": config.asdict(),
        **_jsonable(results),
    }
    path = os.path.join(output_dir, "manifest.json")
    with open(path, "w") as manifest_file:
        json.dump(manifest, manifest_file, indent=2, allow_nan=True)
    if logger is not None:
        logger.info(f"Wrote {path}")
    return path


def run_app(subcommand: str, config: RunConfig) -> int:
    """
    Run one subcommand end-to-end and return its exit status.

    Sets up the session and subcommand loggers, creates the output
    directory, calls the app and writes the manifest. Errors are logged
    and mapped to exit codes through :func:`exit_code`.

    """
    output_dir = config.output_dir
    try:
        os.makedirs(output_dir, exist_ok=True)
        logger = setup_main_logger(output_dir)
    except OSError as err:
        logging.getLogger("main").error(f"Cannot prepare output directory: {err}")
        return exit_code(err)

    try:
        apps = load_apps(logger)
        function = apps[subcommand]
        function_logger = setup_function_logger(subcommand, output_dir)
        logger.info(f"Calling {subcommand} with config {config.asdict()}")
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            results = function(config, function_logger)
        write_manifest(subcommand, config, results, output_dir, logger)
    except Exception as err:
        code = exit_code(err)
        logger.error(f"{subcommand} failed ({type(err).__name__}, exit {code}): {err}")
        return code
    logger.info(f"{subcommand} done")
    return 0


# %% local utils
def _jsonable(value):
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    return value
