"""Command-line experiment runner."""

from ._config import RunConfig  # noqa
from ._config import read_config_file, parse_overrides, resolve_config  # noqa

from ._runner import EXIT_CODES, exit_code  # noqa
from ._runner import load_apps  # noqa
from ._runner import setup_main_logger, setup_function_logger  # noqa
from ._runner import write_csv, write_manifest  # noqa
from ._runner import run_app  # noqa
