# SPDX-FileCopyrightText: Copyright (c) 2023 NVIDIA CORPORATION & AFFILIATES. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Adapted from the configuration wizard of the NVIDIA generative AI examples.

"""Flat configuration classes that read JSON or YAML files and COTYPE_BENCH_* environment variables.

Built on the JSON and YAML wizards of the `dataclass-wizard` package. Keys are
snake_case in files and upper case after the ENV_BASE prefix in the
environment.
"""

import json
import logging
import os
from dataclasses import _MISSING_TYPE, dataclass
from typing import Any, Callable, Dict, List, Mapping, Optional, TextIO, Tuple, Union

import yaml
from dataclass_wizard import JSONWizard, LoadMeta, YAMLWizard, errors, fromdict, json_field
from dataclass_wizard.models import JSONField

from cotype_bench.errors import ConfigError

configclass = dataclass(frozen=True)
ENV_BASE = "COTYPE_BENCH"
_LOGGER = logging.getLogger(__name__)


def configfield(name: str, *, env: bool = True, help_txt: str = "", **kwargs: Any) -> JSONField:
    """Create a data class field stored under `name` in configuration files.

    :param name: The key of the field in files and, upper cased, in the environment.
    :param env: Whether this field can be set from an environment variable.
    :param help_txt: The description printed by `print_help`.
    :raises TypeError: If the provided name is not a string.
    """
    if not isinstance(name, str):
        raise TypeError("Provided name must be a string.")
    meta = kwargs.get("metadata", {})
    meta["env"] = env
    meta["help"] = help_txt
    kwargs["metadata"] = meta
    return json_field(name, **kwargs)


class ConfigWizard(JSONWizard, YAMLWizard):  # type: ignore[misc] # dataclass-wizard doesn't provide stubs
    """A flat configuration class read from a mapping, a file and the environment."""

    @classmethod
    def _fields(cls):
        return cls.__dataclass_fields__.items()  # pylint: disable=no-member; added by dataclass

    @classmethod
    def print_help(cls, help_printer: Callable[[str], Any]) -> None:
        """Write one block per field: key, default, help text, type and environment variable."""
        help_printer("---\n")
        for _, val in cls._fields():
            key = val.json.keys[0]
            if not isinstance(val.default_factory, _MISSING_TYPE):
                default = val.default_factory()
            elif isinstance(val.default, _MISSING_TYPE):
                default = "NO-DEFAULT-VALUE"
            else:
                default = val.default
            help_printer(f"{key}: {default}\n")
            if val.metadata.get("help"):
                help_printer(f"  # {val.metadata['help']}\n")
            typestr = getattr(val.type, "__name__", None) or str(val.type).replace("typing.", "")
            help_printer(f"  # Type: {typestr}\n")
            if val.metadata.get("env", True):
                help_printer(f"  # ENV Variable: {ENV_BASE}_{key.upper()}\n")
            help_printer("\n")

    @classmethod
    def envvars(cls) -> List[Tuple[str, str, type]]:
        """(environment variable, key, type) for every field that may come from the environment."""
        return [
            (f"{ENV_BASE}_{val.json.keys[0].upper()}", val.json.keys[0], val.type)
            for _, val in cls._fields()
            if val.metadata.get("env", True)
        ]

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]], environ: Optional[Mapping[str, str]] = None) -> "ConfigWizard":
        """Build an instance from `data`, filling keys it does not set from the environment.

        :raises ConfigError: If the data is not a mapping or a value cannot be parsed.
        """
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError("Configuration data is not a dictionary.")
        data = dict(data)
        known = {val.json.keys[0] for _, val in cls._fields()}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
        environ = os.environ if environ is None else environ
        for var_name, key, var_type in cls.envvars():
            var_value = environ.get(var_name)
            if var_value:
                update_dict(data, key, try_json_load(var_value))
                _LOGGER.debug("Found EnvVar Config - %s:%s = %s", var_name, str(var_type), repr(var_value))

        LoadMeta(key_transform="SNAKE").bind_to(cls)
        try:
            return fromdict(cls, data)  # type: ignore[no-any-return] # dataclass-wizard doesn't provide stubs
        except (errors.ParseError, errors.MissingFields, ValueError, TypeError) as err:
            _LOGGER.error("Invalid configuration value provided:\n%s", str(err))
            raise ConfigError(f"invalid configuration: {err}") from err

    @classmethod
    def read_file(cls, filepath: str) -> Dict[str, Any]:
        """The key/value document stored in a JSON or YAML file."""
        try:
            with open(filepath, encoding="utf-8") as file:
                data = read_json_or_yaml(file)
        except FileNotFoundError as err:
            _LOGGER.error("The configuration file cannot be found.")
            raise ConfigError(f"configuration file {filepath} not found") from err
        except PermissionError as err:
            _LOGGER.error("Permission denied when trying to read the configuration file.")
            raise ConfigError(f"cannot read configuration file {filepath}") from err
        except ValueError as err:
            _LOGGER.error("Configuration file must be valid JSON or YAML. The following errors occured:\n%s", str(err))
            raise ConfigError(f"configuration file {filepath} is neither JSON nor YAML") from err
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigError(f"configuration file {filepath} must hold a flat key/value document")
        return data

    @classmethod
    def from_file(cls, filepath: str, environ: Optional[Mapping[str, str]] = None) -> "ConfigWizard":
        return cls.from_dict(cls.read_file(filepath), environ)


def read_json_or_yaml(stream: TextIO) -> Any:
    """Read a stream without knowing if it is JSON or YAML formatted.

    JSON is tried first, then YAML; if both fail the ValueError carries both
    parser messages.

    :raises ValueError: If the stream is not seekable or is neither JSON nor YAML.
    """
    exceptions: Dict[str, Union[None, ValueError, yaml.error.YAMLError]] = {"JSON": None, "YAML": None}

    if not stream.seekable():
        raise ValueError("The provided stream must be seekable.")

    try:
        data = json.loads(stream.read())
    except ValueError as err:
        exceptions["JSON"] = err
    else:
        return data
    finally:
        stream.seek(0)

    try:
        data = yaml.safe_load(stream.read())
    except (yaml.error.YAMLError, ValueError) as err:
        exceptions["YAML"] = err
    else:
        return data

    err_msg = "\n\n".join([key + " Parser Errors:\n" + str(val) for key, val in exceptions.items()])
    raise ValueError(err_msg)


def try_json_load(value: str) -> Any:
    """Parse the value as JSON, returning the raw string when that fails."""
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value


def update_dict(data: Dict[str, Any], key: str, value: Any, overwrite: bool = False) -> None:
    """Set data[key] unless the key is already present and overwrite is False."""
    if overwrite or key not in data:
        data[key] = value
