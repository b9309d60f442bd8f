# Copyright 2023 Katteli Inc.
# TestFlows.com Open-Source Software Testing Framework (http://testflows.com)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import os
import re
import yaml
import logging
import logging.config
import dataclasses

from dataclasses import dataclass

from ..invariants import (
    default_treedepth_limit,
    default_treewidth_limit,
    default_circumference_limit,
    default_search_limit,
)

# add support for parsing ${ENV_VAR} in config
env_pattern = re.compile(r".*?\${(.*?)}.*?")

default_user_config = os.path.expanduser("~/.cycledepth/config.yaml")


def env_constructor(loader, node):
    value = loader.construct_scalar(node)
    for group in env_pattern.findall(value):
        env_value = os.environ.get(group)
        if env_value is None:
            assert (
                False
            ), f"environment variable ${group} used in the config is not defined"
        value = value.replace(f"${{{group}}}", env_value)
    return value


yaml.add_implicit_resolver("!path", env_pattern, None, yaml.SafeLoader)
yaml.add_constructor("!path", env_constructor, yaml.SafeLoader)


class ConfigError(Exception):
    pass


@dataclass
class limits:
    """Exact solver vertex limits, ``None`` disables a limit."""

    treedepth: int = default_treedepth_limit
    treewidth: int = default_treewidth_limit
    circumference: int = default_circumference_limit
    search: int = default_search_limit


@dataclass
class Config:
    """Program configuration class."""

    limits: limits = dataclasses.field(default_factory=limits)
    check_certificates: bool = False
    workers: int = 1
    debug: bool = False
    logger_config: dict = None
    config_file: str = None

    def update(self, args):
        """Update configuration using command line arguments."""
        for attr in ("check_certificates", "workers", "debug"):
            arg_value = getattr(args, attr, None)
            if arg_value is not None:
                setattr(self, attr, arg_value)

        for attr in ("treedepth", "treewidth", "circumference", "search"):
            arg_value = getattr(args, f"{attr}_limit", None)
            if arg_value is not None:
                setattr(self.limits, attr, arg_value or None)


def read(path: str):
    """Load raw configuration document."""
    with open(path, "r") as f:
        return yaml.load(f, Loader=yaml.SafeLoader)


def _positive_or_none(doc: dict, key: str, path: str):
    v = doc.get(key)
    assert v is None or (
        isinstance(v, int) and not isinstance(v, bool) and v > 0
    ), f"{path}.{key}: is not an integer > 0"


def parse_config(filename: str):
    """Load and parse yaml configuration file into config object."""
    try:
        return _parse_config(filename)
    except AssertionError as e:
        raise ConfigError(str(e)) from e


def _parse_config(filename: str):
    doc = read(filename)

    if not isinstance(doc, dict) or doc.get("config") is None:
        assert False, "config: entry is missing"

    doc = doc["config"]
    assert isinstance(doc, dict), "config: is not a dictionary"

    if doc.get("limits") is not None:
        assert isinstance(doc["limits"], dict), "config.limits: is not a dictionary"
        for key in doc["limits"]:
            assert key in (
                "treedepth",
                "treewidth",
                "circumference",
                "search",
            ), f"config.limits.{key}: unknown limit"
            _positive_or_none(doc["limits"], key, "config.limits")
        doc["limits"] = limits(**doc["limits"])

    if doc.get("check_certificates") is not None:
        assert isinstance(
            doc["check_certificates"], bool
        ), "config.check_certificates: is not a boolean"

    if doc.get("workers") is not None:
        v = doc["workers"]
        assert (
            isinstance(v, int) and not isinstance(v, bool) and v > 0
        ), "config.workers: is not an integer > 0"

    if doc.get("debug") is not None:
        assert isinstance(doc["debug"], bool), "config.debug: not a boolean"

    if doc.get("logger_config") is not None:
        assert isinstance(
            doc["logger_config"], dict
        ), "config.logger_config: is not a dictionary"
        assert (
            doc["logger_config"].get("loggers") is not None
        ), "config.logger_config.loggers is not defined"
        assert (
            doc["logger_config"]["loggers"].get("testflows.cycledepth") is not None
        ), 'config.logger_config.loggers."testflows.cycledepth" is not defined'
        assert (
            doc["logger_config"]["loggers"]["testflows.cycledepth"].get("handlers")
            is not None
        ), 'config.logger_config.loggers."testflows.cycledepth".handlers is not defined'
        assert isinstance(
            doc["logger_config"]["loggers"]["testflows.cycledepth"]["handlers"], list
        ), 'config.logger_config.loggers."testflows.cycledepth".handlers is not a list'
        assert (
            "console" in doc["logger_config"]["loggers"]["testflows.cycledepth"]["handlers"]
        ), 'config.logger_config.loggers."testflows.cycledepth".handlers missing console'

        try:
            logging.config.dictConfig(doc["logger_config"])
        except Exception as e:
            assert False, f"config.logger_config: {e}"

    if doc.get("config_file") is not None:
        assert False, "config.config_file: should not be defined"

    try:
        return Config(**doc)
    except Exception as e:
        assert False, f"config: {e}"
