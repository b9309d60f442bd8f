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
import argparse
import textwrap

import pytest

from testflows.cycledepth.config import Config, ConfigError, parse_config, read
from testflows.cycledepth.invariants import default_search_limit


@pytest.fixture
def config_file(tmp_path):
    def write(text):
        path = tmp_path / "config.yaml"
        path.write_text(textwrap.dedent(text))
        return str(path)

    return write


def test_defaults():
    config = Config()
    assert config.workers == 1
    assert config.check_certificates is False
    assert config.limits.treedepth == 20
    assert config.limits.search == default_search_limit


def test_parse_config(config_file):
    config = parse_config(
        config_file(
            """
            config:
              limits:
                treedepth: 24
                circumference: null
              check_certificates: true
              workers: 4
            """
        )
    )
    assert config.limits.treedepth == 24
    assert config.limits.circumference is None
    assert config.limits.treewidth == 18
    assert config.check_certificates is True
    assert config.workers == 4


@pytest.mark.parametrize(
    "text, message",
    [
        ("other: 1\n", "config: entry is missing"),
        ("config:\n  workers: 0\n", "config.workers: is not an integer > 0"),
        ("config:\n  workers: true\n", "config.workers: is not an integer > 0"),
        ("config:\n  limits:\n    depth: 3\n", "config.limits.depth: unknown limit"),
        ("config:\n  limits:\n    treewidth: -1\n", "config.limits.treewidth: is not an integer > 0"),
        ("config:\n  debug: 1\n", "config.debug: not a boolean"),
        ("config:\n  config_file: x.yaml\n", "config.config_file: should not be defined"),
        ("config:\n  colour: red\n", "unexpected keyword argument"),
    ],
)
def test_invalid_config(config_file, text, message):
    with pytest.raises(ConfigError, match=message):
        parse_config(config_file(text))


def test_logger_config_requires_console_handler(config_file):
    text = """
        config:
          logger_config:
            version: 1
            loggers:
              testflows.cycledepth:
                handlers: [file]
        """
    with pytest.raises(ConfigError, match="missing console"):
        parse_config(config_file(text))


def test_environment_expansion(config_file, monkeypatch):
    monkeypatch.setenv("CYCLEDEPTH_REPORT_DIR", "/tmp/reports")
    doc = read(config_file("config:\n  report: ${CYCLEDEPTH_REPORT_DIR}/out.jsonl\n"))
    assert doc["config"]["report"] == "/tmp/reports/out.jsonl"


def test_undefined_environment_variable(config_file, monkeypatch):
    monkeypatch.delenv("CYCLEDEPTH_UNDEFINED", raising=False)
    with pytest.raises(ConfigError, match="CYCLEDEPTH_UNDEFINED"):
        parse_config(config_file("config:\n  debug: ${CYCLEDEPTH_UNDEFINED}\n"))


def test_update_from_arguments():
    config = Config()
    args = argparse.Namespace(
        check_certificates=True,
        workers=None,
        debug=None,
        treedepth_limit=0,
        treewidth_limit=12,
        circumference_limit=None,
        search_limit=None,
    )
    config.update(args)
    assert config.check_certificates is True
    assert config.workers == 1
    assert config.limits.treedepth is None
    assert config.limits.treewidth == 12
    assert config.limits.circumference == 18
