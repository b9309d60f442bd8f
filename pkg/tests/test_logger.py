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
import sys
import logging

from testflows.cycledepth.config import Config
from testflows.cycledepth.logger import (
    LogFileFormatter,
    configure,
    decode_message,
    default_config,
    encode_message,
    encoded_message_prefix,
    logger,
)


def test_decode_message():
    message = "line one\nline two"
    assert decode_message(encoded_message_prefix + encode_message(message)) == message
    assert decode_message("plain") == "plain"
    assert decode_message(encoded_message_prefix + "{not json") == encoded_message_prefix + "{not json"


def test_log_file_formatter_folds_exception():
    formatter = LogFileFormatter("%(message)s")
    try:
        raise ValueError("boom")
    except ValueError:
        record = logging.LogRecord("x", logging.ERROR, __file__, 1, "failed", None, None)
        record.exc_info = sys.exc_info()
    line = formatter.format(record)
    assert "\n" not in line
    decoded = decode_message(line)
    assert decoded.startswith("failed\n")
    assert "ValueError: boom" in decoded


def test_default_config_with_log_file(tmp_path):
    config = default_config(filename=str(tmp_path / "cycledepth.log"))
    assert config["loggers"]["testflows.cycledepth"]["handlers"] == ["console", "logfile"]
    assert config["handlers"]["logfile"]["backupCount"] == 10


def test_log_file_columns(tmp_path):
    path = tmp_path / "cycledepth.log"
    configure(Config(), level=logging.DEBUG, filename=str(path))
    logger.info("hello", extra={"graph": "C~", "task": 7, "check": "ab_path"})
    for handler in logging.getLogger("testflows.cycledepth").handlers:
        handler.flush()
    line = path.read_text().splitlines()[-1]
    columns = line.split(",", 8)
    assert columns[2:6] == ["INFO", "C~", "7", "ab_path"]
    assert decode_message(columns[8]) == "hello"
