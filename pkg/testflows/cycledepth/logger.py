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
import json
import logging
import logging.config
import logging.handlers

logger = logging.getLogger("testflows.cycledepth")

encoded_message_prefix = "✉ "

#: extra columns every record carries
default_extra = {
    "graph": "-",
    "task": "-",
    "check": "-",
}


def decode_message(msg):
    """Decode encoded message."""
    if msg.startswith(encoded_message_prefix):
        try:
            return json.loads(msg[len(encoded_message_prefix) :])
        except Exception:
            # not an encoded message after all
            pass
    return msg


def encode_message(msg):
    """Encode message."""
    return json.dumps(msg)


class LogFileFormatter(logging.Formatter):
    def format(self, record):
        """Format record and fold multi-line message, exception
        and stack trace into a single encoded line."""
        message = record.getMessage()

        if record.exc_info and not record.exc_text:
            record.exc_text = self.formatException(record.exc_info)

        if record.exc_text:
            if message[-1:] != "\n":
                message = message + "\n"
            message = message + record.exc_text
        if record.stack_info:
            if message[-1:] != "\n":
                message = message + "\n"
            message = message + self.formatStack(record.stack_info)

        record.message = encoded_message_prefix + encode_message(message)
        if self.usesTime():
            record.asctime = self.formatTime(record, self.datefmt)

        return self.formatMessage(record)


class LogFileHandler(logging.handlers.RotatingFileHandler):
    pass


class ConsoleHandler(logging.StreamHandler):
    pass


class LoggerAdapter(logging.LoggerAdapter):
    def process(self, msg, kwargs):
        extra = dict(self.extra)
        for k, v in (kwargs.get("extra") or {}).items():
            if v is None or v == "":
                continue
            extra[k] = v
        kwargs["extra"] = extra
        return msg, kwargs


logger = LoggerAdapter(logger, default_extra)


def default_config(level="INFO", filename=None):
    """Return default logging configuration document."""
    config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "console": {
                "format": "%(asctime)s %(message)s",
                "datefmt": "%H:%M:%S",
            },
            "logfile": {
                "class": "testflows.cycledepth.logger.LogFileFormatter",
                "format": (
                    "%(asctime)s,%(levelname)s,%(graph)s,%(task)s,%(check)s,"
                    "%(threadName)s,%(funcName)s,%(message)s"
                ),
                "datefmt": "%Y-%m-%d,%H:%M:%S",
            },
        },
        "handlers": {
            "console": {
                "level": level,
                "formatter": "console",
                "class": "testflows.cycledepth.logger.ConsoleHandler",
                "stream": "ext://sys.stderr",
            },
        },
        "loggers": {
            "testflows.cycledepth": {
                "level": level,
                "handlers": ["console"],
            }
        },
    }
    if filename is not None:
        config["handlers"]["logfile"] = {
            "level": level,
            "formatter": "logfile",
            "class": "testflows.cycledepth.logger.LogFileHandler",
            "filename": filename,
            "maxBytes": 52428800,  # 50MB 50*2**20
            "backupCount": 10,
        }
        config["loggers"]["testflows.cycledepth"]["handlers"].append("logfile")
    return config


def configure(config, level=logging.INFO, filename=None):
    """Apply logging configuration."""
    level = logging.getLevelName(level)

    if config.logger_config is None:
        config.logger_config = default_config(level=level, filename=filename)

    logger_config = config.logger_config

    for handler in logger_config["handlers"].values():
        handler["level"] = level

    logger_config["loggers"]["testflows.cycledepth"]["level"] = level

    logging.config.dictConfig(logger_config)
