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
import time
import logging

from .logger import logger


class Action:
    """Logged unit of work.

    Entering logs the name, leaving logs the elapsed time at the same level.
    A failing body is logged at error level and re-raised unless
    ``ignore_fail`` is set, in which case the exception is kept in
    ``failed``.
    """

    debug = False

    def __init__(
        self,
        name: str,
        ignore_fail: bool = False,
        level: int = logging.INFO,
        stacklevel: int = 2,
        graph: str = "",
        task: int = None,
        check: str = "",
    ):
        self.name = name
        self.ignore_fail = ignore_fail
        self.level = level
        self.stacklevel = stacklevel
        self.failed = None
        self.started = None
        self.elapsed = None
        self.extra = {
            "graph": graph or "-",
            "task": "-" if task is None else str(task),
            "check": check or "-",
        }

    def _log(self, message, level=None, stacklevel=None):
        logger.log(
            msg=message,
            level=self.level if level is None else level,
            stacklevel=(self.stacklevel + 2) if stacklevel is None else stacklevel,
            extra=self.extra,
        )

    def __enter__(self):
        self._log(f"🍀 {self.name}")
        self.started = time.monotonic()
        return self

    def note(self, message, stacklevel=None):
        self._log(f"   {message}", stacklevel=None if stacklevel is None else stacklevel + 1)

    def __exit__(self, exc_type, exc_value, exc_traceback):
        self.elapsed = time.monotonic() - self.started

        if exc_value is None:
            self._log(f"✅ {self.name} in {self.elapsed:.3f}s", level=min(self.level, logging.DEBUG))
            return False

        self.failed = exc_value
        message = f"❌ {exc_type.__name__ or 'Error'}: {exc_value}"
        if self.debug:
            logger.exception(msg=message, stacklevel=self.stacklevel + 1, extra=self.extra)
        else:
            self._log(message, level=logging.ERROR)
        return self.ignore_fail
