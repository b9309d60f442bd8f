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
import sys
import argparse

from argparse import ArgumentTypeError

from traceback import print_exception

file_type = argparse.FileType


def edge_type(v):
    """Edge argument type 'a,b'."""
    try:
        a, b = (int(x) for x in v.split(","))
        assert a >= 0 and b >= 0, f"{v}: vertices must be >= 0"
        assert a != b, f"{v}: endpoints must differ"
    except AssertionError as e:
        raise ArgumentTypeError(str(e))
    except Exception:
        raise ArgumentTypeError(f"invalid edge {v}, expected a,b")
    return a, b


def checks_type(v):
    """Comma separated verification checks."""
    from .harness import checks, check_aliases

    names = []
    for name in (name.strip() for name in v.split(",")):
        if not name:
            continue
        name = check_aliases.get(name, name)
        if name not in checks:
            raise ArgumentTypeError(
                f"unknown check {name}, expected one of {', '.join(checks)}"
            )
        names.append(name)
    return names


def count_type(v):
    """Count argument type."""
    try:
        v = int(v)
    except ValueError:
        raise ArgumentTypeError(f"{v} is not an integer")
    if not v >= 1:
        raise ArgumentTypeError(f"{v} must be >= 1")
    return v


def limit_type(v):
    """Solver limit: positive integer, 0 or 'none' for no limit."""
    if v in ("none", "0"):
        return 0
    return count_type(v)


def order_range_type(v):
    """Graph order 'n' or range 'n-m'."""
    try:
        low, _, high = v.partition("-")
        low = int(low)
        high = int(high) if high else low
        assert 1 <= low <= high, f"{v}: expected 1 <= n <= m"
    except AssertionError as e:
        raise ArgumentTypeError(str(e))
    except ValueError:
        raise ArgumentTypeError(f"invalid order {v}, expected n or n-m")
    return low, high


def seed_type(v):
    """64-bit unsigned seed."""
    try:
        v = int(v, 0)
    except ValueError:
        raise ArgumentTypeError(f"{v} is not an integer")
    if not 0 <= v < 2**64:
        raise ArgumentTypeError(f"{v} must be a 64-bit unsigned integer")
    return v


def density_type(v):
    """Edge density in [0, 1]."""
    try:
        v = float(v)
    except ValueError:
        raise ArgumentTypeError(f"{v} is not a number")
    if not 0.0 <= v <= 1.0:
        raise ArgumentTypeError(f"{v} must be in [0, 1]")
    return v


def path_type(v, check_exists=True):
    """Path argument type."""
    v = os.path.abspath(os.path.expanduser(v))
    if check_exists and not os.path.exists(v):
        raise ArgumentTypeError(f"{v} does not exist")
    return v


def config_type(v):
    """Program configuration file type."""
    from .config import parse_config, default_user_config

    if v == "__default_user_config__":
        if os.path.exists(default_user_config):
            v = default_user_config
        else:
            return None

    v = path_type(v)
    try:
        config = parse_config(v)
        config.config_file = v
    except Exception as e:
        if "--debug" in sys.argv:
            print_exception(e)
        if "unexpected keyword argument" in str(e):
            e = str(e).replace(".__init__()", "") + ", please remove it"
        raise ArgumentTypeError(str(e))

    return config


def orders_type(v):
    """Comma separated graph orders."""
    try:
        orders = [int(x) for x in v.split(",")]
        assert all(n >= 3 for n in orders), f"{v}: orders must be >= 3"
    except AssertionError as e:
        raise ArgumentTypeError(str(e))
    except ValueError:
        raise ArgumentTypeError(f"invalid orders {v}, expected n,...")
    return orders
