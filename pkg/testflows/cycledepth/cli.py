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
import argparse

from . import __version__
from . import commands
from .args import (
    checks_type,
    config_type,
    count_type,
    density_type,
    edge_type,
    file_type,
    limit_type,
    order_range_type,
    orders_type,
    seed_type,
)
from .actions import Action
from .config import Config, ConfigError
from .graph import GraphError
from .invariants import SizeError
from .constructive import InvariantViolation
from .generators import GeneratorError, models, sources
from .harness import checks
from .logger import configure

limit_help = "exact solver vertex limit, 0 or none disables it"

#: exit codes
ok_exit_code = 0
failure_exit_code = 1
error_exit_code = 2


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(error_exit_code, f"{self.prog}: error: {message}\n")


def add_input_arguments(parser, dot=False):
    parser.add_argument("input", metavar="file", help="graph file, '-' for stdin")
    parser.add_argument(
        "--format",
        choices=("edgelist", "graph6"),
        default=None,
        help="input format, detected when not given",
    )
    parser.add_argument("--json", action="store_true", help="output JSON")
    if dot:
        parser.add_argument("--dot", metavar="path", help="write DOT rendering to file")


def add_check_argument(parser):
    parser.add_argument(
        "--check",
        dest="check_certificates",
        action="store_true",
        default=None,
        help="assert every step of the cycle construction with the exact solvers",
    )


def argparser():
    parser = ArgumentParser(
        prog="cycledepth",
        description="Long cycles through every edge of 2-connected graphs, "
        "with exact treedepth, treewidth and circumference.",
    )
    parser.add_argument("-v", "--version", action="version", version=__version__)
    parser.add_argument(
        "-c",
        "--config",
        type=config_type,
        default=config_type("__default_user_config__"),
        help="configuration file, default: ~/.cycledepth/config.yaml",
    )
    parser.add_argument("--debug", action="store_true", default=None, help="debug mode")
    parser.add_argument("--log-file", metavar="path", help="also log to a rotating file")
    parser.add_argument("--treedepth-limit", type=limit_type, metavar="n|none", help=limit_help)
    parser.add_argument("--treewidth-limit", type=limit_type, metavar="n|none", help=limit_help)
    parser.add_argument("--circumference-limit", type=limit_type, metavar="n|none", help=limit_help)
    parser.add_argument("--search-limit", type=limit_type, metavar="n|none", help=limit_help)
    parser.add_argument("--workers", type=count_type, metavar="count")

    commands_parser = parser.add_subparsers(title="commands", dest="command", required=True)

    blocks = commands_parser.add_parser("blocks", help="blocks, cutvertices and bridges")
    add_input_arguments(blocks, dot=True)
    blocks.set_defaults(func=commands.blocks)

    td = commands_parser.add_parser("td", help="treedepth")
    add_input_arguments(td)
    td.add_argument("--bounds", action="store_true", help="bounds only, no exact search")
    td.set_defaults(func=commands.treedepth)

    tw = commands_parser.add_parser("tw", help="treewidth")
    add_input_arguments(tw)
    tw.set_defaults(func=commands.treewidth)

    circ = commands_parser.add_parser("circ", help="circumference")
    add_input_arguments(circ, dot=True)
    circ.set_defaults(func=commands.circumference)

    cycle = commands_parser.add_parser("cycle", help="long cycle through an edge")
    add_input_arguments(cycle, dot=True)
    cycle.add_argument("--edge", type=edge_type, required=True, metavar="a,b")
    add_check_argument(cycle)
    cycle.set_defaults(func=commands.cycle)

    verify = commands_parser.add_parser("verify", help="verify a graph corpus")
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--model", choices=models)
    source.add_argument("--graph6", type=file_type("r"), metavar="file")
    verify.add_argument("--n", type=order_range_type, default=(3, 3), metavar="n|n-m")
    verify.add_argument("--seed", type=seed_type, default=0)
    verify.add_argument("--count", type=count_type, default=1)
    verify.add_argument("--density", type=density_type, default=None)
    verify.add_argument("--source", choices=sources, default="atlas")
    verify.add_argument(
        "--checks",
        type=checks_type,
        default=list(checks[:1]),
        help=f"comma separated, any of {', '.join(checks)}",
    )
    verify.add_argument("--out", type=file_type("w"), metavar="file", help="JSON lines report")
    add_check_argument(verify)
    verify.set_defaults(func=commands.verify)

    bounds = commands_parser.add_parser("bounds", help="bound comparison table")
    bounds.add_argument("--kmax", type=int, default=12)
    bounds.add_argument("--csv", action="store_true")
    bounds.set_defaults(func=commands.bounds)

    tightness = commands_parser.add_parser("tightness", help="graphs meeting the bound")
    tightness.add_argument("--nmax", type=int, default=6)
    tightness.set_defaults(func=commands.tightness)

    separation = commands_parser.add_parser(
        "separation", help="treedepth of a path with a triangle"
    )
    separation.add_argument("--orders", type=orders_type, default=[8, 16, 32], metavar="n,...")
    separation.set_defaults(func=commands.separation)

    return parser


def main(argv=None):
    args = argparser().parse_args(argv)

    config: Config = args.config or Config()
    config.update(args)

    Action.debug = config.debug
    configure(config, level=logging.DEBUG if config.debug else logging.INFO, filename=args.log_file)

    try:
        code = args.func(args, config)
    except InvariantViolation as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return failure_exit_code
    except (GraphError, SizeError, GeneratorError, ConfigError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return error_exit_code
    return ok_exit_code if code is None else code


if __name__ == "__main__":
    sys.exit(main())
