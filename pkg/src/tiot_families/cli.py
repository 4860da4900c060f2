#
# SPDX-License-Identifier: MIT
#
# Copyright (c) 2024 The tiot-families authors.
#
# This file is part of tiot-families.
#
# This file is published using the MIT license.
# Refer to LICENSE for more information
#
from argparse import ArgumentParser
from collections.abc import Sequence
from typing import Optional

from pdm_pfsc.logging import setup_logger

from .commands import CommandBase, create_commands


def build_parser(
    commands: Optional[Sequence[CommandBase]] = None,
) -> ArgumentParser:
    parser = ArgumentParser(
        prog="tiot",
        description="Families of two-impulse optimal transfers between"
        " elliptic orbits",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        dest="verbose",
        action="count",
        default=0,
        help="Increase the log verbosity. Repeat for more detail.",
    )
    parser.add_argument(
        "--quiet",
        "-q",
        dest="quiet",
        action="store_true",
        help="Only report errors.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in commands or create_commands():
        sub = subparsers.add_parser(command.name, help=command.description)
        command.add_arguments(sub)
        sub.set_defaults(handler=command)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    options = parser.parse_args(argv)
    setup_logger(0 if options.quiet else options.verbose)
    command: CommandBase = options.handler
    return command.handle(options)
