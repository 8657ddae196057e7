"""Exact tau functions, Painleve VI reductions and Euler top checks."""

import json
from dataclasses import dataclass

from ._core import (
    InvalidParameters,
    ParseError,
    PoleError,
    normalize_params,
    parse_number,
    pvi_params,
    run_json,
    support_points,
)

__all__ = [
    "InvalidParameters",
    "ParseError",
    "PoleError",
    "Result",
    "euler",
    "normalize_params",
    "oracle",
    "parse_number",
    "pvi_params",
    "run",
    "solve",
    "support_points",
    "tau",
]


@dataclass
class Result:
    exit_code: int
    data: dict
    csv: str = ""

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def run(command, mu, nu, **options) -> Result:
    code, text, csv = run_json(command, tuple(mu), tuple(nu), **options)
    return Result(code, json.loads(text), csv)


def tau(mu, nu, **options) -> Result:
    return run("tau", mu, nu, **options)


def solve(mu, nu, **options) -> Result:
    return run("solve", mu, nu, **options)


def oracle(mu, nu, **options) -> Result:
    return run("oracle", mu, nu, **options)


def euler(mu, nu, **options) -> Result:
    return run("euler", mu, nu, **options)
