"""Experiment configurations for the scripts in ``scripts/``."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class LensSweepConfig:
    m: int = 2
    qmax: int = 10
    family: bool = False  # only q = j^m, p = (1, j, ..., j^(m-1))
    jmax: int = 6
    check: bool = True  # recompute the lowest degree from harmonic dimensions
    check_qmax: int = 400


@dataclass(frozen=True)
class InversePrefixConfig:
    trials: int = 200
    seed: int = 0
    rmax: int = 4
    smax: int = 4
    den: int = 12  # numerators and denominators drawn from 1..den


@dataclass(frozen=True)
class SunadaKleinConfig:
    max_degree: int = 30
    show: int = 10


def add_arguments(parser: argparse.ArgumentParser, cls) -> None:
    """One ``--flag`` per field; booleans become ``--flag/--no-flag``."""
    for f in fields(cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            parser.add_argument(flag, action=argparse.BooleanOptionalAction, default=f.default)
        else:
            parser.add_argument(flag, type=int, default=f.default)


def from_args(cls, args: argparse.Namespace):
    return cls(**{f.name: getattr(args, f.name) for f in fields(cls)})
