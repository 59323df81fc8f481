"""Cascade experiment configuration.

A config is a flat JSON object.  Recognised keys::

    protocol        "tree" or "depletion"                  (required)
    lambda1_min     minimum eigenvalue of a pure input
    a, b_re, b_im   explicit input covariance (instead of lambda1_min)
    depth           tree levels, 1..24                     (tree)
    stages          number of BS stages                    (depletion)
    theta_schedule  number, list of numbers, or "random"   (default pi/4)
    seed            integer seed for "random" schedules

Unknown keys are rejected.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .cascade import MAX_TREE_DEPTH
from .covariance import SingleModeCovariance, new_single_mode, pure_state
from .exceptions import GaussBSError

KEYS = {"protocol", "lambda1_min", "a", "b_re", "b_im", "depth", "stages", "theta_schedule", "seed"}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CascadeConfig:
    protocol: str
    state: SingleModeCovariance
    levels: int
    theta_schedule: Union[float, list[float], str]
    seed: Optional[int]

    def angles(self, count: int):
        """Angle source for the tree, or an explicit list for depletion stages."""
        if self.theta_schedule == "random":
            rng = np.random.default_rng(self.seed)
            return rng if self.protocol == "tree" else list(rng.uniform(0.0, math.pi / 2, count))
        if isinstance(self.theta_schedule, list):
            return list(self.theta_schedule)
        return self.theta_schedule if self.protocol == "tree" else [self.theta_schedule] * count


def _number(data: dict, key: str) -> float:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ConfigError(f"field '{key}': expected a finite number, got {value!r}")
    return float(value)


def _integer(data: dict, key: str, lo: int, hi: Optional[int] = None) -> int:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"field '{key}': expected an integer, got {value!r}")
    if value < lo or (hi is not None and value > hi):
        bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
        raise ConfigError(f"field '{key}': must be {bound}, got {value}")
    return value


def _angle(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    if not 0.0 <= value <= math.pi / 2:
        raise ConfigError(f"{where}: angle {value} outside [0, pi/2]")
    return float(value)


def parse_config(data: object) -> CascadeConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = sorted(set(data) - KEYS)
    if unknown:
        raise ConfigError(f"unknown field(s): {', '.join(repr(k) for k in unknown)}")

    protocol = data.get("protocol")
    if protocol not in ("tree", "depletion"):
        raise ConfigError(f"field 'protocol': expected 'tree' or 'depletion', got {protocol!r}")

    explicit = {"a", "b_re", "b_im"} & set(data)
    try:
        if "lambda1_min" in data:
            if explicit:
                raise ConfigError("give either 'lambda1_min' or 'a'/'b_re'/'b_im', not both")
            state = pure_state(_number(data, "lambda1_min"))
        elif "a" in data:
            b = complex(_number(data, "b_re") if "b_re" in data else 0.0,
                        _number(data, "b_im") if "b_im" in data else 0.0)
            state = new_single_mode(_number(data, "a"), b)
        else:
            raise ConfigError("missing input state: set 'lambda1_min' or 'a' (with 'b_re', 'b_im')")
    except GaussBSError as exc:
        raise ConfigError(f"input state: {exc}") from exc

    schedule = data.get("theta_schedule", math.pi / 4)
    if isinstance(schedule, str):
        if schedule != "random":
            raise ConfigError(f"field 'theta_schedule': unknown schedule {schedule!r}")
    elif isinstance(schedule, list):
        if not schedule:
            raise ConfigError("field 'theta_schedule': list is empty")
        schedule = [_angle(x, f"field 'theta_schedule'[{i}]") for i, x in enumerate(schedule)]
    else:
        schedule = _angle(schedule, "field 'theta_schedule'")

    seed = None
    if "seed" in data:
        seed = _integer(data, "seed", 0)
    if schedule == "random" and seed is None:
        raise ConfigError("field 'seed': required when theta_schedule is 'random'")

    if protocol == "tree":
        if "stages" in data:
            raise ConfigError("field 'stages': not used by the tree protocol (use 'depth')")
        if "depth" not in data:
            raise ConfigError("field 'depth': required for the tree protocol")
        levels = _integer(data, "depth", 1, MAX_TREE_DEPTH)
        if isinstance(schedule, list) and len(schedule) < levels:
            raise ConfigError(f"field 'theta_schedule': {len(schedule)} angles for depth {levels}")
        if state.lambda_min >= 0.5:
            raise ConfigError("input state: the tree protocol needs a squeezed input (lambda_min < 1/2)")
    else:
        if "depth" in data:
            raise ConfigError("field 'depth': not used by the depletion protocol (use 'stages')")
        if "stages" in data:
            levels = _integer(data, "stages", 1)
            if isinstance(schedule, list) and len(schedule) != levels:
                raise ConfigError(f"field 'theta_schedule': {len(schedule)} angles for {levels} stages")
        elif isinstance(schedule, list):
            levels = len(schedule)
        else:
            raise ConfigError("field 'stages': required unless theta_schedule is a list")

    return CascadeConfig(protocol, state, levels, schedule, seed)


def load_config(path) -> CascadeConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        return parse_config(data)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
