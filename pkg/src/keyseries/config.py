"""Runtime caps and thread policy for the batch commands.

An optional config file (plain key=value lines, # comments) sets the sweep
caps; the KEYSERIES_THREADS environment variable overrides the thread count.
Requests beyond the caps are refused rather than attempted: factorial sweeps
and exact series arithmetic grow too fast for a polite failure later.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Mapping

ABSOLUTE_MAX_N = 9
ENV_THREADS = "KEYSERIES_THREADS"

_KEYS = ("max_n", "max_tdeg", "threads")


class ResourceCapError(Exception):
    """A request exceeded a configured or absolute resource cap."""


@dataclass(frozen=True)
class EngineConfig:
    max_n: int = 7
    max_tdeg: int = 8
    threads: int = 0  # 0: one worker per core

    def effective_threads(self) -> int:
        return self.threads if self.threads > 0 else (os.cpu_count() or 1)

    def check_rank(self, n: int) -> None:
        if n > ABSOLUTE_MAX_N:
            raise ResourceCapError(
                f"rank {n} exceeds the absolute cap {ABSOLUTE_MAX_N}"
            )
        if n > self.max_n:
            raise ResourceCapError(
                f"rank {n} exceeds the configured max_n {self.max_n}"
            )

    def check_tdeg(self, d: int) -> None:
        if d > self.max_tdeg:
            raise ResourceCapError(
                f"T-degree {d} exceeds the configured max_tdeg {self.max_tdeg}"
            )


def parse_config(text: str) -> EngineConfig:
    values: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in _KEYS:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        try:
            num = int(val.strip())
        except ValueError:
            raise ValueError(
                f"config line {lineno}: {key} needs an integer, got {val.strip()!r}"
            ) from None
        if num < 0 or (num == 0 and key != "threads"):
            raise ValueError(f"config line {lineno}: {key} must be positive")
        values[key] = num
    return EngineConfig(**values)


def load_config(
    path: str | None = None, env: Mapping[str, str] = os.environ
) -> EngineConfig:
    if path is None:
        cfg = EngineConfig()
    else:
        with open(path, encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    raw = env.get(ENV_THREADS)
    if raw is not None:
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(
                f"{ENV_THREADS} needs an integer, got {raw!r}"
            ) from None
        if threads < 1:
            raise ValueError(f"{ENV_THREADS} must be >= 1, got {threads}")
        cfg = replace(cfg, threads=threads)
    return cfg
