"""Streaming maximum weighted matching estimation."""

from ._core import (
    LevelSchedule,
    LevelState,
    RunReport,
    Stream,
    StreamHeader,
    WmstreamError,
    arboricity,
    build_schedule,
    combine,
    exact_mcm,
    exact_mwm,
    generate,
    parse_stream,
    run,
    sandwich_holds,
)

__all__ = [
    "LevelSchedule",
    "LevelState",
    "RunReport",
    "Stream",
    "StreamHeader",
    "WmstreamError",
    "arboricity",
    "build_schedule",
    "combine",
    "exact_mcm",
    "exact_mwm",
    "generate",
    "parse_stream",
    "run",
    "sandwich_holds",
]
