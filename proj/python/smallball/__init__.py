"""Exact small-ball masses and numerical mode classification."""

from ._core import (
    Ball,
    Box,
    Interval,
    Measure,
    Neighbourhood,
    NotInSupport,
    Norm,
    Point,
    RadiusSchedule,
    RatioRow,
    RatioTrace,
    Segment,
    SmallBallMap,
    Status,
    TranslationSet,
    Verdict,
    auto_search_grid,
    ball_mass,
    check_clr,
    check_E_strong_mode,
    check_local_mode,
    check_strong_mode,
    check_uniformity,
    check_weak_mode,
    density_at,
    gallery,
    load_measure,
    mass,
    oracle,
    parse_norm,
    ratio_trace,
    total_mass,
)

__all__ = [name for name in dir() if not name.startswith("_")]
