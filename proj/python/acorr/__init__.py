"""Autocorrelation toolkit: C++ core with thin Python bindings.

The heavy lifting (ACF, Ljung-Box, rolling scans, bar aggregation, synthetic
series) lives in the compiled ``_core`` module; this package just re-exports it.
"""

from ._core import (
    acf,
    aggregate_trades,
    bucket_start,
    chi2_cdf,
    chi2_quantile,
    chi2_sf,
    confidence_band,
    format_iso8601,
    generate_series,
    ljung_box,
    normal_quantile,
    parse_iso8601,
    returns_from_closes,
    rolling_acf1,
    theoretical_acf_ar1,
)

__version__ = "0.1.0"

__all__ = [
    "acf",
    "aggregate_trades",
    "bucket_start",
    "chi2_cdf",
    "chi2_quantile",
    "chi2_sf",
    "confidence_band",
    "format_iso8601",
    "generate_series",
    "ljung_box",
    "normal_quantile",
    "parse_iso8601",
    "returns_from_closes",
    "rolling_acf1",
    "theoretical_acf_ar1",
]
