"""Cross-platform language shift analysis."""

import json
import os
import pathlib

_data = pathlib.Path(__file__).with_name("data")
if _data.is_dir():
    os.environ.setdefault("LANGSHIFT_DATA_DIR", str(_data))

from ._core import (  # noqa: E402
    ConfigError,
    DataError,
    LangshiftError,
    NumericError,
    TestResult,
    canonical_video_id,
    default_data_dir,
    jsd,
    mann_whitney_u,
    ordering_check,
    paired_t,
    remove_stopwords,
    stem,
    student_t_cdf,
    tokenize,
    write_fixture,
)
from ._core import analyze_json as _analyze_json  # noqa: E402


def analyze(config, output=None, window_hours=None, formats=None):
    """Run the pipeline for a config file and return the report as a dict."""
    return json.loads(_analyze_json(str(config), output, window_hours, formats))


__all__ = [
    "ConfigError",
    "DataError",
    "LangshiftError",
    "NumericError",
    "TestResult",
    "analyze",
    "canonical_video_id",
    "default_data_dir",
    "jsd",
    "mann_whitney_u",
    "ordering_check",
    "paired_t",
    "remove_stopwords",
    "stem",
    "student_t_cdf",
    "tokenize",
    "write_fixture",
]
