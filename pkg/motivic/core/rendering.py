"""
Output formats of the management commands.

Series render as their coefficient list (text), a (n, coefficient) table
(csv) or the Series JSON schema (json). Tables are pandas frames.
"""

import pandas as pd
from django.db import models
from pydantic import BaseModel

from .series import Series


class OutputFormat(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
    TEXT = "text", "Text"


def series_frame(series: Series) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "n": list(range(series.order + 1)),
            "coefficient": [str(c) for c in series.coeffs],
        }
    )


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == OutputFormat.JSON:
        return frame.to_json(orient="records")
    if fmt == OutputFormat.CSV:
        return frame.to_csv(index=False).rstrip("\n")
    if fmt == OutputFormat.TEXT:
        return frame.to_string(index=False)
    raise ValueError(f"Unknown output format {fmt!r}.")


def render_model(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2)


def render_series(series: Series, fmt: str) -> str:
    if fmt == OutputFormat.JSON:
        return render_model(series.to_schema())
    if fmt == OutputFormat.TEXT:
        return str(series)
    return render_frame(series_frame(series), fmt)
