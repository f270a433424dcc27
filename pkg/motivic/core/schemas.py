"""
JSON shapes of the ring-core values.

Polynomial:  {"terms": [{"u": i, "v": j, "coef": "string-int"}, ...]}
             marker exponents appear as "s": [e1, ..., e9] only when non-zero
Series:      {"order": N, "coeffs": [Polynomial, ...]}
"""

from pydantic import BaseModel, ConfigDict, Field, model_serializer


class TermSchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    u: int = Field(ge=0)
    v: int = Field(ge=0)
    s: list[int] | None = None
    coef: str

    @model_serializer(mode="wrap")
    def _drop_empty_markers(self, handler):
        data = handler(self)
        if data.get("s") is None:
            data.pop("s", None)
        return data


class PolySchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    terms: list[TermSchema]


class SeriesSchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=0)
    coeffs: list[PolySchema]
