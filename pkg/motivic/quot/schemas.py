from pydantic import BaseModel, ConfigDict, Field

from core.schemas import PolySchema
from partitions.enumeration import PartitionSchema


class StratumRowSchema(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    partition: PartitionSchema
    class_: PolySchema = Field(alias="class")


class StratumTableSchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    rows: list[StratumRowSchema]


class OmegaSchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=0)
    omega: list[PolySchema]
