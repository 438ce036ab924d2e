"""Python access to the dgng C++ core."""

from ._dgng import (
    BoundsError,
    CapacityReport,
    ConfigError,
    ContractError,
    DataError,
    Dataset,
    GngParams,
    Model,
    StateError,
    TrainConfig,
    activity,
    capacity,
    cosine_similarity,
    evaluate,
    from_bytes,
    load_idx,
    load_model,
    load_split,
    train_new,
)

__all__ = [name for name in dir() if not name.startswith("_")]
