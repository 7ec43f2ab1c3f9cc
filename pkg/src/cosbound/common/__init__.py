"""Common utilities and helpers shared across modules."""

from .exceptions import (
    CosboundException,
    DomainError,
    NotConverged,
    MaxDepthExceeded,
    AllStartsFailed,
    Infeasible,
    NoRestriction,
    CertificationFailed,
    NoFeasibleSample,
    ConfigError,
)
from .config import Settings, load_settings
from .logging import Logger, get_logger

__all__ = [
    "CosboundException",
    "DomainError",
    "NotConverged",
    "MaxDepthExceeded",
    "AllStartsFailed",
    "Infeasible",
    "NoRestriction",
    "CertificationFailed",
    "NoFeasibleSample",
    "ConfigError",
    "Settings",
    "load_settings",
    "Logger",
    "get_logger",
]
