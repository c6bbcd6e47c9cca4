#!/usr/bin/env python3
"""
SUPERCHAR - Command Request Models
Pydantic models validating every CLI request before dispatch
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.combinatorics import Partition, parse_partition
from ..data import compute_config


class CommandRequest(BaseModel):
    """Fields shared by every subcommand."""
    model_config = ConfigDict(frozen=True)

    command: str
    format: str = Field(default=compute_config.DEFAULT_FORMAT, pattern='^(json|text)$')


def _parameter(default=..., minimum: int = 0):
    return Field(default=default, ge=minimum, le=compute_config.MAX_PARAMETER)


def _degree():
    return Field(default=compute_config.DEFAULT_DEGREE, ge=0, le=compute_config.MAX_DEGREE)


class PartitionField(BaseModel):
    """Mixin validating bracketed partitions such as [3,1] or []."""

    @field_validator('lam', 'mu', 'gamma', mode='before', check_fields=False)
    @classmethod
    def _parse(cls, value):
        if isinstance(value, Partition):
            return value
        if isinstance(value, (list, tuple)):
            return Partition(tuple(int(v) for v in value))
        return parse_partition(str(value))


class HookSchurRequest(CommandRequest, PartitionField):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: Partition
    m: int = _parameter()
    n: int = _parameter()


class CharacterRequest(CommandRequest, PartitionField):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str = Field(pattern='^(spo|osp)$')
    lam: Partition
    d: int = _parameter(minimum=1)
    m: int = _parameter()
    n: int = _parameter()
    degree: int = _degree()


class TrivialCharacterRequest(CommandRequest):
    group: str = Field(pattern='^(O|Sp)$')
    d: int = _parameter(minimum=1)
    m: int = _parameter()
    n: int = _parameter()
    degree: int = _degree()


class VerifyRequest(CommandRequest):
    identity: str
    d: int = _parameter(minimum=1)
    m: int = _parameter()
    n: int = _parameter(default=0)
    degree: int = _degree()


class TensorRequest(CommandRequest, PartitionField):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str = Field(pattern='^(spo|osp)$')
    mu: Partition
    gamma: Partition
    d: int = _parameter(minimum=1)
    r: int = _parameter(minimum=1)
    m: int = _parameter()
    n: int = _parameter()
    rank: Optional[int] = Field(default=None, ge=1, le=2 * compute_config.MAX_DEGREE)


class WGroupRequest(CommandRequest, PartitionField):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str = Field(pattern='^(spo|osp)$')
    lam: Partition
    d: int = _parameter(minimum=1)
    m: int = Field(ge=0, le=4 * compute_config.MAX_PARAMETER)
    bruteforce: bool = False


class HwvCheckRequest(CommandRequest, PartitionField):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: Partition
    d: int = _parameter(minimum=1)
    m: int = _parameter()
    n: int = _parameter()
    group: str = Field(pattern='^(O|Sp)$')


class SelftestRequest(CommandRequest):
    quick: bool = False


REQUEST_MODELS = {
    'hookschur': HookSchurRequest,
    'character': CharacterRequest,
    'trivial-character': TrivialCharacterRequest,
    'verify': VerifyRequest,
    'tensor': TensorRequest,
    'wgroup': WGroupRequest,
    'hwv-check': HwvCheckRequest,
    'selftest': SelftestRequest,
}


def build_request(command: str, fields: dict) -> CommandRequest:
    """
    Validate parsed command-line fields into the request model of a subcommand.

    Raises:
        pydantic.ValidationError: a field violates its constraint
        KeyError: unknown subcommand
    """
    model = REQUEST_MODELS[command]
    known = {name: value for name, value in fields.items()
             if name in model.model_fields and name != 'command' and value is not None}
    return model(command=command, **known)
