from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from sympy import isprime

if TYPE_CHECKING:
    from tac_approx.session import Session

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Computation settings shared by a session."""

    model_config = ConfigDict(extra="ignore", frozen=True)

    modulus: int = 32003
    """Characteristic of the ground field."""

    max_resolution_length: int = 20
    """Longest resolution computed while waiting for periodicity."""

    default_window: tuple[int, int] = (-6, 6)
    """Degrees checked by verifications when a command does not name a window."""

    resolution_slack: int = 2
    """Extra degrees computed when a resolution is extended on demand."""

    seed: int = 0
    """Seed for the random scalar combinations used when searching for equivalences."""

    progress: bool = False
    """Show progress bars for long resolution loops."""

    @field_validator("modulus")
    @classmethod
    def _check_modulus(cls, value: int) -> int:
        if not isprime(value):
            msg = f"Field characteristic must be a prime; got {value}"
            raise ValueError(msg)

        return value

    @field_validator("max_resolution_length", "resolution_slack")
    @classmethod
    def _check_non_negative(cls, value: int) -> int:
        if value < 0:
            msg = "Lengths must be non-negative"
            raise ValueError(msg)

        return value

    @model_validator(mode="after")
    def _check_window(self) -> Settings:
        lo, hi = self.default_window
        if lo > hi:
            msg = f"Empty window {lo}..{hi}"
            raise ValueError(msg)

        return self

    @classmethod
    def from_session(cls, session: Session, **overrides: Any) -> Settings:
        """Settings for a session: its `field` line, then explicit overrides such as command line options."""
        values = {key: value for key, value in overrides.items() if value is not None}
        if session.modulus is not None:
            values.setdefault("modulus", session.modulus)

        logger.debug("Session settings overrides: %s", values)
        return cls(**values)
