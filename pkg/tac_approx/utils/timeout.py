from __future__ import annotations

import logging
import signal
from typing import TYPE_CHECKING, Any

from tac_approx.utils.platform import is_windows

if TYPE_CHECKING:
    from types import FrameType

logger = logging.getLogger(__name__)


class ComputationTimeoutError(Exception):
    """A session ran longer than its time limit."""


class Timeout:
    """Limit the wall clock time of a block with `SIGALRM`.

    Resolutions and Gröbner bases have no natural checkpoints, so the alarm interrupts them wherever they
    are. On Windows the limit is not enforced.
    """

    def __init__(self, seconds: float | None) -> None:
        """Initialize the limit.

        Args:
            seconds: Time limit; `None` or zero disables it.
        """
        self.seconds = seconds or None
        self._armed = False
        self._previous: Any = None

    def _handler(self, signum: int, frame: FrameType | None) -> Any:  # noqa: ARG002
        msg = f"Computation did not finish within {self.seconds:g} seconds"
        raise ComputationTimeoutError(msg)

    def __enter__(self) -> Timeout:
        if self.seconds is None:
            return self

        if is_windows():
            logger.warning("Time limits are not supported on Windows; running without one")
            return self

        self._previous = signal.signal(signal.SIGALRM, self._handler)
        signal.setitimer(signal.ITIMER_REAL, self.seconds)
        self._armed = True
        return self

    def __exit__(self, *args: object) -> bool:
        if self._armed:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, self._previous or signal.SIG_DFL)
            self._armed = False

        return False
