from __future__ import annotations

import pytest

from tac_approx.utils.platform import is_macos, is_windows

pytestmark = [
    pytest.mark.unit,
]


@pytest.mark.parametrize(
    ("system", "macos", "windows"),
    [
        ("Darwin", True, False),
        ("Windows", False, True),
        ("Linux", False, False),
    ],
)
def test_platform_checks(
    monkeypatch: pytest.MonkeyPatch,
    system: str,
    macos: bool,  # noqa: FBT001
    windows: bool,  # noqa: FBT001
) -> None:
    # Arrange
    monkeypatch.setattr("platform.system", lambda: system)

    # Act & Assert
    assert is_macos() is macos
    assert is_windows() is windows
