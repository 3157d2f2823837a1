"""Version parsing and total ordering for major.minor.patch-style versions.

Library releases overwhelmingly follow a three-component numbering scheme,
but strings seen in the wild also come as two components ("1.2"), four
components ("1.2.3.4") or with a dash suffix ("2.0.0-rc1").  Two components
imply patch zero; a fourth numeric component and any dash suffix are folded
into a trailing ``extra`` token that only participates in ordering as a
tie-breaker.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class VersionParseError(ValueError):
    """Raised for strings that do not follow the accepted version grammar."""


_VERSION_RE = re.compile(
    r"^(\d+)\.(\d+)(?:\.(\d+)(?:\.(\d+))?)?(?:-(.+))?$"
)


@dataclass(frozen=True)
class SemVer:
    """A parsed version: numeric triple plus an optional trailing token.

    Ordering is lexicographic on (major, minor, patch); for equal triples a
    version without ``extra`` sorts after one that has it (a plain release
    outranks its pre-releases), and two extras compare as strings.
    """

    major: int
    minor: int
    patch: int
    extra: str | None = None

    def __post_init__(self) -> None:
        if self.major < 0 or self.minor < 0 or self.patch < 0:
            raise VersionParseError(f"negative component in {self!r}")

    def _key(self) -> tuple[int, int, int, bool, str]:
        return (self.major, self.minor, self.patch, self.extra is None, self.extra or "")

    def __lt__(self, other: "SemVer") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "SemVer") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "SemVer") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "SemVer") -> bool:
        return self._key() >= other._key()

    @property
    def branch(self) -> tuple[int, int]:
        """The (major, minor) patch branch this version belongs to."""
        return (self.major, self.minor)

    def __str__(self) -> str:
        base = f"{self.major}.{self.minor}.{self.patch}"
        return base if self.extra is None else f"{base}-{self.extra}"


def parse_version(text: str) -> SemVer:
    """Parse ``text`` into a :class:`SemVer`.

    Accepts 2 to 4 dot-separated non-negative integer components with an
    optional ``-suffix``.  Two components imply ``patch=0``; a fourth numeric
    component is folded into ``extra`` (joined with the suffix when both are
    present).  Anything else raises :class:`VersionParseError`.
    """
    if not isinstance(text, str):
        raise VersionParseError(f"expected string, got {type(text).__name__}")
    m = _VERSION_RE.match(text.strip())
    if m is None:
        raise VersionParseError(f"malformed version string: {text!r}")
    major, minor, patch, fourth, suffix = m.groups()
    extra: str | None
    if fourth is not None and suffix is not None:
        extra = f"{fourth}-{suffix}"
    else:
        extra = fourth if fourth is not None else suffix
    return SemVer(int(major), int(minor), int(patch or 0), extra)


def try_parse_version(text: str) -> SemVer | None:
    """Like :func:`parse_version` but returns ``None`` on malformed input."""
    try:
        return parse_version(text)
    except VersionParseError:
        return None


def compare_versions(a: SemVer, b: SemVer) -> int:
    """Total order over versions: -1 if a < b, 0 if equal, 1 if a > b."""
    ka, kb = a._key(), b._key()
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0
