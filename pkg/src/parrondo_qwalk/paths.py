"""
Path handling for configuration inputs and output artifacts.
"""

import os
import pathlib
import typing


PathLike = typing.Union[str, os.PathLike]


class NonExistentPathError(Exception):
    """A required input path is missing."""

    def __init__(self, path: typing.Optional[PathLike]=None) -> None:
        self.path = "The requested path" if path is None else str(path)

    def __str__(self) -> str:
        return f"{self.path} does not exist."


def fullpath(path: PathLike, strict: bool=False) -> pathlib.Path:
    """Return `path` with ``~`` expanded and all links resolved.

    Raises
    ------
    `~NonExistentPathError`
        `strict` is true and nothing exists at the resolved location.
    """
    resolved = pathlib.Path(path).expanduser().resolve()
    if strict and not resolved.exists():
        raise NonExistentPathError(path)
    return resolved


def output_path(
    path: PathLike,
    suffix: typing.Optional[str]=None,
) -> pathlib.Path:
    """Resolve a destination, replacing its suffix when one is given.

    The parent directory must already exist.
    """
    resolved = fullpath(path)
    if suffix is None or resolved.suffix == suffix:
        return resolved
    return resolved.with_suffix(suffix)


def strip_inline_comments(line: str, markers: typing.Iterable[str]) -> str:
    """Drop everything from the first comment marker onward."""
    for marker in markers:
        line = line.partition(marker)[0]
    return line.strip()
