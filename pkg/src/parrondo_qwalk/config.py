"""
Support for plain-text configuration files.

A configuration file holds one ``key = value`` pair per line. Lines starting
with a comment marker are ignored and inline comments are stripped. Keys mirror
the long command-line flags, so ``coin-a = 2.395,0.513,0.909`` and
``coin_a = 2.395,0.513,0.909`` both stand for ``--coin-a``. A key may appear
more than once (for example, two ``axis`` lines for a two-axis sweep).
"""

import collections.abc
import pathlib
import typing

from . import etc
from . import paths


class ConfigKeyError(KeyError):
    """A configuration file does not define, or may not define, a key."""


class ConfigSyntaxError(ValueError):
    """A configuration file contains a malformed line."""


def normalize_key(key: str) -> str:
    """Convert a configuration key to the form of its command-line flag."""
    return key.strip().replace('_', '-').lower()


@etc.autostr
class ConfigFile(collections.abc.Mapping):
    """An interface to one configuration file.

    Look-up by key returns the last value given for that key. Use `getall` to
    retrieve every value of a repeated key. Values are strings; converting them
    is up to the consumer, which typically feeds them through the same parser
    as the command line.
    """

    def __init__(
        self,
        filepath: pathlib.Path,
        comments: typing.List[str],
    ) -> None:
        """Initialize this instance.

        This class is not intended for direct instantiation. Please see
        `~configfile`.
        """
        self._filepath = filepath
        self._comments = comments
        self._pairs = None

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return str(self.source)

    def __iter__(self) -> typing.Iterator[str]:
        """Called for iter(self)."""
        return iter(dict(self.pairs))

    def __len__(self) -> int:
        """Called for len(self)."""
        return len(dict(self.pairs))

    def __getitem__(self, key: str) -> str:
        """Get the last value of a configuration option."""
        values = self.getall(key)
        if values:
            return values[-1]
        raise ConfigKeyError(key)

    def getall(self, key: str) -> typing.List[str]:
        """Get every value of a configuration option, in file order."""
        name = normalize_key(key)
        return [v for k, v in self.pairs if k == name]

    @property
    def pairs(self) -> typing.List[typing.Tuple[str, str]]:
        """The parsed key-value pairs, in file order."""
        if self._pairs is None:
            comments = set(self._comments or ['#'])
            self._pairs = _parse_config(self.source, comments)
        return self._pairs

    @property
    def source(self) -> pathlib.Path:
        """The path to the parsed configuration file."""
        return self._filepath


def _parse_config(
    filepath: pathlib.Path,
    comments: typing.Iterable[str]=None,
) -> typing.List[typing.Tuple[str, str]]:
    """Parse a configuration file into key-value pairs.

    This function reads the file line by line. It ignores blank lines and lines
    that begin with a comment character, strips inline comments from the rest,
    and splits each remaining line at its first equals sign.
    """
    pairs = []
    cmnt = tuple(comments or ())
    with filepath.open('r') as fp:
        for number, line in enumerate(fp, start=1):
            line = line.rstrip('\n')
            if line.strip() == '' or line.lstrip()[0] in cmnt:
                continue
            tmp = paths.strip_inline_comments(line, cmnt)
            key, sep, value = tmp.partition('=')
            if not sep or not key.strip():
                raise ConfigSyntaxError(
                    f"{filepath}, line {number}: expected 'key = value',"
                    f" got {line!r}"
                ) from None
            pairs.append((normalize_key(key), value.strip()))
    return pairs


def configfile(
    filepath: paths.PathLike,
    comments: typing.Optional[typing.Iterable[str]]=None,
) -> ConfigFile:
    """Create an interface to a configuration file.

    Parameters
    ----------
    filepath : string or path
        The path to the configuration file. This function will convert the
        argument to a fully-qualified path, which must exist.

    comments : list of strings, default='#'
        Single-character strings to interpret as comment markers.

    Returns
    -------
    `~ConfigFile`

    Raises
    ------
    `~paths.NonExistentPathError`
        The file does not exist.
    """
    return ConfigFile(
        paths.fullpath(filepath, strict=True),
        comments=list(comments or ['#']),
    )
