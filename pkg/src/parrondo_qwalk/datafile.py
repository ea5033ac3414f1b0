"""
Self-describing tabular output files.

Every file starts with metadata lines of the form ``# key: value``. CSV files
follow these with one header row and the data rows. JSON files hold an object
with ``metadata``, ``columns``, and ``rows`` members.
"""

import csv
import json
import numbers
import typing

import numpy

from . import paths


METADATA_PREFIX = '#'


class DataFileError(ValueError):
    """A data file is malformed."""


Metadata = typing.Sequence[typing.Tuple[str, str]]


def format_value(value: typing.Any) -> str:
    """Convert one table entry to its text form.

    Reals use the shortest representation that round-trips, so repeated runs
    produce identical bytes.
    """
    if isinstance(value, (bool, numpy.bool_)):
        return str(bool(value))
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return repr(float(value))
    return str(value)


def _check_metadata(metadata: Metadata) -> typing.List[typing.Tuple[str, str]]:
    checked = []
    for key, value in metadata:
        text = str(value)
        if '\n' in text or '\n' in key or ':' in key:
            raise DataFileError(
                f"Metadata entry {key!r} must be a single line"
                " with a colon-free key"
            ) from None
        checked.append((key, text))
    return checked


def write_csv(
    path: paths.PathLike,
    columns: typing.Sequence[str],
    rows: typing.Iterable[typing.Sequence[typing.Any]],
    metadata: Metadata=(),
) -> int:
    """Write a CSV file and return the number of data rows written."""
    target = paths.fullpath(path)
    entries = _check_metadata(metadata)
    count = 0
    with target.open('w', newline='', encoding='utf-8') as fp:
        for key, value in entries:
            fp.write(f"{METADATA_PREFIX} {key}: {value}\n")
        writer = csv.writer(fp, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
            count += 1
    return count


def write_json(
    path: paths.PathLike,
    columns: typing.Sequence[str],
    rows: typing.Iterable[typing.Sequence[typing.Any]],
    metadata: Metadata=(),
) -> int:
    """Write a JSON file and return the number of data rows written."""
    target = paths.fullpath(path)
    entries = _check_metadata(metadata)
    table = [[_json_value(v) for v in row] for row in rows]
    document = {
        'metadata': dict(entries),
        'columns': list(columns),
        'rows': table,
    }
    with target.open('w', encoding='utf-8') as fp:
        json.dump(document, fp, indent=2)
        fp.write('\n')
    return len(table)


def _json_value(value: typing.Any):
    if isinstance(value, (bool, numpy.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    return str(value)


def read_metadata(path: paths.PathLike) -> typing.Dict[str, str]:
    """Read the metadata of a CSV or JSON file written by this module."""
    source = paths.fullpath(path, strict=True)
    with source.open('r', encoding='utf-8') as fp:
        text = fp.read()
    if text.lstrip().startswith('{'):
        try:
            document = json.loads(text)
        except json.JSONDecodeError as err:
            raise DataFileError(f"Cannot parse {source}: {err}") from None
        return dict(document.get('metadata', {}))
    metadata = {}
    for line in text.splitlines():
        if not line.startswith(METADATA_PREFIX):
            break
        key, sep, value = line[len(METADATA_PREFIX):].partition(':')
        if not sep:
            raise DataFileError(
                f"Malformed metadata line in {source}: {line!r}"
            ) from None
        metadata[key.strip()] = value.strip()
    return metadata


def read_csv(
    path: paths.PathLike,
) -> typing.Tuple[
    typing.Dict[str, str],
    typing.List[str],
    typing.List[typing.List[str]],
]:
    """Read metadata, column names, and raw data rows from a CSV file."""
    source = paths.fullpath(path, strict=True)
    metadata = read_metadata(source)
    with source.open('r', newline='', encoding='utf-8') as fp:
        lines = [line for line in fp if not line.startswith(METADATA_PREFIX)]
    reader = csv.reader(lines)
    try:
        columns = next(reader)
    except StopIteration:
        raise DataFileError(f"{source} has no header row") from None
    return metadata, columns, [row for row in reader]
