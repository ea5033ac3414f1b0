"""
Small helpers shared across `parrondo_qwalk`.
"""

import textwrap
import typing

# NOTE: Nothing in this module may import from `parrondo_qwalk`.


T = typing.TypeVar('T')


HELP_WIDTH = 70


def doc2help(
    obj: typing.Union[str, typing.Any], /,
    mode: str='summary',
    replacements: typing.Mapping[str, str]=None,
) -> str:
    """Turn a docstring into command-line help text.

    Parameters
    ----------
    obj
        A string, or any object whose `__doc__` holds the text.

    mode : {'summary', 'full'}
        'summary' returns the first line. 'full' returns the first line
        followed by every paragraph of the body, each re-wrapped to
        `HELP_WIDTH` columns.

    replacements : mapping from string to string, optional
        Substitutions applied to the raw text before formatting.
    """
    try:
        text = obj if isinstance(obj, str) else str(obj.__doc__)
    except AttributeError:
        raise TypeError(f"Cannot create help text from {obj!r}") from None
    for old, new in (replacements or {}).items():
        text = text.replace(old, new)
    lines = textwrap.dedent(text.lstrip('\n')).split('\n')
    summary = lines[0].strip()
    if mode == 'summary':
        return summary
    if mode != 'full':
        raise ValueError(f"Unknown help mode {mode!r}") from None
    paragraphs = []
    current: typing.List[str] = []
    for line in lines[1:] + ['']:
        if line.strip():
            current.append(line.strip())
        elif current:
            paragraphs.append(textwrap.fill(' '.join(current), HELP_WIDTH))
            current = []
    return '\n\n'.join([summary, *paragraphs])


def join(x: typing.Iterable[str], c: str='and', /, quoted: bool=False):
    """Join `x` into an English list with `c` before the last item.

    With `quoted=True`, each item appears as its `repr`.
    """
    f = repr if quoted else str
    items = [f(i) for i in x]
    if len(items) < 3:
        return f" {c} ".join(items)
    return f"{', '.join(items[:-1])}, {c} {items[-1]}"


def autostr(_obj: typing.Type[T]=None):
    """Class decorator that builds `__repr__` as ``Name(<str>)``.

    A class that defines its own `__repr__` keeps it. A class without a
    custom `__str__` reprs as its bare name.
    """
    def wrapper(cls):
        def _repr(self) -> str:
            name = type(self).__name__
            if _has_own_str(type(self)):
                return f"{name}({self})"
            return name
        if '__repr__' not in cls.__dict__:
            cls.__repr__ = _repr
        return cls
    if _obj is None:
        return wrapper
    return wrapper(_obj)


def _has_own_str(cls: type) -> bool:
    """True unless `cls` inherits `object.__str__`.

    Calling the default `__str__` from the generated `__repr__` would recurse.
    """
    return getattr(cls, '__str__') is not object.__str__
