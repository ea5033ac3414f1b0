import typing


class SweepValueError(ValueError):
    """Invalid sweep axis, specification, or preset."""


class GridPointError(RuntimeError):
    """The walk failed at one grid point of a sweep."""

    def __init__(
        self,
        message: str,
        panel: typing.Optional[int]=None,
        index: typing.Tuple[int, ...]=(),
        values: typing.Tuple[float, ...]=(),
    ) -> None:
        super().__init__(message)
        self.message = message
        self.panel = panel
        self.index = tuple(index)
        self.values = tuple(values)

    def __reduce__(self):
        """Support pickling across worker processes."""
        return (
            type(self),
            (self.message, self.panel, self.index, self.values),
        )

    def __str__(self) -> str:
        if self.panel is None:
            return self.message
        return (
            f"{self.message} (panel {self.panel}, grid index {self.index},"
            f" axis values {self.values})"
        )
