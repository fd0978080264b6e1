from time import perf_counter
from typing import Optional


class Timer:
    """Wall-clock stopwatch for report sections; only shown with --timings."""

    def __init__(self):
        self.__elapsed: float = 0.0
        self._start: Optional[float] = None

    def __enter__(self):
        self._start = perf_counter()
        return self

    def __exit__(self, *args):
        self.__elapsed = perf_counter() - self._start

    @property
    def elapsed(self) -> float:
        return self.__elapsed
