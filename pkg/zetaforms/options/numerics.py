"""Module for managing global numeric options in a thread-safe manner."""

from threading import Lock
from typing import Optional, Tuple


class NumericsOptions:
    """
    Thread-safe singleton class for process-wide numeric configuration.
    Every getter doubles as a setter when passed a value, mirroring how the
    options are read everywhere else: NumericsOptions.guard_digits().
    """

    __lock = Lock()

    # Extra decimal digits carried on top of a caller's target. Callers add
    # the magnitude of any large prefactor on top of this.
    __guard_digits = 15

    # Upper limit on terms summed for a single slowly convergent series
    # (the Beta-factor series and the hypergeometric row). Cutoffs double
    # from initial_terms until the tail bound is met or this is exceeded.
    __term_budget = 2**17
    __initial_terms = 256

    # Thread fan-out used for independent tasks (poles of a decomposition,
    # cases of the acceptance suite). Sums themselves are never split.
    __max_workers = 4

    # Float evaluation of R refuses points closer to a pole than
    # 10^-(working dps // pole_threshold_divisor).
    __pole_threshold_divisor = 2

    def __new__(cls):
        raise ValueError("NumericsOptions cannot be instantiated")

    @classmethod
    def guard_digits(cls, value: Optional[int] = None) -> int:
        with cls.__lock:
            if value is not None:
                cls.__ensure_positive("guard_digits", value)
                cls.__guard_digits = value
            return cls.__guard_digits

    @classmethod
    def term_budget(cls, value: Optional[int] = None) -> int:
        with cls.__lock:
            if value is not None:
                cls.__ensure_positive("term_budget", value)
                cls.__term_budget = value
            return cls.__term_budget

    @classmethod
    def initial_terms(cls, value: Optional[int] = None) -> int:
        with cls.__lock:
            if value is not None:
                cls.__ensure_positive("initial_terms", value)
                cls.__initial_terms = value
            return cls.__initial_terms

    @classmethod
    def max_workers(cls, value: Optional[int] = None) -> int:
        with cls.__lock:
            if value is not None:
                cls.__ensure_positive("max_workers", value)
                cls.__max_workers = value
            return cls.__max_workers

    @classmethod
    def pole_threshold_divisor(cls, value: Optional[int] = None) -> int:
        with cls.__lock:
            if value is not None:
                cls.__ensure_positive("pole_threshold_divisor", value)
                cls.__pole_threshold_divisor = value
            return cls.__pole_threshold_divisor

    @classmethod
    def series_settings(cls) -> Tuple[int, int, int]:
        """The options a converged series depends on, usable as a cache key."""
        with cls.__lock:
            return (cls.__guard_digits, cls.__initial_terms, cls.__term_budget)

    @classmethod
    def __ensure_positive(cls, name: str, value: int):
        if value < 1:
            raise ValueError(f"{name} must be a positive integer")
