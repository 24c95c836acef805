"""Engine configuration: size guards, search budgets and worker count."""

from dataclasses import dataclass, replace

from .errors import PreconditionError


@dataclass(frozen=True)
class EngineConfig:
    """Limits shared by the Betti, homology and search engines.

    Attributes:
        max_n: Largest ground set for full Betti tables (2^n subset sweep)
        clique_guard: Largest ground set for full clique-complex enumeration
        search_budget: Memoized states for subclutter/chordality/quotient searches
        collapse_budget: Memoized states for collapse searches
        workers: Process count for Betti-table assembly (1 = sequential)
    """

    max_n: int = 16
    clique_guard: int = 20
    search_budget: int = 10**6
    collapse_budget: int = 10**6
    workers: int = 1

    def __post_init__(self):
        for name in ("max_n", "clique_guard", "search_budget", "collapse_budget", "workers"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be positive")

    def with_overrides(self, **changes) -> "EngineConfig":
        """Return a copy with the non-None keyword arguments applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


DEFAULT_CONFIG = EngineConfig()
