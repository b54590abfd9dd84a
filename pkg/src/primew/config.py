# src/primew/config.py

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Settings:
    """
    Tunables shared by the sieve, the sweeps and the W kernel.

    There are no config files or environment variables: the CLI builds one of
    these from its flags, and library callers pass their own or use `DEFAULTS`.
    """

    sieve_ceiling: int = 10**9
    sieve_segment: int = 1 << 21  # odd slots per sieve segment
    index_block: int = 1 << 12  # odd slots per cumulative-count block
    shard_size: int = 1_000_000
    workers: int = 1
    marginal_tol: float = 1e-9
    max_iterations: int = 50

    @classmethod
    def from_dict(cls, config: dict | None) -> "Settings":
        """Overlay a plain dict of overrides on the defaults."""
        if not config:
            return cls()
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(config) - known)
        if unknown:
            raise ValueError(f"unknown settings: {', '.join(unknown)}")
        settings = cls(**{name: config.get(name, getattr(DEFAULTS, name)) for name in known})
        settings.validate()
        return settings

    def with_overrides(self, **changes) -> "Settings":
        settings = replace(self, **{k: v for k, v in changes.items() if v is not None})
        settings.validate()
        return settings

    def validate(self) -> None:
        if self.sieve_ceiling < 2:
            raise ValueError("sieve_ceiling must be at least 2")
        if self.sieve_segment < 1 or self.index_block < 1:
            raise ValueError("sieve_segment and index_block must be positive")
        if self.shard_size < 1:
            raise ValueError("shard_size must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.marginal_tol < 0:
            raise ValueError("marginal_tol must be nonnegative")


DEFAULTS = Settings()
