"""Configuration management using environment variables."""

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (or .env)."""
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # ignore unknown env vars so they don't cause ValidationError
    )

    # Logging
    log_dir: str = "logs"
    run_journal_enabled: bool = True  # append one line per CLI run to {log_dir}/runs.jsonl

    # Simulation defaults
    default_seed: int = 12345
    default_threads: int = 1
    checkpoint_start: int = 100
    checkpoint_ratio: float = 10 ** 0.25  # geometric schedule, four points per decade
    max_active_run: int = 10 ** 9  # gamma >= 1 may never leave the maximum

    # Exact exit-time pmf: cap on (interior sites) x (steps) propagated
    pmf_max_work: float = 1e9

    # Statistics
    t_sampler_resolution: int = 200
    bootstrap_resamples: int = 1000
    # Above this many samples the bootstrap SE is replaced by std/sqrt(n)
    bootstrap_max_samples: int = 200_000
    ks_c_alpha: float = 1.628  # asymptotic KS constant at the 1% level

    # Verification budgets (acceptance defaults; CI shrinks them)
    verify_samples: int = 100_000
    verify_large_samples: int = 1_000_000
    verify_walkers: int = 10_000
    verify_t_max: int = 1_000_000
    verify_k_max: int = 1_000
    verify_cycle_replicas: int = 1_000  # replicas for the k-bounded journey checks
    verify_equivalence_samples: int = 5_000
    verify_equivalence_t: int = 10_000
    verify_tolerance_scale: float = 1.0


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
