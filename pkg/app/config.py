import os

from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    ENVIRONMENT: str = "dev"
    LOG_LEVEL: str = "INFO"

    # Run defaults. Every value used by a CLI run is echoed into its report.
    DEFAULT_SAMPLES: int = 10_000
    DEFAULT_SEED: int = 7
    DEFAULT_TAIL: int = 1_000
    DEFAULT_P_MAX: int = 5
    DEFAULT_HORIZON: int = 10_000
    DEFAULT_GRID_SIZE: int = 100
    DEFAULT_T_GRID: list[float] = [10.0 ** k for k in range(-3, 4)]
    DEFAULT_ALPHAS: list[float] = [0.1, 0.5, 0.9]
    DEFAULT_EPSILON: float = 0.1

    model_config = SettingsConfigDict(
        env_prefix="ANTINORM_",
        env_file=os.getenv("ENV_FILE", ".env"),
        extra="ignore",
    )


# read once at import; callers use this instance
config = Config()
