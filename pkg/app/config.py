from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Exhaustive sweeps
    EXHAUSTIVE_MAX_LINES: int = 20

    # Dense oracle bounds (radix 2 / radix 4)
    DENSE_MAX_LINES_NCV: int = 8
    DENSE_MAX_LINES_NCV_V1: int = 6

    # Numerical tolerances
    AMPLITUDE_TOLERANCE: float = 1e-10
    UNITARY_TOLERANCE: float = 1e-12

    # Verification
    VERIFY_WORKERS: int = 1
    VERIFY_CHUNK_SIZE: int = 4096
    RANDOM_SAMPLES: int = 1000

    # Cost rows (None = per-gate ancillary lines of the circuit)
    DEFAULT_ANCILLAE: int | None = None

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Server
    HOST: str = "0.0.0.0"
    PORT: int = 8000
    DEBUG: bool = False
    CORS_ORIGINS: list[str] = ["http://localhost:3000"]

    model_config = {"env_file": ".env", "env_file_encoding": "utf-8", "extra": "ignore"}


settings = Settings()
