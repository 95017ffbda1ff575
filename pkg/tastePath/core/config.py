from typing import List

from pydantic_settings import BaseSettings
from pydantic import ConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "tastePath"
    PROJECT_DESCRIPTION: str = "Pathlet learning on musical-genre listening trajectories"
    VERSION: str = "0.1.0"

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILES: List[str] = []
    LOG_CONSOLE: bool = True

    # Execution
    THREADS: int = 1
    DEFAULT_CONFIG_PATH: str = "configs/default.yaml"

    # Written into every stage manifest; bump when an artifact layout changes
    ARTIFACT_VERSION: int = 1

    model_config = ConfigDict(
        env_file=".env",
        env_prefix="TASTEPATH_",
        extra="ignore",
    )


settings = Settings()
