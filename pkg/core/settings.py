from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class AppConfig(BaseSettings):
    """Application configuration"""
    model_config = SettingsConfigDict(env_prefix="FERMAT_", extra="ignore")

    name: str = "fermat-factor"
    debug: bool = False
    log_level: str = "WARNING"


class SearchConfig(BaseSettings):
    """Fermat search configuration"""
    model_config = SettingsConfigDict(env_prefix="FERMAT_SEARCH_", extra="ignore")

    # candidates per split; the CLI's --unbounded lifts it
    default_budget: int = 10**8


class BenchConfig(BaseSettings):
    """Benchmark harness configuration"""
    model_config = SettingsConfigDict(env_prefix="FERMAT_BENCH_", extra="ignore")

    default_out: str = ""
    progress: bool = True


class Settings:
    """Main settings class"""
    def __init__(self):
        self.app = AppConfig()
        self.search = SearchConfig()
        self.bench = BenchConfig()


# global settings instance
settings = Settings()
