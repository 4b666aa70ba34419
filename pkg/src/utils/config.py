"""Configuration management for the modsurf toolkit."""

import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()

DEFAULT_CONFIG_PATH = str(Path(__file__).resolve().parents[2] / "config" / "modsurf_config.yaml")


class ProjectConfig(BaseSettings):
    """Project identity and log level."""
    model_config = SettingsConfigDict(env_prefix="MODSURF_", extra="ignore")

    project_name: str = "modsurf"
    environment: str = "development"
    log_level: str = "INFO"


class SearchConfig(BaseSettings):
    """Desk-scale caps for the exhaustive searches."""
    model_config = SettingsConfigDict(env_prefix="MODSURF_", extra="ignore")

    max_enumeration_vertices: int = 14
    max_brute_vertices: int = 6
    max_literal_vertices: int = 4
    max_pants_vertices: int = 12
    max_flip_triangles: int = 10
    max_rotation_systems: int = 200_000_000
    max_defect_support: int = 12
    max_pattern_vertices: int = 8
    max_circuit_length: int = 8
    heuristic_restarts: int = 40


class SamplingConfig(BaseSettings):
    """Monte Carlo defaults."""
    model_config = SettingsConfigDict(env_prefix="MODSURF_", extra="ignore")

    default_seed: int = 0
    max_attempts: int = 1_000_000
    chunk_size: int = 1000


class PerformanceConfig(BaseSettings):
    """Worker pool sizing."""
    model_config = SettingsConfigDict(env_prefix="MODSURF_", extra="ignore")

    max_workers: int = 1


class BaseConfig:
    """Base configuration combining all config sections."""
    def __init__(self):
        self.project = ProjectConfig()
        self.search = SearchConfig()
        self.sampling = SamplingConfig()
        self.performance = PerformanceConfig()

    @property
    def project_name(self) -> str:
        return self.project.project_name

    @property
    def environment(self) -> str:
        return self.project.environment

    @property
    def log_level(self) -> str:
        return self.project.log_level


class ConfigManager:
    """Manages toolkit configuration from YAML files and environment variables."""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or os.getenv("MODSURF_CONFIG", DEFAULT_CONFIG_PATH)
        self.base_config = BaseConfig()
        self._yaml_config = self._load_yaml_config()

    def _load_yaml_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        config_file = Path(self.config_path)
        if not config_file.exists():
            return {}

        with open(config_file, 'r') as f:
            content = self._expand_env_vars(f.read())
            return yaml.safe_load(content) or {}

    def _expand_env_vars(self, content: str) -> str:
        """Expand ${VAR:-default} and ${VAR} references in YAML content."""
        pattern = r'\$\{([^}]+)\}'

        def replace_var(match):
            var_expr = match.group(1)
            if ':-' in var_expr:
                var_name, default_value = var_expr.split(':-', 1)
                return os.getenv(var_name.strip(), default_value.strip())
            return os.getenv(var_expr.strip(), '')

        return re.sub(pattern, replace_var, content)

    def reload(self, config_path: Optional[str] = None) -> None:
        """Re-read settings, optionally from a different YAML file."""
        if config_path:
            self.config_path = config_path
        self.base_config = BaseConfig()
        self._yaml_config = self._load_yaml_config()

    def _merged(self, section: str, defaults: Dict[str, Any]) -> Dict[str, Any]:
        # YAML config overrides environment config
        merged = dict(defaults)
        merged.update(self._yaml_config.get(section, {}) or {})
        return merged

    def get_search_config(self) -> Dict[str, Any]:
        """Get search caps."""
        return self._merged('search', self.base_config.search.model_dump())

    def get_sampling_config(self) -> Dict[str, Any]:
        """Get sampling configuration."""
        return self._merged('sampling', self.base_config.sampling.model_dump())

    def get_performance_config(self) -> Dict[str, Any]:
        """Get worker pool configuration."""
        return self._merged('performance', self.base_config.performance.model_dump())

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration."""
        return self._yaml_config.get('logging', {}) or {}

    def get_cap(self, name: str) -> int:
        """Look up a single search cap by name."""
        return int(self.get_search_config()[name])


# Global config instance
config = ConfigManager()
