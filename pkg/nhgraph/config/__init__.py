"""Configuration module for the nhgraph application."""

from .config import (
    Config,
    load_yaml_config,
    parse_grid,
    require_positive,
    DEFAULT_CONFIG_PATH
)

__all__ = [
    'Config',
    'load_yaml_config',
    'parse_grid',
    'require_positive',
    'DEFAULT_CONFIG_PATH'
]
