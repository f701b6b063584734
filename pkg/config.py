#!/usr/bin/env python3
"""
Simple configuration management for hopfscope.
Reads all settings from config.json file.
"""
import os
import json
from typing import Dict, Any
from pathlib import Path


def load_config() -> Dict[str, Any]:
    """Load configuration from config.json file."""
    config_path = Path(__file__).parent / "config.json"

    if not config_path.exists():
        print(f"⚠️  config.json not found at {config_path}")
        print("   Creating default config.json...")
        create_default_config(config_path)

    try:
        with open(config_path, 'r') as f:
            config = json.load(f)

        # Fill sections missing from older files
        defaults = get_default_config()
        for section, values in defaults.items():
            merged = dict(values)
            merged.update(config.get(section, {}))
            config[section] = merged

        # Override with environment variables if they exist
        config = override_with_env_vars(config)

        return config

    except Exception as e:
        print(f"❌ Error loading config.json: {e}")
        print("   Using default configuration...")
        return override_with_env_vars(get_default_config())


def _env_int(name: str):
    value = os.getenv(name)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        return None


def override_with_env_vars(config: Dict[str, Any]) -> Dict[str, Any]:
    """Override config values with environment variables."""
    # Compute settings
    threads = _env_int("HOPFSCOPE_THREADS")
    if threads is not None and threads > 0:
        config["compute"]["threads"] = threads

    bound = _env_int("HOPFSCOPE_CONDUCTOR_BOUND")
    if bound is not None and bound > 0:
        config["field"]["conductor_bound"] = bound

    # Storage locations
    if os.getenv("HOPFSCOPE_CACHE_DIR"):
        config["cache"]["cache_dir"] = os.getenv("HOPFSCOPE_CACHE_DIR")

    if os.getenv("HOPFSCOPE_REPORT_DIR"):
        config["report"]["output_dir"] = os.getenv("HOPFSCOPE_REPORT_DIR")

    # System Settings
    if os.getenv("LOG_LEVEL"):
        config["system"]["log_level"] = os.getenv("LOG_LEVEL").upper()

    if os.getenv("DEBUG_MODE"):
        config["system"]["debug_mode"] = os.getenv("DEBUG_MODE").lower() in ['true', '1', 'yes']

    return config


def create_default_config(config_path: Path):
    """Create a default config.json file."""
    with open(config_path, 'w') as f:
        json.dump(get_default_config(), f, indent=2)

    print(f"✅ Created default config.json at {config_path}")


def get_default_config() -> Dict[str, Any]:
    """Get default configuration."""
    return {
        "field": {
            "conductor_bound": 10000
        },
        "compute": {
            "threads": 1,
            "exhaustive": False,
            "random_seed": 20240601,
            "split_attempts": 8
        },
        "report": {
            "output_dir": "reports",
            "save_to_file": True,
            "indent": 2
        },
        "cache": {
            "enabled": True,
            "cache_dir": "cache",
            "ttl_seconds": 86400
        },
        "system": {
            "log_level": "INFO",
            "debug_mode": False
        }
    }


def get_field_settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get scalar field settings from config."""
    return config.get("field", {})


def get_compute_settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get computation settings from config."""
    return config.get("compute", {})


def get_report_settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get report settings from config."""
    return config.get("report", {})


def get_cache_settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get cache settings from config."""
    return config.get("cache", {})


def get_system_settings(config: Dict[str, Any]) -> Dict[str, Any]:
    """Get system settings from config."""
    return config.get("system", {})


# Load configuration when module is imported
config = load_config()
