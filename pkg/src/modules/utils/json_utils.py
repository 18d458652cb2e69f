"""
JSON Utilities

Provides deterministic JSON serialization and structured-file loading.
"""

import json
from pathlib import Path
from typing import Any, Dict

import yaml

from .constants import SUPPORTED_CONFIG_FORMATS


def dumps_deterministic(data: Any) -> str:
    """
    Serialize data to JSON with a stable layout.

    Key order is the insertion order of the producing code, so equal inputs
    always give byte-identical text.

    Args:
        data: JSON-compatible data

    Returns:
        JSON text terminated by a newline
    """
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def load_structured_file(path: str) -> Dict[str, Any]:
    """
    Load a YAML or JSON mapping from disk.

    Args:
        path: Path to a .yaml, .yml or .json file

    Returns:
        Parsed mapping (empty dict for an empty file)

    Raises:
        ValueError: If the file is missing, has an unsupported suffix or is not a mapping
    """
    file_path = Path(path)
    if not file_path.exists():
        raise ValueError(f"config file not found: {path}")

    suffix = file_path.suffix.lower().lstrip('.')
    if suffix not in SUPPORTED_CONFIG_FORMATS:
        raise ValueError(
            f"unsupported config format '{file_path.suffix}' "
            f"(expected one of: {', '.join(SUPPORTED_CONFIG_FORMATS)})"
        )

    with open(file_path, 'r', encoding='utf-8') as f:
        try:
            if suffix == 'json':
                data = json.load(f)
            else:
                data = yaml.safe_load(f)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise ValueError(f"could not parse config file {path}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must contain a mapping")
    return data
