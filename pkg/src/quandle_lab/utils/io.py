"""
Document I/O

Reads JSON input documents, validates them against the schemas shipped in
quandle_lab/schemas, and writes deterministic JSON output.
"""

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional

from jsonschema import Draft7Validator

from quandle_lab.exceptions import DocumentError
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)

SCHEMA_KINDS = ("quandle", "cochain", "presentation", "group_ring", "triple_linking")


@lru_cache(maxsize=None)
def load_schema(kind: str) -> Dict[str, Any]:
    """
    Raises:
        ValueError: For an unknown document kind
    """
    if kind not in SCHEMA_KINDS:
        raise ValueError(f"Unknown document kind '{kind}'. Available: {', '.join(SCHEMA_KINDS)}")
    text = resources.files("quandle_lab.schemas").joinpath(f"{kind}.schema.json").read_text(
        encoding="utf-8"
    )
    schema: Dict[str, Any] = json.loads(text)
    Draft7Validator.check_schema(schema)
    return schema


def schema_errors(data: Any, kind: str) -> List[str]:
    """Every violation of the kind's schema, as 'path: message' lines"""
    validator = Draft7Validator(load_schema(kind))
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    messages = []
    for error in errors:
        where = "/".join(str(p) for p in error.absolute_path) or "<root>"
        messages.append(f"{where}: {error.message}")
    return messages


def validate_document(data: Any, kind: str) -> Dict[str, Any]:
    """
    Raises:
        DocumentError: Listing all schema violations
    """
    messages = schema_errors(data, kind)
    if messages:
        raise DocumentError(f"Invalid {kind} document: {messages[0]}", messages)
    return data  # type: ignore[no-any-return]


def load_json(path: Path) -> Any:
    """
    Raises:
        DocumentError: If the file is missing or not JSON
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise DocumentError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path} is not valid JSON: {e}") from e


def read_document(path: Path, kind: str) -> Dict[str, Any]:
    """Load a JSON file and validate it against the kind's schema"""
    data = validate_document(load_json(path), kind)
    logger.debug(f"Read {kind} document from {path}")
    return data


def dump_json(data: Any) -> str:
    """Stable JSON text: fixed indentation, insertion-ordered keys, UTF-8"""
    return json.dumps(data, indent=2, ensure_ascii=False)


def write_json(data: Any, path: Optional[Path] = None) -> str:
    """Serialize data, writing it to path when given; returns the text"""
    text = dump_json(data)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote {path}")
    return text
