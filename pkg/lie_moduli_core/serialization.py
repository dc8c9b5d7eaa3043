"""
JSON reading and writing of codifferentials.

Two input shapes are accepted:

    {"dim": 4, "brackets": [{"i": 2, "j": 4, "coeffs": {"1": "1"}}, ...]}
    {"matrix": [[...], ...]}            # n rows, C(n,2) columns in colex pair order

Rationals are strings "p/q" (integers may also be plain JSON ints).
Output always uses the bracket form.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Union

from .cochains import Codifferential
from .exact_math import to_rational
from .exceptions import DimensionMismatchError, MalformedInputError
from . import config as core_config


def _rational(value: Any, where: str):
    if isinstance(value, float):
        raise MalformedInputError(f"{where}: floats are not exact, write {value!r} as a 'p/q' string")
    try:
        return to_rational(value)
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"{where}: {e}") from e


def _from_brackets(document: Dict[str, Any]) -> Codifferential:
    n = document.get('dim')
    if not isinstance(n, int) or isinstance(n, bool) or n not in core_config.SUPPORTED_DIMENSIONS:
        raise MalformedInputError(f"'dim' must be one of {core_config.SUPPORTED_DIMENSIONS}, got {n!r}")
    entries = document['brackets']
    if not isinstance(entries, list):
        raise MalformedInputError("'brackets' must be a list")
    brackets: Dict[tuple, Dict[int, Any]] = {}
    for position, entry in enumerate(entries):
        if not isinstance(entry, dict) or not {'i', 'j', 'coeffs'} <= set(entry):
            raise MalformedInputError(f"brackets[{position}] needs keys 'i', 'j' and 'coeffs'")
        coeffs = entry['coeffs']
        if not isinstance(coeffs, dict):
            raise MalformedInputError(f"brackets[{position}].coeffs must be an object")
        try:
            pair = (int(entry['i']), int(entry['j']))
            brackets[pair] = {int(k): _rational(v, f"brackets[{position}].coeffs[{k}]") for k, v in coeffs.items()}
        except (TypeError, ValueError) as e:
            if isinstance(e, MalformedInputError):
                raise
            raise MalformedInputError(f"brackets[{position}]: {e}") from e
    try:
        return Codifferential.from_brackets(n, brackets)
    except DimensionMismatchError as e:
        raise MalformedInputError(str(e)) from e


def _from_matrix(document: Dict[str, Any]) -> Codifferential:
    rows = document['matrix']
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInputError("'matrix' must be a list of rows")
    values = [[_rational(v, f"matrix[{i}][{j}]") for j, v in enumerate(row)] for i, row in enumerate(rows)]
    if len(values) not in core_config.SUPPORTED_DIMENSIONS:
        raise MalformedInputError(f"'matrix' must have {core_config.SUPPORTED_DIMENSIONS} rows, got {len(values)}")
    if 'dim' in document and document['dim'] != len(values):
        raise MalformedInputError(f"'dim' is {document['dim']} but the matrix has {len(values)} rows")
    try:
        return Codifferential(values)
    except (DimensionMismatchError, ValueError) as e:
        raise MalformedInputError(str(e)) from e


def codifferential_from_dict(document: Any) -> Codifferential:
    """Reads either accepted shape. Jacobi is not checked here."""
    if not isinstance(document, dict):
        raise MalformedInputError(f"Expected a JSON object, got {type(document).__name__}")
    if 'matrix' in document:
        return _from_matrix(document)
    if 'brackets' in document:
        return _from_brackets(document)
    raise MalformedInputError("Expected a 'brackets' or a 'matrix' key")


def loads(text: str) -> Codifferential:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"Invalid JSON: {e}") from e
    return codifferential_from_dict(document)


def load(path: Union[str, Path]) -> Codifferential:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MalformedInputError(f"Cannot read {path}: {e}") from e
    return loads(text)


def codifferential_to_dict(d: Codifferential) -> Dict[str, Any]:
    brackets: List[Dict[str, Any]] = [
        {'i': i, 'j': j, 'coeffs': {str(k): str(c) for k, c in image.items()}}
        for (i, j), image in d.brackets().items()
    ]
    return {'dim': d.n, 'brackets': brackets}


def dumps(d: Codifferential, indent: int = 2) -> str:
    return json.dumps(codifferential_to_dict(d), indent=indent)


def to_json(payload: Any, indent: int = 2) -> str:
    """json.dumps for CLI payloads; anything not JSON native is written with str()."""
    return json.dumps(payload, indent=indent, default=str)
