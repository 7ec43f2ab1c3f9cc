"""
Record formats shared by the pipeline, the oracle and the CLI.

This module defines the JSON and CSV layouts written by the command-line
front end, the 7-decimal display rule for constants, and the terminal
color helpers used by the logger.
"""

import json
import sys
from decimal import Decimal, ROUND_HALF_EVEN
from pathlib import Path
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from ..common.exceptions import DomainError


SWEEP_COLUMNS = ["a", "chi", "ratio", "subproblem", "certified"]
SUBPROBLEM_COLUMNS = ["a", "chi", "ratio", "subproblem", "converged", "feasible", "multipliers_valid"]


def format_constant(value: float, places: int = 7) -> str:
    """
    Format a constant to a fixed number of decimals, round-half-even.

    Args:
        value: Value to format
        places: Number of decimals

    Returns:
        Decimal string such as "34.8992259"
    """
    if not np.isfinite(value):
        return "inf" if value > 0 else ("-inf" if value < 0 else "nan")
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_EVEN))


def to_jsonable(value):
    """Convert numpy scalars/arrays (recursively) to plain Python values."""
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        value = float(value)
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def serialize_record(record: dict) -> str:
    """
    Serialize a record to JSON text.

    Key order is preserved so identical inputs give byte-identical output.

    Args:
        record: Dictionary to serialize

    Returns:
        JSON text terminated by a newline
    """
    return json.dumps(to_jsonable(record), indent=2) + "\n"


def write_text(text: str, out: Optional[str] = None) -> None:
    """Write text to a file, or to stdout when no path is given."""
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def parse_polynomial(text: str) -> tuple[int, list[float]]:
    """
    Parse the polynomial JSON schema {"degree": n, "coeffs": [a0, ..., an]}.

    Args:
        text: JSON document

    Returns:
        Tuple of (degree, coefficient list)

    Raises:
        DomainError: If the document does not follow the schema
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f"invalid polynomial JSON: {e}") from e
    if not isinstance(data, dict) or "coeffs" not in data:
        raise DomainError("polynomial JSON needs a 'coeffs' list")
    coeffs = data["coeffs"]
    if not isinstance(coeffs, list) or not coeffs:
        raise DomainError("'coeffs' must be a non-empty list")
    try:
        coeffs = [float(c) for c in coeffs]
    except (TypeError, ValueError) as e:
        raise DomainError(f"non-numeric coefficient: {e}") from e
    degree = data.get("degree", len(coeffs) - 1)
    if not isinstance(degree, int) or degree != len(coeffs) - 1:
        raise DomainError(f"degree {degree!r} does not match {len(coeffs)} coefficients")
    return degree, coeffs


def polynomial_record(coeffs: Iterable[float]) -> dict:
    """Build the polynomial JSON record for a coefficient vector."""
    coeffs = [float(c) for c in coeffs]
    return {"degree": len(coeffs) - 1, "coeffs": coeffs}


def rows_to_csv(rows: list[dict], columns: list[str], path: Optional[str] = None) -> str:
    """
    Render rows as CSV with 9 significant digits and LF line endings.

    Args:
        rows: One dictionary per row
        columns: Column order (header row)
        path: Optional file to write

    Returns:
        The CSV text
    """
    frame = pd.DataFrame(rows, columns=columns)
    text = frame.to_csv(index=False, float_format="%.9g", lineterminator="\n")
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    return text


class Colors:
    """ANSI color codes for terminal output styling."""

    RESET = "\033[0m"
    BOLD = "\033[1m"

    RED = "\033[91m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    BLUE = "\033[94m"
    PURPLE = "\033[95m"
    CYAN = "\033[96m"
    GRAY = "\033[90m"


def colorize(text: str, color: str, enabled: bool = True) -> str:
    """
    Add ANSI color codes to text for terminal output.

    Args:
        text: Text to colorize
        color: Color code from Colors class
        enabled: Return the text unchanged when False

    Returns:
        Colorized text string
    """
    if not enabled:
        return text
    return f"{color}{text}{Colors.RESET}"
