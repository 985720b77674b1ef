import csv
import io
import json
import math
import os

from core.config import OUTPUT_DIR

# printed decimals for every float in an artifact
DECIMALS = 10


def format_number(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{DECIMALS}f}"


def _plain(value):
    """Floats rounded to DECIMALS, containers walked, the rest kept."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        # JSON has no infinity; CSV writes "inf", JSON writes null
        return round(float(value), DECIMALS) if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "tolist"):
        return _plain(value.tolist())
    return str(value)


def to_csv(header: list[str], rows, comments: list[str] = ()) -> str:
    buffer = io.StringIO()
    for line in comments:
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else format_number(v) for v in row])
    return buffer.getvalue()


def to_json(payload: dict) -> str:
    # insertion order is the key order
    return json.dumps(_plain(payload), indent=2, ensure_ascii=False) + "\n"


def save_locally(filename: str, content: str, directory: str = OUTPUT_DIR) -> str:
    os.makedirs(directory, exist_ok=True)
    file_path = os.path.join(directory, filename)

    with open(file_path, "w", encoding="utf-8", newline="") as f:
        f.write(content)

    return file_path


def store_artifact(content: str, output: str) -> str:
    """
    Single entry point. A bare file name lands in the output directory,
    a path with directories is written as given.
    """
    directory, filename = os.path.split(output)
    return save_locally(filename, content, directory or OUTPUT_DIR)
